#include "qtl/error.hpp"

namespace qtl {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "parse error";
    case ErrorCode::InvalidInput: return "invalid input";
    case ErrorCode::SizeCap: return "size cap exceeded";
    case ErrorCode::ForeignElement: return "foreign element";
    case ErrorCode::MixedQuantales: return "mixed quantales";
    case ErrorCode::EmptyCarrier: return "empty carrier";
    case ErrorCode::NotAPartialOrder: return "not a partial order";
    case ErrorCode::NotALattice: return "not a lattice";
    case ErrorCode::AxiomViolation: return "axiom violation";
    case ErrorCode::UndefinedPower: return "undefined power";
    case ErrorCode::HomAxiomViolation: return "hom axiom violation";
    case ErrorCode::BottomNotPreserved: return "bottom not preserved";
    case ErrorCode::NotSurjective: return "not surjective";
    case ErrorCode::EmptyGeneratorSet: return "empty generator set";
    case ErrorCode::NoProperIdeals: return "no proper ideals";
    case ErrorCode::ImproperPoint: return "improper point";
    case ErrorCode::EmptySpectrum: return "empty spectrum";
    case ErrorCode::NotClosed: return "not closed";
    case ErrorCode::ContractionEscapes: return "contraction escapes spectrum";
    case ErrorCode::PreconditionViolated: return "precondition violated";
    case ErrorCode::NoUnitPair: return "no unit pair";
    case ErrorCode::LogicError: return "internal logic error";
  }
  return "unknown error";
}

}  // namespace qtl
