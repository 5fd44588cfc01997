#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qtl {

/// Machine-readable failure kinds. Everything the library rejects carries one
/// of these so callers (and the CLI exit-code mapping) can dispatch without
/// parsing messages.
enum class ErrorCode {
  // input / wiring problems
  ParseError,
  InvalidInput,
  SizeCap,
  ForeignElement,
  MixedQuantales,

  // order-structure problems
  EmptyCarrier,
  NotAPartialOrder,
  NotALattice,

  // algebra problems
  AxiomViolation,
  UndefinedPower,
  HomAxiomViolation,
  BottomNotPreserved,
  NotSurjective,

  // ideal / spectrum problems
  EmptyGeneratorSet,
  NoProperIdeals,
  ImproperPoint,
  EmptySpectrum,
  NotClosed,
  ContractionEscapes,
  PreconditionViolated,
  NoUnitPair,

  // should-never-happen internal consistency failures
  LogicError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, std::vector<int> witness = {})
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code),
        witness_(std::move(witness)) {}

  ErrorCode code() const { return code_; }

  /// Element (or point) indices pinning down the failure, when there are any.
  /// The meaning of the positions is documented at each throw site.
  const std::vector<int>& witness() const { return witness_; }

 private:
  ErrorCode code_;
  std::vector<int> witness_;
};

}  // namespace qtl
