#pragma once

#include <cstdint>
#include <vector>

#include "qtl/ideal.hpp"
#include "qtl/quantale.hpp"
#include "qtl/topology.hpp"

namespace qtl {

/// A structure-preserving map between two quantales: monotone, preserving
/// binary joins, binary meets, multiplication, and the bottom element.
/// Validation happens once in build(); instances are immutable afterwards.
class QuantaleHom {
 public:
  /// Validates the map entrywise and algebraically. Throws InvalidInput for
  /// shape problems, BottomNotPreserved and HomAxiomViolation (with element
  /// witnesses) for broken axioms.
  static QuantaleHom build(Quantale source, Quantale target, std::vector<int> map);

  const Quantale& source() const { return source_; }
  const Quantale& target() const { return target_; }
  const std::vector<int>& map() const { return map_; }

  int apply(int x) const;

  /// Image of the underlying map as a subset of the target carrier.
  SmallSet image() const;
  bool is_injective() const;
  bool is_surjective() const;

  /// Preimage of the target's zero ideal.
  Ideal kernel() const;

  /// Preimage of an ideal of the target, itself an ideal of the source.
  Ideal contract(const Ideal& target_ideal) const;

 private:
  QuantaleHom(Quantale source, Quantale target, std::vector<int> map);

  Quantale source_;
  Quantale target_;
  std::vector<int> map_;
};

/// Quiet validity probe used by the enumerator; mirrors the checks in
/// QuantaleHom::build without constructing error objects.
bool hom_axioms_ok(const Quantale& source, const Quantale& target, const std::vector<int>& map);

/// All homomorphisms from source to target, in lexicographic map order.
/// Throws SizeCap when target_size^source_size exceeds the budget.
std::vector<QuantaleHom> enumerate_homs(const Quantale& source, const Quantale& target,
                                        std::uint64_t budget = std::uint64_t{1} << 20);

/// The map a homomorphism induces between spectra, by ideal contraction.
/// It runs against the arrow: a point of the target's spectrum pulls back
/// to a point of the source's spectrum.
struct InducedMap {
  /// point_map[target spectrum index] = source spectrum index
  std::vector<int> point_map;
};

/// Whether every ideal of the target that belongs to the given class
/// contracts to an ideal of the same class over the source. This is the
/// hypothesis the induced spectrum map needs in order to be well defined.
bool has_contraction_property(IdealClass cls, const QuantaleHom& hom);

/// Contracts every point of the target spectrum. Throws ContractionEscapes
/// when some contraction is not a point of the source spectrum, and
/// InvalidInput when the two spectra were built from different selectors.
/// Mixed selectors are permitted only behind the explicit flag.
InducedMap induced_map(const QuantaleHom& hom, const Spectrum& source_spectrum,
                       const Spectrum& target_spectrum,
                       bool allow_mismatched_selectors = false);

/// Whether the induced spectrum map is continuous: the preimage of every
/// closed set of the source space is closed in the target space.
bool is_continuous(const QuantaleHom& hom, const SubbasisTopology& source_space,
                   const SubbasisTopology& target_space);

/// Subbasis-level description of the induced map: the preimage of the basic
/// closed set of an ideal equals the basic closed set of the pushed-forward
/// generated ideal. Checked for every ideal of the source.
bool continuity_identity_holds(const QuantaleHom& hom, const Spectrum& source_spectrum,
                               const Spectrum& target_spectrum);

/// For a surjective homomorphism: whether the induced map is injective, hits
/// exactly the source-spectrum points above the kernel, and carries closed
/// sets to closed sets of that subspace. Throws NotSurjective otherwise.
bool homeo_onto_kernel_upset(const QuantaleHom& hom, const SubbasisTopology& source_space,
                             const SubbasisTopology& target_space);

/// Whether the image of the induced map is dense in the source space.
bool induced_image_dense(const QuantaleHom& hom, const SubbasisTopology& source_space,
                         const Spectrum& target_spectrum);

/// Order-theoretic density test: the kernel sits below the meet of all
/// points of the source spectrum. Throws EmptySpectrum when there are no
/// points to meet.
bool density_criterion(const QuantaleHom& hom, const Spectrum& source_spectrum);

/// Whether every source ideal containing the kernel is recovered by pushing
/// it forward (ideal generated by its elementwise image) and contracting
/// back. Surjective maps between familiar quotient-like structures have it;
/// general surjections need not, and several induced-map facts hinge on it.
bool saturated_above_kernel(const QuantaleHom& hom);

/// Closed-set description of pushing a basic closed set through the induced
/// map: for every ideal of the target, the closure of the image of its basic
/// closed set equals the basic closed set of its contraction. Holds whenever
/// the induced map is a bijection onto the points above the kernel; checked
/// literally for every target ideal.
bool closure_image_identity_holds(const QuantaleHom& hom, const SubbasisTopology& source_space,
                                  const Spectrum& target_spectrum);

/// outer after inner; the shared middle quantale must match structurally.
QuantaleHom compose(const QuantaleHom& outer, const QuantaleHom& inner);

}  // namespace qtl
