#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qtl/ideal.hpp"

namespace qtl {

/// Spectra with more points than this keep their closed-set lattice
/// unenumerated; checkers that need the full lattice (soberness,
/// spectrality, irreducible closed sets, the exhaustive cover search) refuse
/// with SizeCap and the report layer degrades them to "not evaluated".
inline constexpr int kClosedSetEnumerationCap = 20;

/// One subbasic closed set: the points whose ideals contain some fixed
/// ideal, tagged with that ideal when one exists. The empty set is always
/// subbasic; when no ideal produces it the tag stays empty.
struct SubbasicSet {
  SmallSet points;
  std::optional<Ideal> witness;
};

/// Topology on a spectrum, generated by the up-sets of single ideals as a
/// subbasis of closed sets. Closures are precomputed per point: p lies in
/// the closure of {q} exactly when every subbasic set containing q contains
/// p (in a finite space closed sets are intersections of finite unions of
/// subbasic sets, so this is the full closure).
class SubbasisTopology {
 public:
  /// Builds over the up-sets of every ideal of q, deduplicated by point set.
  /// Each distinct point set keeps the first ideal (in canonical ideal
  /// order) that produced it as its witness.
  static SubbasisTopology build(const Quantale& q, const Spectrum& spectrum);

  /// Builds a space from raw subbasic point sets, with no quantale behind
  /// it. Meant for exercising the purely topological checkers on handmade
  /// spaces (including pathological ones no spectrum can produce).
  static SubbasisTopology from_point_sets(int point_count, std::vector<SmallSet> subbasis);

  int point_count() const { return m_; }
  SmallSet points_universe() const { return SmallSet::full(m_); }
  const std::vector<SubbasicSet>& subbasis() const { return subbasis_; }
  const Spectrum& spectrum() const { return spectrum_; }

  SmallSet point_closure(int p) const { return point_closure_[static_cast<size_t>(p)]; }

  /// Topological closure of an arbitrary point set.
  SmallSet closure(SmallSet a) const;
  bool is_closed(SmallSet a) const { return closure(a) == a; }

  /// Every closed set (unions of point closures; a finite space has no
  /// others). Throws SizeCap over kClosedSetEnumerationCap points.
  std::vector<SmallSet> closed_sets() const;

 private:
  int m_ = 0;
  Spectrum spectrum_;
  std::vector<SubbasicSet> subbasis_;
  std::vector<SmallSet> point_closure_;
};

/// Up-set of a set of ideals among the points: everything containing the
/// meet of the set. The empty set of ideals yields the empty point set (not
/// the whole space). Throws MixedQuantales on foreign ideals.
SmallSet up_set(const Quantale& q, const Spectrum& spectrum, std::span<const Ideal> ideals);

/// Containment propagates to up-sets: for every pair of ideals I, J and
/// every point S, if meet(I, J) <= S then I <= S or J <= S. This is the
/// property that turns the subbasis into an honest closure operator.
bool satisfies_hkp(const Quantale& q, const Spectrum& spectrum);

struct KuratowskiOptions {
  /// Exhaust subsets while (#ideal subsets)^2 stays within this budget.
  std::uint64_t pair_budget = 1ull << 12;
  std::uint64_t seed = 0;
  std::uint64_t samples = 1ull << 12;
};

struct KuratowskiResult {
  bool holds = false;
  /// True when the subset space was too large and pairs were sampled
  /// (seeded) instead of exhausted.
  bool sampled = false;
  explicit operator bool() const { return holds; }
};

/// Direct check that X -> up_set(X) behaves as a closure operator on the
/// ideal subsets: empty set to empty set, extensive on point subsets,
/// idempotent, and additive (the up-set of a union is the union of the
/// up-sets).
KuratowskiResult is_kuratowski_upset(const Quantale& q, const Spectrum& spectrum,
                                     const KuratowskiOptions& opts = {});

/// True when the subbasis is already a basis of closed sets: the union of
/// any two subbasic sets is again subbasic, witnessed by the meet of their
/// ideals. Equivalently, up-sets of ideal sets need no finite-union stage.
bool is_closed_basis(const Quantale& q, const Spectrum& spectrum);

bool is_T0(const SubbasisTopology& t);
bool is_T1(const SubbasisTopology& t);

/// Irreducibility of a closed set: nonempty and not the union of two
/// strictly smaller closed sets. Throws NotClosed when c is not closed and
/// SizeCap past the enumeration cap.
bool is_irreducible(const SubbasisTopology& t, SmallSet c);
std::vector<SmallSet> irreducible_closed_sets(const SubbasisTopology& t);

/// Every irreducible closed set is the closure of exactly one point.
bool is_sober(const SubbasisTopology& t);

/// Generic-point reading of soberness on the subbasis: for every nonempty
/// irreducible subbasic set, the meet of its points is itself a point.
/// Needs the quantale behind the space.
bool sobriety_condition(const Quantale& q, const SubbasisTopology& t);

/// Quasi-compactness by finite-subcover search. Small open lattices get an
/// exhaustive sweep over covering subfamilies; larger ones fall back to the
/// subbasis route (no family of subbasic closed sets has the finite
/// intersection property while intersecting to nothing). The empty space
/// counts as quasi-compact.
bool is_quasi_compact(const SubbasisTopology& t);

/// Searches for a family of subbasic closed sets with the finite
/// intersection property and empty total intersection; quasi-compactness is
/// exactly the absence of one. Returns subbasis indices, or nothing. On a
/// finite space any such family is a finite subfamily of itself, so this
/// always comes back empty; the search is kept honest and exhaustive while
/// the subbasis is small.
std::optional<std::vector<int>> subbasis_fip_witness(const SubbasisTopology& t);

/// Both sides of the maximal-point characterization of quasi-compactness:
/// the space is quasi-compact iff every point sits below a maximal point
/// and the subspace of maximal points is quasi-compact. Returns true when
/// the two sides agree.
bool qc_characterization_holds(const Quantale& q, const SubbasisTopology& t);

/// Quasi-compact + T0 + sober + the quasi-compact opens form a basis closed
/// under finite intersections. Throws SizeCap past the enumeration cap.
bool is_spectral(const SubbasisTopology& t);

/// No partition into two nonempty closed (equivalently open) sets. Computed
/// from the specialization graph, which a finite space's components follow.
/// The empty space counts as connected.
bool is_connected(const SubbasisTopology& t);

enum class DisconnectionMode { Pair, Family };

/// Witness that two parts of the subbasis split the space: in Pair mode two
/// single subbasic sets, in Family mode two subfamilies. Both parts must
/// cover a nonempty share, be disjoint, and exhaust the space.
struct DisconnectionWitness {
  DisconnectionMode mode = DisconnectionMode::Pair;
  /// Pair mode: the witness ideals of the two sets.
  std::optional<Ideal> left, right;
  /// Family mode: subbasis indices of the two subfamilies.
  std::vector<int> left_family, right_family;
  SmallSet left_points, right_points;
};

std::optional<DisconnectionWitness> strong_disconnection(const SubbasisTopology& t,
                                                         DisconnectionMode mode);

/// Replays the construction that turns a pair disconnection into a
/// nontrivial idempotent element: requires the Jacobson radical to be the
/// zero ideal and every maximal ideal to be a point (PreconditionViolated
/// otherwise), confirms the witnessed split joins to the whole quantale and
/// multiplies to zero, then finds x in the left ideal and y in the right
/// with x v y = top and x, y nonzero (NoUnitPair if none) and returns x,
/// checked to satisfy x * x = x with x neither bottom nor top.
int extract_idempotent(const Quantale& q, const SubbasisTopology& t,
                       const DisconnectionWitness& witness);

}  // namespace qtl
