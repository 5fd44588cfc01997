#pragma once

#include <span>
#include <string>
#include <vector>

#include "qtl/quantale.hpp"

namespace qtl {

/// Ideal of a finite quantale: a nonempty, downward-closed subset that is
/// closed under binary joins. In a finite quantale every ideal is the
/// downset of its join, so each instance caches that generator.
///
/// An ideal remembers the fingerprint of the quantale it came from;
/// operations refuse to combine ideals whose fingerprints disagree.
class Ideal {
 public:
  Ideal() = default;  // empty sentinel; real instances come from the factories

  /// Validates the ideal laws and that the carrier is exactly the downset of
  /// its join. Throws InvalidInput (with a witness) if the subset is not an
  /// ideal, EmptyGeneratorSet if it is empty.
  static Ideal from_carrier(const Quantale& q, SmallSet carrier);

  /// The principal ideal: downset of x.
  static Ideal principal(const Quantale& q, int x);

  SmallSet carrier() const { return carrier_; }
  int generator() const { return generator_; }
  std::uint64_t owner() const { return owner_; }

  bool contains(int x) const { return carrier_.contains(x); }
  bool subset_of(const Ideal& other) const { return carrier_.subset_of(other.carrier_); }

  friend bool operator==(const Ideal& a, const Ideal& b) {
    return a.owner_ == b.owner_ && a.carrier_ == b.carrier_;
  }
  friend bool operator!=(const Ideal& a, const Ideal& b) { return !(a == b); }

 private:
  SmallSet carrier_;
  int generator_ = -1;
  std::uint64_t owner_ = 0;
};

/// True when the subset satisfies the ideal laws (nonempty, downward closed,
/// closed under binary joins).
bool is_ideal(const Quantale& q, SmallSet carrier);

/// Smallest ideal containing the generator set: all elements below a finite
/// join of products q * s with s in the set. Built literally from that
/// description (products, join closure, downward closure) and then checked
/// against the principal shortcut downset(join(gens)).
/// Throws EmptyGeneratorSet when gens is empty.
Ideal generated_ideal(const Quantale& q, SmallSet gens);

/// Join of a family: elements below finite joins drawn from the union.
/// The empty join is the zero ideal {bottom}.
Ideal ideal_join(const Quantale& q, std::span<const Ideal> ideals);
/// Meet of a family: the intersection. The empty meet is the whole quantale.
Ideal ideal_meet(const Quantale& q, std::span<const Ideal> ideals);
/// Product: elements below finite joins of pairwise products x * y.
Ideal ideal_product(const Quantale& q, const Ideal& a, const Ideal& b);

Ideal zero_ideal(const Quantale& q);
Ideal whole_ideal(const Quantale& q);

/// Every ideal, in canonical order (sorted by generator index). In a finite
/// quantale these are exactly the n principal downsets.
std::vector<Ideal> all_ideals(const Quantale& q);

struct IdealClassification {
  bool proper = false;
  bool maximal = false;
  bool minimal = false;
  bool prime = false;
  bool minimal_prime = false;
  bool primary = false;
  bool irreducible = false;
  bool strongly_irreducible = false;
};

/// Classifies one ideal. The improper ideal (the whole quantale) gets every
/// flag false by convention. Quantifiers over ideals run over all of them;
/// the primary check bounds exponents by the power cycle of each element.
IdealClassification classify(const Quantale& q, const Ideal& ideal);

/// Meet of all maximal ideals. Throws NoProperIdeals when the quantale has
/// none (the one-element quantale).
Ideal jacobson_radical(const Quantale& q);

enum class IdealClass {
  Proper,
  Maximal,
  Prime,
  MinimalPrime,
  Primary,
  Irreducible,
  StronglyIrreducible,
};

const char* ideal_class_name(IdealClass c);
/// Parses the CLI spelling ("proper", "maximal", ...). Throws InvalidInput.
IdealClass ideal_class_from_name(const std::string& name);

bool classification_has(const IdealClassification& flags, IdealClass c);

/// A chosen set of ideals treated as the points of a topological space.
struct Spectrum {
  std::string selector;
  std::vector<Ideal> points;  // deduplicated, sorted by generator index
  std::uint64_t owner = 0;

  int size() const { return static_cast<int>(points.size()); }
  /// Index of the given ideal among the points, or -1.
  int index_of(const Ideal& p) const;
};

/// The ideals of the given class, as a spectrum.
Spectrum spectrum(const Quantale& q, IdealClass c);

/// A caller-chosen spectrum. Points must be proper (ImproperPoint otherwise)
/// and belong to q (MixedQuantales otherwise). Duplicates are dropped.
/// include_zero additionally inserts the zero ideal; the selector string is
/// then reported as "zero-plus-custom" instead of "custom".
Spectrum custom_spectrum(const Quantale& q, std::vector<Ideal> points, bool include_zero = false);

}  // namespace qtl
