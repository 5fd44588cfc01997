#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qtl/lattice.hpp"

namespace qtl {

/// Finite commutative quantale with the lattice top as multiplicative unit:
/// a bounded lattice plus an associative, commutative product that
/// distributes over arbitrary joins and has x * top = x.
///
/// Values are immutable after construction and safe to share across threads.
class Quantale {
 public:
  /// Validates every axiom before accepting the table. Checks run cheapest
  /// first; the first failure is reported with a witness:
  ///   unit:           witness {x} where x * top != x
  ///   commutativity:  witness {x, y}
  ///   associativity:  witness {x, y, z}
  ///   distributivity: witness {x, members of S...} where
  ///                   x * join(S) != join of {x * s}
  /// The distributivity sweep covers every subset S (including the empty
  /// one) while 2^n stays affordable, then falls back to the equivalent
  /// empty-set + pairwise check on larger carriers.
  static Quantale build(Lattice lattice, std::vector<int> mul_table, std::string name = "",
                        std::vector<long long> element_meta = {});

  /// Runs exactly the checks build() runs against an existing instance.
  /// Used to re-certify enumerated corpora and to catch injected table
  /// corruption. Throws AxiomViolation on failure.
  void verify_axioms() const;

  /// Constructs without validation. Only for tests that need a deliberately
  /// broken instance; everything else must go through build().
  static Quantale unchecked(Lattice lattice, std::vector<int> mul_table, std::string name = "");

  const Lattice& lattice() const { return lattice_; }
  int size() const { return lattice_.size(); }
  int bottom() const { return lattice_.bottom(); }
  int top() const { return lattice_.top(); }

  int mul(int x, int y) const {
    range_check(x);
    range_check(y);
    return mul_[static_cast<size_t>(x) * size() + y];
  }

  /// x^n for n >= 1. Rejects n <= 0 with UndefinedPower: there is no
  /// canonical empty product here because top already acts as the unit and
  /// callers that meant "unit" should say top().
  int power(int x, long long n) const;

  /// {x^n : n >= 1}; finite because powers eventually cycle.
  SmallSet power_closure(int x) const;

  SmallSet idempotents() const;
  /// Idempotents other than bottom and top.
  SmallSet nontrivial_idempotents() const;

  const std::string& name() const { return name_; }

  /// Structural fingerprint of (size, order, table). Two independently built
  /// but identical quantales interoperate; anything else is flagged as
  /// mixing. Labels and name do not participate.
  std::uint64_t fingerprint() const { return fingerprint_; }

  /// Generator-specific per-element metadata (the divisor for the Zn family);
  /// empty for structures that have none.
  const std::vector<long long>& element_meta() const { return element_meta_; }

  const std::vector<int>& mul_table() const { return mul_; }

 private:
  Quantale(Lattice lattice, std::vector<int> mul_table, std::string name,
           std::vector<long long> element_meta);

  void range_check(int x) const { (void)lattice_.label(x); }
  void compute_fingerprint();

  Lattice lattice_;
  std::vector<int> mul_;
  std::string name_;
  std::vector<long long> element_meta_;
  std::uint64_t fingerprint_ = 0;
};

/// Relabels a multiplication table along perm (perm[old] = new):
/// out[perm[i]][perm[j]] = perm[mul[i][j]].
std::vector<int> permuted_table(const std::vector<int>& mul, const std::vector<int>& perm);

}  // namespace qtl
