#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qtl/error.hpp"
#include "qtl/smallset.hpp"

namespace qtl {

/// Finite bounded lattice over elements 0..n-1.
///
/// Elements are canonically ordered by a deterministic topological sort of
/// the order relation (bottom first, top last), so index 0 is always bottom
/// and index n-1 is always top. All binary tables are precomputed at build
/// time; queries are O(1).
class Lattice {
 public:
  struct Build {
    Lattice lattice;
    /// perm[input index] = canonical index.
    std::vector<int> perm;
  };

  /// Builds from labels and a list of order pairs (i, j) meaning
  /// element i <= element j. The pair list may be a covering relation, the
  /// full relation, or anything in between; the reflexive-transitive closure
  /// is taken. Throws:
  ///   EmptyCarrier     when labels is empty
  ///   SizeCap          when labels.size() exceeds size_cap (or kMaxCarrier)
  ///   InvalidInput     on duplicate labels or out-of-range pair indices
  ///   NotAPartialOrder when the closure has a two-element cycle
  ///   NotALattice      when some pair lacks a unique least upper bound or
  ///                    greatest lower bound
  static Build build_with_perm(std::vector<std::string> labels,
                               const std::vector<std::pair<int, int>>& leq_pairs,
                               int size_cap = kMaxCarrier);

  static Lattice build(std::vector<std::string> labels,
                       const std::vector<std::pair<int, int>>& leq_pairs,
                       int size_cap = kMaxCarrier);

  int size() const { return n_; }
  SmallSet universe() const { return SmallSet::full(n_); }

  bool leq(int x, int y) const { return up_[check(x)].contains(check(y)); }
  int join(int x, int y) const { return join_[check(x) * n_ + check(y)]; }
  int meet(int x, int y) const { return meet_[check(x) * n_ + check(y)]; }

  /// Join of a subset; the empty join is bottom.
  int join_set(SmallSet s) const;
  /// Meet of a subset; the empty meet is top.
  int meet_set(SmallSet s) const;

  /// All y with y <= x.
  SmallSet downset(int x) const { return down_[check(x)]; }
  /// All y with x <= y.
  SmallSet upset(int x) const { return up_[check(x)]; }

  int bottom() const { return 0; }
  int top() const { return n_ - 1; }

  /// Elements covered by top, i.e. maximal among the non-top elements.
  SmallSet coatoms() const;

  const std::string& label(int x) const { return labels_[check(x)]; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// True when y covers x (x < y with nothing strictly between).
  bool covers(int x, int y) const;

  bool operator==(const Lattice& other) const {
    return n_ == other.n_ && up_ == other.up_ && labels_ == other.labels_;
  }

 private:
  Lattice() = default;

  int check(int x) const {
    if (x < 0 || x >= n_) {
      throw Error(ErrorCode::ForeignElement,
                  "element index " + std::to_string(x) + " outside carrier of size " +
                      std::to_string(n_),
                  {x});
    }
    return x;
  }

  void compute_tables();
  void verify_lattice_identities() const;

  int n_ = 0;
  std::vector<std::string> labels_;
  std::vector<SmallSet> up_;    // up_[x] = {y : x <= y}
  std::vector<SmallSet> down_;  // down_[x] = {y : y <= x}
  std::vector<std::uint8_t> join_;
  std::vector<std::uint8_t> meet_;
};

}  // namespace qtl
