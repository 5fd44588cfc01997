#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>

namespace qtl {

/// Largest carrier any structure in this library can have. Subsets of a
/// carrier are kept in one 64-bit word so membership, union, intersection
/// and complement are single instructions.
inline constexpr int kMaxCarrier = 64;

/// Set of small nonnegative integers (element indices), backed by a bitmask.
/// Value type: cheap to copy, compare and hash.
class SmallSet {
 public:
  constexpr SmallSet() = default;

  constexpr explicit SmallSet(std::uint64_t bits) : bits_(bits) {}

  constexpr SmallSet(std::initializer_list<int> xs) {
    for (int x : xs) insert(x);
  }

  /// The full set {0, ..., n-1}.
  static constexpr SmallSet full(int n) {
    return n >= kMaxCarrier ? SmallSet(~std::uint64_t{0})
                            : SmallSet((std::uint64_t{1} << n) - 1);
  }

  static constexpr SmallSet single(int x) { return SmallSet(std::uint64_t{1} << x); }

  constexpr bool contains(int x) const { return (bits_ >> x) & 1; }
  constexpr void insert(int x) { bits_ |= std::uint64_t{1} << x; }
  constexpr void erase(int x) { bits_ &= ~(std::uint64_t{1} << x); }

  constexpr bool empty() const { return bits_ == 0; }
  constexpr int count() const { return std::popcount(bits_); }

  /// Smallest member; undefined on the empty set.
  constexpr int min() const { return std::countr_zero(bits_); }

  constexpr std::uint64_t bits() const { return bits_; }

  constexpr bool subset_of(SmallSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool proper_subset_of(SmallSet other) const {
    return subset_of(other) && bits_ != other.bits_;
  }
  constexpr bool intersects(SmallSet other) const { return (bits_ & other.bits_) != 0; }

  friend constexpr SmallSet operator|(SmallSet a, SmallSet b) { return SmallSet(a.bits_ | b.bits_); }
  friend constexpr SmallSet operator&(SmallSet a, SmallSet b) { return SmallSet(a.bits_ & b.bits_); }
  friend constexpr SmallSet operator-(SmallSet a, SmallSet b) { return SmallSet(a.bits_ & ~b.bits_); }
  constexpr SmallSet& operator|=(SmallSet b) { bits_ |= b.bits_; return *this; }
  constexpr SmallSet& operator&=(SmallSet b) { bits_ &= b.bits_; return *this; }

  /// Complement relative to {0, ..., n-1}.
  constexpr SmallSet complement(int n) const { return full(n) - *this; }

  friend constexpr bool operator==(SmallSet a, SmallSet b) { return a.bits_ == b.bits_; }
  friend constexpr bool operator!=(SmallSet a, SmallSet b) { return a.bits_ != b.bits_; }
  /// Arbitrary but stable total order, handy for canonical sorting.
  friend constexpr bool operator<(SmallSet a, SmallSet b) { return a.bits_ < b.bits_; }

  class iterator {
   public:
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr bool operator!=(const iterator& o) const { return rest_ != o.rest_; }

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace qtl
