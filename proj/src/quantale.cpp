#include "qtl/quantale.hpp"

#include <utility>

namespace qtl {
namespace {

/// Carriers small enough for the all-subsets distributivity sweep
/// (n * 2^n join evaluations).
constexpr int kExhaustiveDistributivityLimit = 16;

std::uint64_t fnv1a(std::uint64_t h, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) {
    h ^= (v >> (8 * i)) & 0xff;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace

Quantale::Quantale(Lattice lattice, std::vector<int> mul_table, std::string name,
                   std::vector<long long> element_meta)
    : lattice_(std::move(lattice)),
      mul_(std::move(mul_table)),
      name_(std::move(name)),
      element_meta_(std::move(element_meta)) {
  const size_t n = static_cast<size_t>(lattice_.size());
  if (mul_.size() != n * n) {
    throw Error(ErrorCode::InvalidInput,
                "multiplication table has " + std::to_string(mul_.size()) +
                    " entries; expected " + std::to_string(n * n));
  }
  for (int v : mul_) {
    if (v < 0 || v >= lattice_.size()) {
      throw Error(ErrorCode::InvalidInput,
                  "multiplication table entry " + std::to_string(v) + " outside carrier", {v});
    }
  }
  if (!element_meta_.empty() && element_meta_.size() != n) {
    throw Error(ErrorCode::InvalidInput, "element metadata size does not match carrier");
  }
  compute_fingerprint();
}

Quantale Quantale::build(Lattice lattice, std::vector<int> mul_table, std::string name,
                         std::vector<long long> element_meta) {
  Quantale q(std::move(lattice), std::move(mul_table), std::move(name),
             std::move(element_meta));
  q.verify_axioms();
  return q;
}

Quantale Quantale::unchecked(Lattice lattice, std::vector<int> mul_table, std::string name) {
  return Quantale(std::move(lattice), std::move(mul_table), std::move(name), {});
}

void Quantale::verify_axioms() const {
  const int n = size();
  const Lattice& lat = lattice_;
  auto lbl = [&](int x) { return "\"" + lat.label(x) + "\""; };

  // Unit law first: O(n), and the most common way hand-written tables break.
  for (int x = 0; x < n; ++x) {
    if (mul(x, top()) != x) {
      throw Error(ErrorCode::AxiomViolation,
                  "unit: " + lbl(x) + " * top = " + lbl(mul(x, top())) + ", expected " + lbl(x),
                  {x});
    }
  }

  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (mul(x, y) != mul(y, x)) {
        throw Error(ErrorCode::AxiomViolation,
                    "commutativity: " + lbl(x) + " * " + lbl(y) + " = " + lbl(mul(x, y)) +
                        " but " + lbl(y) + " * " + lbl(x) + " = " + lbl(mul(y, x)),
                    {x, y});
      }
    }
  }

  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const int xy = mul(x, y);
      for (int z = 0; z < n; ++z) {
        if (mul(xy, z) != mul(x, mul(y, z))) {
          throw Error(ErrorCode::AxiomViolation,
                      "associativity: (" + lbl(x) + " * " + lbl(y) + ") * " + lbl(z) +
                          " = " + lbl(mul(xy, z)) + " but " + lbl(x) + " * (" + lbl(y) +
                          " * " + lbl(z) + ") = " + lbl(mul(x, mul(y, z))),
                      {x, y, z});
        }
      }
    }
  }

  // Distributivity over arbitrary joins. Over a finite lattice the empty-set
  // case (x * bottom = bottom) plus the binary case imply the rest by
  // folding, so the subset sweep is capped; under the cap it runs in full
  // and doubles as a join_set exerciser.
  auto check_subset = [&](int x, SmallSet s) {
    const int lhs = mul(x, lat.join_set(s));
    SmallSet images;
    for (int y : s) images.insert(mul(x, y));
    const int rhs = lat.join_set(images);
    if (lhs != rhs) {
      std::string members;
      std::vector<int> witness{x};
      for (int y : s) {
        members += (members.empty() ? "" : ", ") + lat.label(y);
        witness.push_back(y);
      }
      throw Error(ErrorCode::AxiomViolation,
                  "distributivity: " + lbl(x) + " * join{" + members + "} = " + lbl(lhs) +
                      " but the join of the products is " + lbl(rhs),
                  witness);
    }
  };

  if (n <= kExhaustiveDistributivityLimit) {
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (int x = 0; x < n; ++x) {
      for (std::uint64_t bits = 0; bits < limit; ++bits) check_subset(x, SmallSet(bits));
    }
  } else {
    for (int x = 0; x < n; ++x) {
      check_subset(x, SmallSet{});
      for (int y = 0; y < n; ++y) {
        for (int z = 0; z < n; ++z) check_subset(x, SmallSet{y, z});
      }
    }
  }
}

int Quantale::power(int x, long long n) const {
  range_check(x);
  if (n < 1) {
    throw Error(ErrorCode::UndefinedPower,
                "power " + std::to_string(n) + " of \"" + lattice_.label(x) +
                    "\" is undefined; exponents start at 1",
                {x});
  }
  // Walk x, x^2, ... until the sequence repeats, then index into the cycle.
  std::vector<int> seq{x};
  std::vector<int> seen_at(size(), -1);
  seen_at[x] = 0;
  for (;;) {
    const int next = mul(seq.back(), x);
    if (static_cast<long long>(seq.size()) == n) return seq.back();
    if (seen_at[next] >= 0) {
      const long long entry = seen_at[next];
      const long long cycle = static_cast<long long>(seq.size()) - entry;
      const long long idx = entry + (n - 1 - entry) % cycle;
      return seq[static_cast<size_t>(idx)];
    }
    seen_at[next] = static_cast<int>(seq.size());
    seq.push_back(next);
  }
}

SmallSet Quantale::power_closure(int x) const {
  range_check(x);
  SmallSet out;
  int cur = x;
  while (!out.contains(cur)) {
    out.insert(cur);
    cur = mul(cur, x);
  }
  return out;
}

SmallSet Quantale::idempotents() const {
  SmallSet out;
  for (int x = 0; x < size(); ++x) {
    if (mul(x, x) == x) out.insert(x);
  }
  return out;
}

SmallSet Quantale::nontrivial_idempotents() const {
  SmallSet out = idempotents();
  out.erase(bottom());
  out.erase(top());
  return out;
}

void Quantale::compute_fingerprint() {
  std::uint64_t h = 0xcbf29ce484222325ull;
  h = fnv1a(h, static_cast<std::uint64_t>(size()));
  for (int x = 0; x < size(); ++x) h = fnv1a(h, lattice_.upset(x).bits());
  for (int v : mul_) h = fnv1a(h, static_cast<std::uint64_t>(v));
  fingerprint_ = h;
}

std::vector<int> permuted_table(const std::vector<int>& mul, const std::vector<int>& perm) {
  const size_t n = perm.size();
  std::vector<int> out(n * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      out[static_cast<size_t>(perm[i]) * n + static_cast<size_t>(perm[j])] =
          perm[static_cast<size_t>(mul[i * n + j])];
    }
  }
  return out;
}

}  // namespace qtl
