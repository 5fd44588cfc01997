#include "qtl/generators.hpp"

#include <algorithm>
#include <numeric>

namespace qtl {

Quantale gen_chain(int n, int size_cap) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "chain length must be at least 1");
  std::vector<std::string> labels(n);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    labels[i] = std::to_string(i);
    if (i + 1 < n) pairs.emplace_back(i, i + 1);
  }
  auto built = Lattice::build_with_perm(std::move(labels), pairs, size_cap);
  std::vector<int> mul(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mul[static_cast<size_t>(i) * n + j] = std::min(i, j);
  return Quantale::build(std::move(built.lattice), permuted_table(mul, built.perm),
                         "chain:" + std::to_string(n));
}

Quantale gen_powerset(int k, int size_cap) {
  if (k < 0) throw Error(ErrorCode::InvalidInput, "powerset exponent must be nonnegative");
  if (k >= 31 || (1 << k) > size_cap) {
    throw Error(ErrorCode::SizeCap,
                "powerset of a " + std::to_string(k) + "-element set exceeds the carrier cap");
  }
  const int n = 1 << k;
  std::vector<std::string> labels(n);
  std::vector<std::pair<int, int>> pairs;
  for (int s = 0; s < n; ++s) {
    std::string l = "{";
    for (int b = 0; b < k; ++b) {
      if (s & (1 << b)) l += (l.size() > 1 ? "," : "") + std::to_string(b + 1);
    }
    labels[s] = l + "}";
    // Cover relation: flip one absent bit on.
    for (int b = 0; b < k; ++b) {
      if (!(s & (1 << b))) pairs.emplace_back(s, s | (1 << b));
    }
  }
  auto built = Lattice::build_with_perm(std::move(labels), pairs, size_cap);
  std::vector<int> mul(static_cast<size_t>(n) * n);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) mul[static_cast<size_t>(s) * n + t] = s & t;
  return Quantale::build(std::move(built.lattice), permuted_table(mul, built.perm),
                         "powerset:" + std::to_string(k));
}

Quantale gen_zn(long long n, int size_cap) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "modulus must be at least 1");
  std::vector<long long> divisors;
  for (long long d = 1; d <= n; ++d) {
    if (n % d == 0) divisors.push_back(d);
  }
  const int m = static_cast<int>(divisors.size());
  if (m > size_cap) {
    throw Error(ErrorCode::SizeCap, "modulus " + std::to_string(n) + " has " +
                                        std::to_string(m) + " divisors, over the carrier cap");
  }

  std::vector<std::string> labels(m);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < m; ++i) {
    labels[i] = std::to_string(divisors[i]);
    for (int j = 0; j < m; ++j) {
      if (divisors[j] % divisors[i] == 0) pairs.emplace_back(j, i);  // d_j <= d_i iff d_i | d_j
    }
  }
  auto built = Lattice::build_with_perm(std::move(labels), pairs, size_cap);

  auto index_of = [&](long long d) {
    return static_cast<int>(std::lower_bound(divisors.begin(), divisors.end(), d) -
                            divisors.begin());
  };
  std::vector<int> mul(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      mul[static_cast<size_t>(i) * m + j] = index_of(std::gcd(divisors[i] * divisors[j], n));
    }
  }

  std::vector<long long> meta(m);
  for (int i = 0; i < m; ++i) meta[built.perm[i]] = divisors[i];
  return Quantale::build(std::move(built.lattice), permuted_table(mul, built.perm),
                         "zn:" + std::to_string(n), std::move(meta));
}

}  // namespace qtl
