#pragma once

#include "qtl/quantale.hpp"

namespace qtl {

/// Total order 0 < 1 < ... < n-1 with product = min. Needs n >= 1.
Quantale gen_chain(int n, int size_cap = kMaxCarrier);

/// Powerset of {1..k} ordered by inclusion, with product = intersection
/// (a frame). Needs k >= 0; the carrier has 2^k elements.
Quantale gen_powerset(int k, int size_cap = kMaxCarrier);

/// Ideal lattice of the ring of integers mod n, presented on the divisors of
/// n: d <= e iff e divides d, join = gcd, meet = lcm, and
/// d * e = gcd(d * e, n). Top is 1, bottom is n. Needs n >= 1. Element
/// labels are the divisors; the divisor also lands in element_meta().
Quantale gen_zn(long long n, int size_cap = kMaxCarrier);

}  // namespace qtl
