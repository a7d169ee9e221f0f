#pragma once

#include <vector>

#include "hilbq/rational.hpp"

namespace hilbq {

/// Divisors of m in increasing order, m >= 1.
std::vector<long> divisors(long m);

long euler_phi(long m);

/// Moebius function: 0 if m has a squared prime factor, else (-1)^#primes.
int mobius(long m);

/// Ramanujan sum c_m(r) = sum of xi_m^{rs} over s coprime to m,
/// computed as sum_{d | gcd(r,m)} d * mu(m/d).
long ramanujan_sum(long m, long r);

/// Coefficients of the m-th cyclotomic polynomial, constant term first.
/// Obtained by dividing x^m - 1 by Phi_d for every proper divisor d.
std::vector<Int> cyclotomic_poly(long m);

}  // namespace hilbq
