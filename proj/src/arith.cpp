#include "hilbq/arith.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hilbq {

std::vector<long> divisors(long m) {
    if (m < 1) throw std::invalid_argument("divisors: m must be >= 1");
    std::vector<long> ds;
    for (long d = 1; d * d <= m; ++d) {
        if (m % d == 0) {
            ds.push_back(d);
            if (d != m / d) ds.push_back(m / d);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

long euler_phi(long m) {
    if (m < 1) throw std::invalid_argument("euler_phi: m must be >= 1");
    long result = m;
    long n = m;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

int mobius(long m) {
    if (m < 1) throw std::invalid_argument("mobius: m must be >= 1");
    int sign = 1;
    long n = m;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            sign = -sign;
        }
    }
    if (n > 1) sign = -sign;
    return sign;
}

long ramanujan_sum(long m, long r) {
    if (m < 1) throw std::invalid_argument("ramanujan_sum: m must be >= 1");
    r %= m;
    if (r < 0) r += m;
    long g = std::gcd(r, m);
    long total = 0;
    for (long d : divisors(g)) total += d * mobius(m / d);
    return total;
}

namespace {

// Exact division of polynomials with integer coefficients; divisor monic-up-to-sign.
std::vector<Int> poly_divide_exact(std::vector<Int> num, const std::vector<Int>& den) {
    const auto dn = static_cast<long>(den.size()) - 1;
    const auto nn = static_cast<long>(num.size()) - 1;
    if (nn < dn) throw std::logic_error("poly_divide_exact: degree underflow");
    std::vector<Int> quot(nn - dn + 1, 0);
    for (long i = nn - dn; i >= 0; --i) {
        Int c = num[i + dn] / den[dn];
        quot[i] = c;
        for (long k = 0; k <= dn; ++k) num[i + k] -= c * den[k];
    }
    for (const Int& c : num)
        if (c != 0) throw std::logic_error("poly_divide_exact: nonzero remainder");
    return quot;
}

}  // namespace

std::vector<Int> cyclotomic_poly(long m) {
    if (m < 1) throw std::invalid_argument("cyclotomic_poly: m must be >= 1");
    // x^m - 1
    std::vector<Int> p(m + 1, 0);
    p[0] = -1;
    p[m] = 1;
    for (long d : divisors(m)) {
        if (d == m) continue;
        p = poly_divide_exact(std::move(p), cyclotomic_poly(d));
    }
    return p;
}

}  // namespace hilbq
