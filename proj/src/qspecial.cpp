#include "hilbq/qspecial.hpp"

#include <cmath>
#include <stdexcept>

namespace hilbq {

QSeries euler_product_power(long e, int M) {
    if (M < 0) throw std::invalid_argument("euler_product_power: M must be >= 0");
    QSeries prod = QSeries::one(M);
    for (int m = 1; m <= M; ++m) {
        QSeries factor = QSeries::one(M);
        factor.at(m) = -1;
        prod = prod * factor;
    }
    return prod.pow(e);
}

QSeries eta_power(long e, int M) {
    return euler_product_power(e, M).with_offset(Rat(e, 24));
}

std::vector<Rat> fn_poly(int n) {
    if (n < 1) throw std::invalid_argument("fn_poly: n must be >= 1");
    return std::vector<Rat>(n + 1, Rat(1));
}

namespace {

/// f_n(q^m t^{sign}) as a TLaurentSeries: sum_{i=0}^{n} q^{mi} t^{sign*i}.
/// Window n: single factors carry all their terms; only accumulated
/// products may be pruned (a factor term q^{mi} t^{i} can pair with an
/// accumulated t^{-i} term and land on a retained monomial).
TLaurentSeries fn_factor(int n, int m, int sign, int M) {
    TLaurentSeries f(M, n);
    for (int i = 0; i <= n; ++i) {
        const long long a = static_cast<long long>(m) * i;
        if (a > M) break;
        f.add(sign * i, QSeries::monomial(M, static_cast<int>(a)));
    }
    return f;
}

}  // namespace

int full_window(int n, int M) { return M + n; }

TLaurentSeries double_product(int n, int M, int E) {
    if (n < 1) throw std::invalid_argument("double_product: n must be >= 1");
    if (M < 0 || E < 0) throw std::invalid_argument("double_product: M, E must be >= 0");
    // m = 0 factor f_n(t^{-1}) first; all later factors pay >= q per t-shift,
    // which is what the pruning rule for the accumulated product assumes.
    TLaurentSeries acc = TLaurentSeries::one(M, E).mul(fn_factor(n, 0, -1, M), E);
    for (int m = 1; m <= M; ++m) {
        acc = acc.mul(fn_factor(n, m, +1, M), E);
        acc = acc.mul(fn_factor(n, m, -1, M), E);
    }
    return acc;
}

TLaurentSeries jacobi_theta_side(int M, int E) {
    TLaurentSeries lhs(M, E);
    const int kmax =
        static_cast<int>(std::ceil((-1.0 + std::sqrt(1.0 + 8.0 * M)) / 2.0)) + 1;
    for (int k = -kmax; k <= kmax; ++k) {
        const long long a = static_cast<long long>(k) * (k + 1) / 2;
        if (a > M) continue;
        const Rat sign = (k % 2 == 0) ? Rat(1) : Rat(-1);
        lhs.add(k, QSeries::monomial(M, static_cast<int>(a), sign));
    }
    return lhs;
}

TLaurentSeries jacobi_product_side(int M, int E) {
    // m = 0 factor (1 - t^{-1}) first, then ascending m. Factors are built at
    // window 1 so their own terms are never pruned.
    TLaurentSeries f0(M, 1);
    f0.add(0, QSeries::one(M));
    f0.add(-1, QSeries::monomial(M, 0, Rat(-1)));
    TLaurentSeries acc = TLaurentSeries::one(M, E).mul(f0, E);
    for (int m = 1; m <= M; ++m) {
        TLaurentSeries f(M, 1);
        f.add(0, QSeries::one(M));
        f.add(0, QSeries::monomial(M, m, Rat(-1)));  // (1 - q^m)
        acc = acc.mul(f, E);
        TLaurentSeries g(M, 1);
        g.add(0, QSeries::one(M));
        g.add(1, QSeries::monomial(M, m, Rat(-1)));  // (1 - q^m t)
        acc = acc.mul(g, E);
        TLaurentSeries h(M, 1);
        h.add(0, QSeries::one(M));
        h.add(-1, QSeries::monomial(M, m, Rat(-1)));  // (1 - q^m t^{-1})
        acc = acc.mul(h, E);
    }
    return acc;
}

CheckReport jacobi_triple_check(int M, int E) {
    const TLaurentSeries lhs = jacobi_theta_side(M, E);
    const TLaurentSeries rhs = jacobi_product_side(M, E);
    for (int d = -E; d <= E; ++d) {
        const QSeries a = lhs.coeff(d);
        const QSeries b = rhs.coeff(d);
        for (int i = 0; i <= M; ++i) {
            if (a[i] != b[i])
                return CheckReport::fail("first discrepancy at t-degree " + std::to_string(d) +
                                         ", q-power " + std::to_string(i) + ": theta side " +
                                         a[i].get_str() + ", product side " + b[i].get_str());
        }
    }
    return CheckReport::ok();
}

}  // namespace hilbq
