#include "hilbq/theta.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "hilbq/arith.hpp"

namespace hilbq {

namespace {

QSeries rationalize_all(const std::vector<CycElem>& acc) {
    QSeries s(static_cast<int>(acc.size()) - 1);
    for (size_t v = 0; v < acc.size(); ++v) s.at(static_cast<int>(v)) = acc[v].rationalize();
    return s;
}

void assert_integer_coeffs(const QSeries& s, const char* who) {
    for (int i = 0; i <= s.order(); ++i)
        if (!is_integer(s[i]))
            throw std::logic_error(std::string(who) + ": non-integer coefficient " +
                                   s[i].get_str() + " at q^" + std::to_string(i));
}

/// Enumerates k in Z^len with sum k_i^2 <= budget.
void enumerate_square_bounded(int len, long budget, std::vector<long>& k,
                              const std::function<void(const std::vector<long>&)>& fn) {
    if (len == 0) {
        fn(k);
        return;
    }
    const int i = static_cast<int>(k.size()) - len;
    long b = 0;
    while ((b + 1) * (b + 1) <= budget) ++b;
    for (long v = -b; v <= b; ++v) {
        k[i] = v;
        enumerate_square_bounded(len - 1, budget - v * v, k, fn);
    }
    k[i] = 0;
}

}  // namespace

QSeries theta_n(int n, int M) {
    if (n < 1) throw std::invalid_argument("theta_n: n must be >= 1");
    const long m = n + 2;
    std::vector<CycElem> acc(M + 1, CycElem(m));
    // Q(k) = ((sum k_i)^2 + sum k_i^2)/2 >= (sum k_i^2)/2, so sum k_i^2 <= 2M.
    std::vector<long> k(n, 0);
    enumerate_square_bounded(n, 2L * M, k, [&](const std::vector<long>& v) {
        long s = 0, s2 = 0, phase = 0;
        for (int i = 0; i < n; ++i) {
            s += v[i];
            s2 += v[i] * v[i];
            phase += (i + 1) * v[i];
        }
        const long val = (s * s + s2) / 2;
        if (val > M) return;
        acc[val].add_root_power(phase);
    });
    QSeries s = rationalize_all(acc);
    assert_integer_coeffs(s, "theta_n");
    return s;
}

QSeries theta_n_balanced(int n, int M) {
    if (n < 1) throw std::invalid_argument("theta_n_balanced: n must be >= 1");
    const long m = n + 2;
    std::vector<CycElem> acc(M + 1, CycElem(m));
    // Sum over (k_1,...,k_{n+1}) with total 0 and sum k_i^2 <= 2M; the last
    // entry is determined by the first n.
    std::vector<long> k(n, 0);
    enumerate_square_bounded(n, 2L * M, k, [&](const std::vector<long>& v) {
        long s = 0, s2 = 0, phase = 0;
        for (int i = 0; i < n; ++i) {
            s += v[i];
            s2 += v[i] * v[i];
            phase += (i + 1) * v[i];
        }
        const long last = -s;
        s2 += last * last;
        if (s2 > 2L * M) return;
        phase += (n + 1) * last;
        acc[s2 / 2].add_root_power(phase);
    });
    QSeries s = rationalize_all(acc);
    assert_integer_coeffs(s, "theta_n_balanced");
    return s;
}

BaseChange base_change_form(int n) {
    if (n < 1) throw std::invalid_argument("base_change_form: n must be >= 1");
    // A0 for sum_{i<=j} k_i k_j, then A = S^T A0 S with S the substitution
    // k_1 -> k_1 - 2k_2 - ... - nk_n, k_i -> k_i.
    std::vector<std::vector<Rat>> a0(n, std::vector<Rat>(n, Rat(1, 2)));
    for (int i = 0; i < n; ++i) a0[i][i] = 1;
    std::vector<std::vector<Rat>> s(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i) s[i][i] = 1;
    for (int j = 1; j < n; ++j) s[0][j] = -(j + 1);
    auto matmul = [n](const std::vector<std::vector<Rat>>& x,
                      const std::vector<std::vector<Rat>>& y) {
        std::vector<std::vector<Rat>> z(n, std::vector<Rat>(n, Rat(0)));
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l)
                for (int j = 0; j < n; ++j) z[i][j] += x[i][l] * y[l][j];
        return z;
    };
    std::vector<std::vector<Rat>> st(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) st[i][j] = s[j][i];
    const std::vector<std::vector<Rat>> a = matmul(st, matmul(a0, s));
    std::vector<std::vector<long long>> upper(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            const Rat c = (i == j) ? a[i][i] : a[i][j] * 2;
            if (!is_integer(c))
                throw std::logic_error("base_change_form: non-integer coefficient");
            upper[i][j] = static_cast<long long>(c.get_num().get_si());
        }
    }
    return BaseChange{QuadraticForm(n, upper), n + 2};
}

std::vector<CycElem> theta_twisted_cyc(const QuadraticForm& Q, long m, int M) {
    if (m < 1) throw std::invalid_argument("theta_twisted_cyc: m must be >= 1");
    std::vector<CycElem> acc(M + 1, CycElem(m));
    lattice_points_below(Q, M, [&](const std::vector<Int>& k, const Int& v) {
        acc[static_cast<int>(v.get_si())].add_root_power(k[0].get_si());
    });
    return acc;
}

QSeries theta_twisted(const QuadraticForm& Q, long m, int M) {
    return rationalize_all(theta_twisted_cyc(Q, m, M));
}

CheckReport galois_invariance_check(const QuadraticForm& Q, long m, int M) {
    const std::vector<CycElem> acc = theta_twisted_cyc(Q, m, M);
    for (long s = 2; s < m; ++s) {
        if (std::gcd(s, m) != 1) continue;
        for (int v = 0; v <= M; ++v) {
            if (!(acc[v].substituted(s) == acc[v]))
                return CheckReport::fail("q^" + std::to_string(v) +
                                         " coefficient changes under xi -> xi^" +
                                         std::to_string(s));
        }
    }
    return CheckReport::ok();
}

QSeries evaluate_terms(const std::vector<DecompositionTerm>& terms, int M) {
    QSeries s(M);
    for (const DecompositionTerm& t : terms) s = s + t.coefficient * theta_form(t.form, M);
    return s;
}

std::vector<DecompositionTerm> decompose_theta(const QuadraticForm& Q, long m, int M_check) {
    const CheckReport inv = galois_invariance_check(Q, m, M_check);
    if (!inv.pass)
        throw std::invalid_argument("decompose_theta: Theta_{Q,m} is not Galois-invariant: " +
                                    inv.detail);
    const long phi_m = euler_phi(m);
    std::map<QuadraticForm, Rat> merged;
    for (long mi : divisors(m)) {
        const long mip = m / mi;
        const long a_i = (phi_m / euler_phi(mip)) * mobius(mip);
        if (a_i == 0) continue;
        const QuadraticForm qi = Q.rescale_first(mi);
        // gcd(k_1, m_i') = 1 via Moebius over d | m_i'.
        for (long d : divisors(mip)) {
            const int mu_d = mobius(d);
            if (mu_d == 0) continue;
            Rat contrib(a_i * mu_d, phi_m);
            contrib.canonicalize();
            merged[qi.rescale_first(d)] += contrib;
        }
    }
    std::vector<DecompositionTerm> terms;
    for (const auto& [form, coeff] : merged)
        if (coeff != 0) terms.push_back({coeff, form});

    const QSeries expect = theta_twisted(Q, m, M_check);
    const QSeries got = evaluate_terms(terms, M_check);
    if (!(expect == got))
        throw std::logic_error("decompose_theta: residual mismatch up to q^" +
                               std::to_string(M_check));
    return terms;
}

std::vector<DecompositionTerm> table1_terms(int n) {
    using QF = QuadraticForm;
    auto form = [](std::vector<std::vector<long long>> u) {
        return QF(static_cast<int>(u.size()), u);
    };
    switch (n) {
        case 1:
            return {{Rat(-1, 2), QF::diagonal({1})}, {Rat(3, 2), QF::diagonal({9})}};
        case 2:
            return {{Rat(-1), QF::diagonal({3, 1})}, {Rat(2), QF::diagonal({3, 4})}};
        case 3:
            return {{Rat(-1, 4), form({{1, 1, 1}, {0, 1, 1}, {0, 0, 1}})},
                    {Rat(5, 4), form({{25, -15, -25}, {0, 3, 8}, {0, 0, 7}})}};
        case 4:
            return {{Rat(1, 2), form({{1, 1, 1, 1}, {0, 1, 1, 1}, {0, 0, 1, 1}, {0, 0, 0, 1}})},
                    {Rat(-1),
                     form({{4, -6, -10, -14}, {0, 3, 8, 11}, {0, 0, 7, 18}, {0, 0, 0, 13}})},
                    {Rat(-3, 2),
                     form({{9, -9, -15, -21}, {0, 3, 8, 11}, {0, 0, 7, 18}, {0, 0, 0, 13}})},
                    {Rat(3),
                     form({{36, -18, -30, -42}, {0, 3, 8, 11}, {0, 0, 7, 18}, {0, 0, 0, 13}})}};
        default:
            throw std::invalid_argument("table1_terms: n must be in 1..4");
    }
}

CheckReport verify_table1(int n, int M) {
    const QSeries lhs = theta_n(n, M);
    const QSeries rhs = evaluate_terms(table1_terms(n), M);
    for (int i = 0; i <= M; ++i)
        if (lhs[i] != rhs[i])
            return CheckReport::fail("Theta_" + std::to_string(n) + " differs at q^" +
                                     std::to_string(i) + ": direct " + lhs[i].get_str() +
                                     ", tabulated " + rhs[i].get_str());
    return CheckReport::ok();
}

}  // namespace hilbq
