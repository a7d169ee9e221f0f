#pragma once

#include <vector>

#include "hilbq/cyclotomic.hpp"
#include "hilbq/quadform.hpp"
#include "hilbq/report.hpp"

namespace hilbq {

/// One summand of a theta-series decomposition: a * Theta_Q.
struct DecompositionTerm {
    Rat coefficient;
    QuadraticForm form;
};

/// The A_n correction series
///   Theta_n(q) = sum over Z^n of q^{sum_{i<=j} k_i k_j} xi_{n+2}^{k_1+2k_2+...+nk_n},
/// accumulated per q-power as a cyclotomic element and rationalized. Every
/// coefficient is asserted to be an integer.
QSeries theta_n(int n, int M);

/// The same series from the balanced sum over (k_1,...,k_{n+1}) with
/// sum k_i = 0, exponent sum k_i^2 / 2 and phase xi_{n+2}^{k_1+2k_2+...+(n+1)k_{n+1}}.
QSeries theta_n_balanced(int n, int M);

/// The form Q with Theta_n(q) = sum q^{Q(k)} xi_{n+2}^{k_1}, obtained by the
/// change of variables k_1 -> k_1 - 2k_2 - ... - nk_n in sum_{i<=j} k_i k_j.
/// Returns Q together with the root-of-unity modulus n+2.
struct BaseChange {
    QuadraticForm form;
    long modulus;
};
BaseChange base_change_form(int n);

/// Theta_{Q,m}(q) = sum q^{Q(k)} xi_m^{k_1}, one cyclotomic accumulator per
/// q-power, for powers 0..M.
std::vector<CycElem> theta_twisted_cyc(const QuadraticForm& Q, long m, int M);

/// Rationalized Theta_{Q,m}; throws if some q-power is not Galois-invariant.
QSeries theta_twisted(const QuadraticForm& Q, long m, int M);

/// Checks that every q-power of Theta_{Q,m} is fixed by every substitution
/// xi_m -> xi_m^s with gcd(s, m) = 1.
CheckReport galois_invariance_check(const QuadraticForm& Q, long m, int M);

/// Decomposes Theta_{Q,m} as sum a_i * Theta_{Q_i} with positive-definite Q_i:
/// for each divisor m_i of m (m = m_i * m_i'), the Galois average contributes
/// A_i = (phi(m)/phi(m_i')) * mu(m_i') on the sublattice m_i | k_1, and the
/// gcd(k_1, m_i') = 1 restriction is expanded by Moebius inversion over
/// divisors d | m_i'. Terms with identical coefficient matrices are merged and
/// the result is verified against Theta_{Q,m} up to q^{M_check}.
std::vector<DecompositionTerm> decompose_theta(const QuadraticForm& Q, long m, int M_check);

/// sum a_i * theta_form(Q_i) over the given terms.
QSeries evaluate_terms(const std::vector<DecompositionTerm>& terms, int M);

/// The published closed forms of Theta_n for 1 <= n <= 4.
std::vector<DecompositionTerm> table1_terms(int n);

/// Compares theta_n(n, M) against the tabulated decomposition.
CheckReport verify_table1(int n, int M);

}  // namespace hilbq
