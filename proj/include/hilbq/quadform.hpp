#pragma once

#include <functional>
#include <vector>

#include "hilbq/qseries.hpp"

namespace hilbq {

/// Integer-valued positive-definite quadratic form on Z^n:
///   Q(k) = sum_{1 <= i <= j <= n} c_ij k_i k_j.
/// Positive-definiteness of the symmetric Gram matrix (diagonal 2c_ii,
/// off-diagonal c_ij) is checked at construction via leading principal minors.
class QuadraticForm {
public:
    /// upper[i][j] for 0 <= i <= j < rank holds c_{i+1,j+1}; entries with
    /// i > j are ignored.
    QuadraticForm(int rank, const std::vector<std::vector<long long>>& upper);

    static QuadraticForm diagonal(const std::vector<long long>& diag);

    int rank() const { return rank_; }

    /// c_ij with 0-based i <= j.
    long long coeff(int i, int j) const { return upper_[i][j]; }

    Int value(const std::vector<Int>& k) const;

    /// Symmetric rational matrix A with Q(x) = x^T A x
    /// (A_ii = c_ii, A_ij = c_ij / 2 for i != j).
    std::vector<std::vector<Rat>> gram_half() const;

    /// Form with k_1 replaced by d * k_1.
    QuadraticForm rescale_first(long long d) const;

    friend bool operator==(const QuadraticForm& a, const QuadraticForm& b) = default;
    friend bool operator<(const QuadraticForm& a, const QuadraticForm& b);

    std::string to_string() const;

private:
    int rank_;
    std::vector<std::vector<long long>> upper_;
};

/// Calls fn(vector, Q(vector)) for every lattice vector with Q <= bound,
/// each exactly once (including the zero vector). Exact rational
/// completion-of-squares bounds per coordinate.
void lattice_points_below(const QuadraticForm& Q, long bound,
                          const std::function<void(const std::vector<Int>&, const Int&)>& fn);

/// Theta series of Q: coefficient of q^v = #{k : Q(k) = v}, for v <= M.
QSeries theta_form(const QuadraticForm& Q, int M);

}  // namespace hilbq
