#include "hilbq/quadform.hpp"

#include <sstream>
#include <stdexcept>

namespace hilbq {

namespace {

/// Determinant of an integer matrix by fraction-free (Bareiss) elimination.
Int int_determinant(std::vector<std::vector<Int>> a) {
    const int n = static_cast<int>(a.size());
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (int col = 0; col < n - 1; ++col) {
        if (a[col][col] == 0) {
            int p = -1;
            for (int r = col + 1; r < n; ++r)
                if (a[r][col] != 0) { p = r; break; }
            if (p < 0) return 0;
            std::swap(a[col], a[p]);
            sign = -sign;
        }
        for (int r = col + 1; r < n; ++r)
            for (int c = col + 1; c < n; ++c)
                a[r][c] = (a[r][c] * a[col][col] - a[r][col] * a[col][c]) / prev;
        prev = a[col][col];
    }
    return sign * a[n - 1][n - 1];
}

}  // namespace

QuadraticForm::QuadraticForm(int rank, const std::vector<std::vector<long long>>& upper)
    : rank_(rank) {
    if (rank < 1) throw std::invalid_argument("QuadraticForm: rank must be >= 1");
    if (static_cast<int>(upper.size()) < rank)
        throw std::invalid_argument("QuadraticForm: coefficient table too small");
    upper_.assign(rank, std::vector<long long>(rank, 0));
    for (int i = 0; i < rank; ++i) {
        if (static_cast<int>(upper[i].size()) < rank)
            throw std::invalid_argument("QuadraticForm: coefficient table too small");
        for (int j = i; j < rank; ++j) upper_[i][j] = upper[i][j];
    }
    // Gram matrix with diagonal 2c_ii, off-diagonal c_ij; minors must be > 0.
    std::vector<std::vector<Int>> g(rank, std::vector<Int>(rank));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            g[i][j] = (i == j) ? Int(static_cast<long>(2 * upper_[i][i]))
                               : Int(static_cast<long>(upper_[std::min(i, j)][std::max(i, j)]));
    for (int k = 1; k <= rank; ++k) {
        std::vector<std::vector<Int>> minor(k, std::vector<Int>(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) minor[i][j] = g[i][j];
        if (int_determinant(std::move(minor)) <= 0)
            throw std::invalid_argument(
                "QuadraticForm: not positive definite (leading principal minor " +
                std::to_string(k) + " is not positive)");
    }
}

QuadraticForm QuadraticForm::diagonal(const std::vector<long long>& diag) {
    const int n = static_cast<int>(diag.size());
    std::vector<std::vector<long long>> upper(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) upper[i][i] = diag[i];
    return QuadraticForm(n, upper);
}

Int QuadraticForm::value(const std::vector<Int>& k) const {
    Int v = 0;
    for (int i = 0; i < rank_; ++i)
        for (int j = i; j < rank_; ++j) v += Int(static_cast<long>(upper_[i][j])) * k[i] * k[j];
    return v;
}

std::vector<std::vector<Rat>> QuadraticForm::gram_half() const {
    std::vector<std::vector<Rat>> a(rank_, std::vector<Rat>(rank_, Rat(0)));
    for (int i = 0; i < rank_; ++i) {
        a[i][i] = Rat(static_cast<long>(upper_[i][i]));
        for (int j = i + 1; j < rank_; ++j) {
            a[i][j] = Rat(static_cast<long>(upper_[i][j]), 2);
            a[i][j].canonicalize();
            a[j][i] = a[i][j];
        }
    }
    return a;
}

QuadraticForm QuadraticForm::rescale_first(long long d) const {
    if (d == 0) throw std::invalid_argument("rescale_first: d must be nonzero");
    std::vector<std::vector<long long>> upper = upper_;
    upper[0][0] *= d * d;
    for (int j = 1; j < rank_; ++j) upper[0][j] *= d;
    return QuadraticForm(rank_, upper);
}

bool operator<(const QuadraticForm& a, const QuadraticForm& b) {
    if (a.rank_ != b.rank_) return a.rank_ < b.rank_;
    return a.upper_ < b.upper_;
}

std::string QuadraticForm::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < rank_; ++i) {
        for (int j = i; j < rank_; ++j) {
            const long long c = upper_[i][j];
            if (c == 0) continue;
            if (!first) os << (c > 0 ? " + " : " - ");
            else if (c < 0) os << "-";
            first = false;
            const long long ac = c > 0 ? c : -c;
            if (ac != 1) os << ac << "*";
            if (i == j) os << "k" << (i + 1) << "^2";
            else os << "k" << (i + 1) << "*k" << (j + 1);
        }
    }
    if (first) os << "0";
    return os.str();
}

void lattice_points_below(const QuadraticForm& Q, long bound,
                          const std::function<void(const std::vector<Int>&, const Int&)>& fn) {
    if (bound < 0) return;
    const int n = Q.rank();
    // Completion of squares: Q(x) = sum_i q[i][i] (x_i + sum_{j>i} q[i][j] x_j)^2.
    std::vector<std::vector<Rat>> q = Q.gram_half();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            q[j][i] = q[i][j];
            q[i][j] = q[i][j] / q[i][i];
        }
        for (int k = i + 1; k < n; ++k)
            for (int l = k; l < n; ++l) q[k][l] -= q[k][i] * q[i][l];
    }
    std::vector<Int> x(n, 0);
    std::vector<Rat> center(n, Rat(0));
    // Enumerate from the last coordinate inward.
    auto recurse = [&](auto&& self, int i, const Rat& budget) -> void {
        if (i < 0) {
            fn(x, Q.value(x));
            return;
        }
        Rat c = 0;
        for (int j = i + 1; j < n; ++j) c += q[i][j] * Rat(x[j]);
        const Rat ub = budget / q[i][i];  // (x_i + c)^2 <= ub
        const Int radius = isqrt(rat_floor(ub)) + 1;
        const Int lo = rat_ceil(-c) - radius;
        const Int hi = rat_floor(-c) + radius;
        for (Int v = lo; v <= hi; ++v) {
            const Rat shifted = Rat(v) + c;
            const Rat used = q[i][i] * shifted * shifted;
            if (used > budget) continue;
            x[i] = v;
            self(self, i - 1, budget - used);
        }
        x[i] = 0;
    };
    recurse(recurse, n - 1, Rat(bound));
}

QSeries theta_form(const QuadraticForm& Q, int M) {
    QSeries s(M);
    lattice_points_below(Q, M, [&](const std::vector<Int>&, const Int& v) {
        s.at(static_cast<int>(v.get_si())) += 1;
    });
    return s;
}

}  // namespace hilbq
