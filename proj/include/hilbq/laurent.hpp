#pragma once

#include <map>

#include "hilbq/qseries.hpp"

namespace hilbq {

/// Finite-window Laurent polynomial in t whose coefficients are QSeries in q
/// (offset 0, order q_order). Degrees d with |d| <= window are exact up to
/// q^{q_order}; a monomial t^d q^a with |d| > window is retained only while
/// a + (|d| - window) <= q_order, since every remaining product factor costs
/// at least one power of q per unit of t-degree moved back into the window.
class TLaurentSeries {
public:
    TLaurentSeries(int q_order, int window);

    static TLaurentSeries one(int q_order, int window);

    int q_order() const { return q_order_; }
    int window() const { return window_; }

    /// Stores the given QSeries at t-degree `degree`, applying the pruning rule.
    void set(int degree, const QSeries& series);

    void add(int degree, const QSeries& series);

    /// Coefficient of t^degree (zero series if absent).
    QSeries coeff(int degree) const;

    const std::map<int, QSeries>& terms() const { return terms_; }

    /// Convolution over t-degrees; result carries `target_window`.
    TLaurentSeries mul(const TLaurentSeries& other, int target_window) const;
    TLaurentSeries operator*(const TLaurentSeries& other) const {
        return mul(other, std::min(window_, other.window_));
    }

    /// Equality of the exact region: all degrees |d| <= min(window) at full q order.
    friend bool operator==(const TLaurentSeries& a, const TLaurentSeries& b);

private:
    /// Max retained q-exponent at t-degree d, or -1 when the whole term is pruned.
    int retained_order(int degree) const;

    int q_order_;
    int window_;
    std::map<int, QSeries> terms_;
};

}  // namespace hilbq
