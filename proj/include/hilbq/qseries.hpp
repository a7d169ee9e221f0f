#pragma once

#include <vector>

#include "hilbq/rational.hpp"

namespace hilbq {

/// Truncated formal power series in q with exact rational coefficients and a
/// global rational exponent offset: coeffs[i] is the coefficient of
/// q^{offset + i}, for 0 <= i <= order. The offset denominator must divide 24
/// (it only ever arises from eta-function prefactors q^{e/24}).
class QSeries {
public:
    /// Zero series of the given truncation order.
    explicit QSeries(int order, Rat offset = Rat(0));

    static QSeries one(int order);
    /// c * q^{exponent}, truncated at `order`; exponent must be in [0, order].
    static QSeries monomial(int order, int exponent, Rat c = Rat(1));

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rat& offset() const { return offset_; }
    const Rat& operator[](int i) const { return coeffs_[i]; }
    Rat& at(int i) { return coeffs_[i]; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    bool is_zero() const;

    QSeries operator-() const;
    friend QSeries operator+(const QSeries& a, const QSeries& b);
    friend QSeries operator-(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const Rat& c, const QSeries& a);

    /// Multiplicative inverse to the same order; requires coeffs[0] != 0.
    QSeries inverse() const;

    /// Integer power; negative exponents go through inverse().
    QSeries pow(long e) const;

    /// Copy truncated to a smaller order.
    QSeries truncated(int new_order) const;

    /// Same coefficients with a different offset (explicit re-alignment).
    QSeries with_offset(Rat offset) const;

    friend bool operator==(const QSeries& a, const QSeries& b) = default;

private:
    Rat offset_;
    std::vector<Rat> coeffs_;
};

}  // namespace hilbq
