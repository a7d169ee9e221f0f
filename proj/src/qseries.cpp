#include "hilbq/qseries.hpp"

#include <algorithm>
#include <stdexcept>

namespace hilbq {

namespace {

void check_offset(Rat& offset) {
    offset.canonicalize();
    if (Int(24) % offset.get_den() != 0)
        throw std::invalid_argument("QSeries: offset denominator must divide 24, got " +
                                    offset.get_str());
}

}  // namespace

QSeries::QSeries(int order, Rat offset) : offset_(std::move(offset)) {
    if (order < 0) throw std::invalid_argument("QSeries: order must be >= 0");
    check_offset(offset_);
    coeffs_.assign(order + 1, Rat(0));
}

QSeries QSeries::one(int order) {
    QSeries s(order);
    s.coeffs_[0] = 1;
    return s;
}

QSeries QSeries::monomial(int order, int exponent, Rat c) {
    if (exponent < 0 || exponent > order)
        throw std::invalid_argument("QSeries::monomial: exponent out of range");
    QSeries s(order);
    s.coeffs_[exponent] = std::move(c);
    return s;
}

bool QSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return c == 0; });
}

QSeries QSeries::operator-() const {
    QSeries r(order(), offset_);
    for (int i = 0; i <= order(); ++i) r.coeffs_[i] = -coeffs_[i];
    return r;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
    if (a.offset_ != b.offset_)
        throw std::invalid_argument("QSeries addition: offset mismatch (" + a.offset_.get_str() +
                                    " vs " + b.offset_.get_str() + "); align offsets first");
    QSeries r(std::min(a.order(), b.order()), a.offset_);
    for (int i = 0; i <= r.order(); ++i) r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    return r;
}

QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

QSeries operator*(const QSeries& a, const QSeries& b) {
    QSeries r(std::min(a.order(), b.order()), a.offset_ + b.offset_);
    for (int i = 0; i <= r.order(); ++i) {
        Rat acc = 0;
        for (int k = 0; k <= i; ++k) acc += a.coeffs_[k] * b.coeffs_[i - k];
        r.coeffs_[i] = acc;
    }
    return r;
}

QSeries operator*(const Rat& c, const QSeries& a) {
    QSeries r(a.order(), a.offset_);
    for (int i = 0; i <= a.order(); ++i) r.coeffs_[i] = c * a.coeffs_[i];
    return r;
}

QSeries QSeries::inverse() const {
    if (coeffs_[0] == 0)
        throw std::domain_error("QSeries::inverse: constant term is zero");
    QSeries r(order(), -offset_);
    const Rat c0 = Rat(1) / coeffs_[0];
    r.coeffs_[0] = c0;
    for (int i = 1; i <= order(); ++i) {
        Rat acc = 0;
        for (int k = 1; k <= i; ++k) acc += coeffs_[k] * r.coeffs_[i - k];
        r.coeffs_[i] = -c0 * acc;
    }
    return r;
}

QSeries QSeries::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    QSeries base = *this;
    QSeries acc = QSeries::one(order()).with_offset(Rat(0));
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

QSeries QSeries::truncated(int new_order) const {
    if (new_order > order())
        throw std::invalid_argument("QSeries::truncated: cannot extend order");
    QSeries r(new_order, offset_);
    std::copy_n(coeffs_.begin(), new_order + 1, r.coeffs_.begin());
    return r;
}

QSeries QSeries::with_offset(Rat offset) const {
    check_offset(offset);  // also canonicalizes
    QSeries r = *this;
    r.offset_ = std::move(offset);
    return r;
}

}  // namespace hilbq
