#include "hilbq/laurent.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace hilbq {

TLaurentSeries::TLaurentSeries(int q_order, int window) : q_order_(q_order), window_(window) {
    if (q_order < 0 || window < 0)
        throw std::invalid_argument("TLaurentSeries: q_order and window must be >= 0");
}

TLaurentSeries TLaurentSeries::one(int q_order, int window) {
    TLaurentSeries s(q_order, window);
    s.terms_.emplace(0, QSeries::one(q_order));
    return s;
}

int TLaurentSeries::retained_order(int degree) const {
    const int excess = std::max(0, std::abs(degree) - window_);
    return q_order_ - excess;
}

void TLaurentSeries::set(int degree, const QSeries& series) {
    if (series.order() != q_order_)
        throw std::invalid_argument("TLaurentSeries::set: q_order mismatch");
    if (series.offset() != 0)
        throw std::invalid_argument("TLaurentSeries::set: coefficient series must have offset 0");
    const int keep = retained_order(degree);
    if (keep < 0) return;
    QSeries pruned = series;
    for (int a = keep + 1; a <= q_order_; ++a) pruned.at(a) = 0;
    if (pruned.is_zero()) {
        terms_.erase(degree);
        return;
    }
    terms_.insert_or_assign(degree, std::move(pruned));
}

void TLaurentSeries::add(int degree, const QSeries& series) {
    auto it = terms_.find(degree);
    if (it == terms_.end()) {
        set(degree, series);
    } else {
        set(degree, it->second + series);
    }
}

QSeries TLaurentSeries::coeff(int degree) const {
    auto it = terms_.find(degree);
    if (it != terms_.end()) return it->second;
    return QSeries(q_order_);
}

TLaurentSeries TLaurentSeries::mul(const TLaurentSeries& other, int target_window) const {
    if (q_order_ != other.q_order_)
        throw std::invalid_argument("TLaurentSeries::mul: q_order mismatch");
    TLaurentSeries result(q_order_, target_window);
    for (const auto& [da, sa] : terms_) {
        for (const auto& [db, sb] : other.terms_) {
            result.add(da + db, sa * sb);
        }
    }
    return result;
}

bool operator==(const TLaurentSeries& a, const TLaurentSeries& b) {
    if (a.q_order_ != b.q_order_) return false;
    const int w = std::min(a.window_, b.window_);
    for (int d = -w; d <= w; ++d)
        if (a.coeff(d) != b.coeff(d)) return false;
    return true;
}

}  // namespace hilbq
