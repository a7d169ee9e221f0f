#include "hilbq/young.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace hilbq {

int YoungDiagram::size() const {
    return std::accumulate(rows.begin(), rows.end(), 0);
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<YoungDiagram>& out) {
    if (remaining == 0) {
        out.push_back({cur});
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

const std::vector<YoungDiagram>& partitions_of(int m) {
    static std::map<int, std::vector<YoungDiagram>> cache;
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    if (m < 0) throw std::invalid_argument("partitions_of: m must be >= 0");
    std::vector<YoungDiagram> out;
    std::vector<int> cur;
    gen_partitions(m, m == 0 ? 1 : m, cur, out);
    std::sort(out.begin(), out.end());
    return cache.emplace(m, std::move(out)).first->second;
}

long partition_count(int m) { return static_cast<long>(partitions_of(m).size()); }

bool contains(const YoungDiagram& outer, const YoungDiagram& inner) {
    for (int b = 0; b < static_cast<int>(inner.rows.size()); ++b)
        if (inner.rows[b] > outer.row(b)) return false;
    return true;
}

bool contained_in_arrow(const YoungDiagram& base, const YoungDiagram& inner) {
    // Row b of base^{->} has length base.row(b) + 1.
    for (int b = 0; b < static_cast<int>(inner.rows.size()); ++b)
        if (inner.rows[b] > base.row(b) + 1) return false;
    return true;
}

bool contained_in_diag(const YoungDiagram& base, const YoungDiagram& inner) {
    // Row 0 of base^{/>} is infinite; row b >= 1 has length base.row(b-1) + 1.
    for (int b = 1; b < static_cast<int>(inner.rows.size()); ++b)
        if (inner.rows[b] > base.row(b - 1) + 1) return false;
    return true;
}

bool arrow_contained_in_diag(const YoungDiagram& y0, const YoungDiagram& yl) {
    // Row b of y0^{->} has length y0.row(b) + 1; row b >= 1 of yl^{/>} has
    // length yl.row(b-1) + 1. Both have all rows nonempty, so only the row
    // lengths at b >= 1 matter.
    const int height = std::max(static_cast<int>(y0.rows.size()), 1);
    for (int b = 1; b <= height; ++b)
        if (y0.row(b) > yl.row(b - 1)) return false;
    return true;
}

namespace {

bool link_ok(int i, int j, const YoungDiagram& prev, const YoungDiagram& cur) {
    // Chain neighbors: Y_i c Y_{i-1} except at the arrow boundary i = j.
    if (i == j) return contained_in_arrow(prev, cur);
    return contains(prev, cur);
}

void enum_rec(int n, int j, int i, int budget, std::vector<YoungDiagram>& tuple,
              std::vector<YoungTuple>& out) {
    if (i == n) {
        if (budget != 0) return;
        const bool wrap = (j == 0) ? contained_in_diag(tuple[n - 1], tuple[0])
                                   : arrow_contained_in_diag(tuple[0], tuple[n - 1]);
        if (wrap) out.push_back(tuple);
        return;
    }
    for (int sz = 0; sz <= budget; ++sz) {
        for (const YoungDiagram& y : partitions_of(sz)) {
            if (i > 0 && !link_ok(i, j, tuple[i - 1], y)) continue;
            tuple.push_back(y);
            enum_rec(n, j, i + 1, budget - sz, tuple, out);
            tuple.pop_back();
        }
    }
}

}  // namespace

std::vector<YoungTuple> enumerate_tuples(int n, int j, int m) {
    if (n < 1) throw std::invalid_argument("enumerate_tuples: n must be >= 1");
    if (j < 0 || j > n - 1) throw std::invalid_argument("enumerate_tuples: need 0 <= j <= n-1");
    if (m < 0) throw std::invalid_argument("enumerate_tuples: m must be >= 0");
    std::vector<YoungTuple> out;
    std::vector<YoungDiagram> tuple;
    enum_rec(n, j, 0, m, tuple, out);
    std::sort(out.begin(), out.end());
    return out;
}

long quot_count(int n, int j_sheaf, int m) {
    if (j_sheaf < 0 || j_sheaf > n - 1)
        throw std::invalid_argument("quot_count: need 0 <= j_sheaf <= n-1");
    const int j_appendix = (n - j_sheaf) % n;
    return static_cast<long>(enumerate_tuples(n, j_appendix, m).size());
}

namespace {

/// Complement diagram of a monomial ideal: either a finite partition or a
/// partition x-shifted with the column a = 0 filled in (ideal inside (x)).
struct IdealDiagram {
    const YoungDiagram* base;
    bool shifted;

    bool member(int a, int b) const {
        if (shifted) return a == 0 || base->contains_box(a - 1, b);
        return base->contains_box(a, b);
    }
};

bool ideal_conditions_hold(int n, int j, const std::vector<YoungDiagram>& parts, int extent) {
    std::vector<IdealDiagram> d(n);
    for (int k = 0; k < n; ++k) d[k] = {&parts[k], k < j};
    // I_0 c I_1 c ... c I_{n-1}: complements decrease.
    for (int k = 0; k + 1 < n; ++k)
        for (int b = 0; b < extent; ++b)
            for (int a = 0; a < extent; ++a)
                if (d[k + 1].member(a, b) && !d[k].member(a, b)) return false;
    // Closure under multiplication by z: xy * I_{n-1} c I_0.
    for (int b = 0; b < extent; ++b)
        for (int a = 0; a < extent; ++a)
            if (!d[n - 1].member(a, b) && d[0].member(a + 1, b + 1)) return false;
    return true;
}

void ideal_rec(int n, int j, int i, int budget, int m, std::vector<YoungDiagram>& parts,
               long& count) {
    if (i == n) {
        if (budget == 0 && ideal_conditions_hold(n, j, parts, m + 2)) ++count;
        return;
    }
    for (int sz = 0; sz <= budget; ++sz) {
        for (const YoungDiagram& y : partitions_of(sz)) {
            parts.push_back(y);
            ideal_rec(n, j, i + 1, budget - sz, m, parts, count);
            parts.pop_back();
        }
    }
}

}  // namespace

long ideal_oracle(int n, int j, int m) {
    if (n < 1) throw std::invalid_argument("ideal_oracle: n must be >= 1");
    if (j < 0 || j > n - 1) throw std::invalid_argument("ideal_oracle: need 0 <= j <= n-1");
    if (m < 0) throw std::invalid_argument("ideal_oracle: m must be >= 0");
    long count = 0;
    std::vector<YoungDiagram> parts;
    ideal_rec(n, j, 0, m, m, parts, count);
    return count;
}

}  // namespace hilbq
