#pragma once

#include <vector>

#include "hilbq/report.hpp"

namespace hilbq {

/// Partition as a subset of Z_{>=0}^2: rows[b] is the length of row b
/// (bottom row first), weakly decreasing. Box (a, b) belongs to the diagram
/// iff b < rows.size() and a < rows[b].
struct YoungDiagram {
    std::vector<int> rows;

    int size() const;
    int row(int b) const { return b < static_cast<int>(rows.size()) ? rows[b] : 0; }
    bool contains_box(int a, int b) const { return a >= 0 && b >= 0 && a < row(b); }

    friend bool operator==(const YoungDiagram& x, const YoungDiagram& y) = default;
    friend bool operator<(const YoungDiagram& x, const YoungDiagram& y) {
        return x.rows < y.rows;
    }
};

/// All partitions of m, sorted lexicographically on the row list.
const std::vector<YoungDiagram>& partitions_of(int m);

/// Number of partitions of m.
long partition_count(int m);

/// inner subset of outer as plain diagrams.
bool contains(const YoungDiagram& outer, const YoungDiagram& inner);

/// inner subset of base^{->}, the right-shift of base with the column a = 0
/// filled in: (a, b) in base^{->} iff a = 0 or (a-1, b) in base.
bool contained_in_arrow(const YoungDiagram& base, const YoungDiagram& inner);

/// inner subset of base^{/>}, the diagonal shift of base with both axes
/// filled in: (a, b) in base^{/>} iff a = 0 or b = 0 or (a-1, b-1) in base.
bool contained_in_diag(const YoungDiagram& base, const YoungDiagram& inner);

/// y0^{->} subset of yl^{/>} (the wrap-around containment for j >= 1 chains).
bool arrow_contained_in_diag(const YoungDiagram& y0, const YoungDiagram& yl);

using YoungTuple = std::vector<YoungDiagram>;

/// All n-tuples (Y_0, ..., Y_{n-1}) with sum of sizes m satisfying the
/// nesting chain
///   Y_{n-1} c ... c Y_j c Y_{j-1}^{->} c ... c Y_0^{->} c Y_{n-1}^{/>}
/// (for j = 0 the chain is Y_{n-1} c ... c Y_0 c Y_{n-1}^{/>}).
/// Output in lexicographic order on the concatenated row lists.
std::vector<YoungTuple> enumerate_tuples(int n, int j, int m);

/// Tuple count for the sheaf-indexed Quot scheme: the parameter j_sheaf of
/// O(j_sheaf * D) maps to the tuple-chain parameter (n - j_sheaf) mod n.
long quot_count(int n, int j_sheaf, int m);

/// Same count from chains of monomial ideals I_0 c ... c I_{n-1} with
/// xy*I_{n-1} c I_0, checked by raw membership sweeps instead of the
/// row-list chain conditions.
long ideal_oracle(int n, int j, int m);

}  // namespace hilbq
