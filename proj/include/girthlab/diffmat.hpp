#pragma once

#include <array>
#include <optional>
#include <vector>

#include "girthlab/matrix.hpp"

namespace girthlab {

// Number of unordered row pairs C(m,2).
inline int pair_count(int m) { return m * (m - 1) / 2; }

// Position of the pair (i1,i2), 0 <= i1 < i2 < m, in the fixed ordering
// (0,1),(0,2),...,(0,m-1),(1,2),...,(m-2,m-1).
int row_pair_index(int i1, int i2, int m);
std::array<int, 2> row_pair_from_index(int idx, int m);

// Difference matrix D. Single-edge: one residue per present cell, cell (p,j)
// holds (b[i1][j] - b[i2][j]) mod N for the p-th row pair (i1,i2).
// Multiple-edge: cell (i,j) holds every within-entry difference
// (b^r - b^r') mod N over ordered pairs r != r' (so weight-1 cells carry an
// empty list); the row index then ranges over matrix rows, not row pairs.
// Unused source entries propagate to absent cells.
struct DiffD {
    int m = 0;        // rows of the source matrix
    int n = 0;
    int lifting = 0;
    bool single_edge = true;
    int rows = 0;     // C(m,2) in the single-edge form, m in the multiple-edge form
    std::vector<std::optional<std::vector<int>>> cells;  // rows x n

    const std::optional<std::vector<int>>& cell(int r, int j) const {
        return cells[static_cast<size_t>(r) * n + j];
    }
    // Single-edge convenience: the one residue of a present cell.
    std::optional<int> scalar(int r, int j) const {
        const auto& c = cell(r, j);
        if (!c) return std::nullopt;
        return c->front();
    }
};

// Difference matrix DD. Single-edge: C(m,2) x C(n,2); the cell for row pair p
// and column pair (j,j') is the ordered pair
// ((D[p][j] - D[p][j']) mod N, (D[p][j'] - D[p][j]) mod N), stored as a
// two-element list. Multiple-edge: C(m,2) x n; the cell for row pair (i,i')
// and column j lists every (b^r[i][j] - b^r'[i'][j]) mod N.
struct DiffDD {
    int m = 0;
    int n = 0;
    int lifting = 0;
    bool single_edge = true;
    int rows = 0;     // C(m,2)
    int cols = 0;     // C(n,2) single-edge, n multiple-edge
    std::vector<std::optional<std::vector<int>>> cells;

    const std::optional<std::vector<int>>& cell(int r, int c) const {
        return cells[static_cast<size_t>(r) * cols + c];
    }
};

DiffD build_D(const ExponentMatrix& B);
DiffDD build_DD(const ExponentMatrix& B);

}  // namespace girthlab
