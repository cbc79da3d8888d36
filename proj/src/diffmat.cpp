#include "girthlab/diffmat.hpp"

namespace girthlab {

int row_pair_index(int i1, int i2, int m) {
    if (i1 < 0 || i1 >= i2 || i2 >= m) throw std::invalid_argument("row_pair_index: need 0 <= i1 < i2 < m");
    // pairs with first component < i1 come first: C(m,2) - C(m-i1,2) of them
    return pair_count(m) - pair_count(m - i1) + (i2 - i1 - 1);
}

std::array<int, 2> row_pair_from_index(int idx, int m) {
    for (int i1 = 0; i1 < m - 1; ++i1) {
        int block = m - 1 - i1;
        if (idx < block) return {i1, i1 + 1 + idx};
        idx -= block;
    }
    throw std::invalid_argument("row_pair_from_index: index out of range");
}

DiffD build_D(const ExponentMatrix& B) {
    const int m = B.rows(), n = B.cols(), N = B.lifting();
    DiffD D;
    D.m = m;
    D.n = n;
    D.lifting = N;
    D.single_edge = B.is_single_edge();
    if (D.single_edge) {
        D.rows = pair_count(m);
        D.cells.assign(static_cast<size_t>(D.rows) * n, std::nullopt);
        for (int i1 = 0; i1 < m; ++i1)
            for (int i2 = i1 + 1; i2 < m; ++i2) {
                int p = row_pair_index(i1, i2, m);
                for (int j = 0; j < n; ++j) {
                    auto a = B.shift(i1, j), b = B.shift(i2, j);
                    if (!a || !b) continue;
                    D.cells[static_cast<size_t>(p) * n + j] = std::vector<int>{mod_reduce(*a - *b, N)};
                }
            }
    } else {
        D.rows = m;
        D.cells.assign(static_cast<size_t>(m) * n, std::nullopt);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) {
                const ExponentEntry& e = B.entry(i, j);
                if (e.unused()) continue;
                std::vector<int> diffs;
                diffs.reserve(static_cast<size_t>(e.weight()) * (e.weight() - 1));
                for (int r = 0; r < e.weight(); ++r)
                    for (int rp = 0; rp < e.weight(); ++rp)
                        if (r != rp) diffs.push_back(mod_reduce(e.shifts[r] - e.shifts[rp], N));
                D.cells[static_cast<size_t>(i) * n + j] = std::move(diffs);
            }
    }
    return D;
}

DiffDD build_DD(const ExponentMatrix& B) {
    const int m = B.rows(), n = B.cols(), N = B.lifting();
    DiffDD DD;
    DD.m = m;
    DD.n = n;
    DD.lifting = N;
    DD.single_edge = B.is_single_edge();
    DD.rows = pair_count(m);
    if (DD.single_edge) {
        DiffD D = build_D(B);
        DD.cols = pair_count(n);
        DD.cells.assign(static_cast<size_t>(DD.rows) * DD.cols, std::nullopt);
        for (int p = 0; p < DD.rows; ++p)
            for (int j1 = 0; j1 < n; ++j1)
                for (int j2 = j1 + 1; j2 < n; ++j2) {
                    auto a = D.scalar(p, j1), b = D.scalar(p, j2);
                    if (!a || !b) continue;
                    int q = row_pair_index(j1, j2, n);
                    int d = mod_reduce(*a - *b, N);
                    DD.cells[static_cast<size_t>(p) * DD.cols + q] =
                        std::vector<int>{d, mod_reduce(-d, N)};
                }
    } else {
        DD.cols = n;
        DD.cells.assign(static_cast<size_t>(DD.rows) * n, std::nullopt);
        for (int i1 = 0; i1 < m; ++i1)
            for (int i2 = i1 + 1; i2 < m; ++i2) {
                int p = row_pair_index(i1, i2, m);
                for (int j = 0; j < n; ++j) {
                    const ExponentEntry& a = B.entry(i1, j);
                    const ExponentEntry& b = B.entry(i2, j);
                    if (a.unused() || b.unused()) continue;
                    std::vector<int> diffs;
                    diffs.reserve(static_cast<size_t>(a.weight()) * b.weight());
                    for (int r : a.shifts)
                        for (int rp : b.shifts) diffs.push_back(mod_reduce(r - rp, N));
                    DD.cells[static_cast<size_t>(p) * n + j] = std::move(diffs);
                }
            }
    }
    return DD;
}

}  // namespace girthlab
