#include "girthlab/girth_me.hpp"

#include <algorithm>
#include <map>

namespace girthlab {

namespace {

struct ValueSeen {
    int row = -1, col = -1;
};

// Row/column value table over [0,N) remembering the first occurrence.
class ResidueTable {
  public:
    explicit ResidueTable(int lifting) : seen_(lifting) {}
    // Returns the previous occurrence when v was already present.
    std::optional<ValueSeen> insert(int v, int row, int col) {
        if (seen_[v].row >= 0) return seen_[v];
        seen_[v] = {row, col};
        return std::nullopt;
    }
    bool contains(int v) const { return seen_[v].row >= 0; }
    ValueSeen at(int v) const { return seen_[v]; }

  private:
    std::vector<ValueSeen> seen_;
};

bool is_prime(long long v) {
    if (v < 2) return false;
    for (long long d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

}  // namespace

CheckResult check_me_4cycles(const ExponentMatrix& B, const DiffD& D, const DiffDD& DD) {
    const int N = B.lifting();
    if (B.is_single_edge()) return check_4cycles(D);
    const int m = B.rows(), n = B.cols();

    // state I: a doubled within-entry difference
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            const auto& cell = D.cell(i, j);
            if (!cell) continue;
            for (int d : *cell)
                if (mod_reduce(2LL * d, N) == 0)
                    return ConditionViolation{4, "me-2D-zero", {i}, {j}, {d, d}};
        }

    // states II/III: repeated difference within a row or a column of D
    for (int i = 0; i < m; ++i) {
        ResidueTable row(N);
        for (int j = 0; j < n; ++j) {
            const auto& cell = D.cell(i, j);
            if (!cell) continue;
            for (int d : *cell)
                if (auto prev = row.insert(d, i, j))
                    return ConditionViolation{4, "me-D-row-repeat", {i}, {prev->col, j}, {d, mod_reduce(-d, N)}};
        }
    }
    for (int j = 0; j < n; ++j) {
        ResidueTable col(N);
        for (int i = 0; i < m; ++i) {
            const auto& cell = D.cell(i, j);
            if (!cell) continue;
            for (int d : *cell)
                if (auto prev = col.insert(d, i, j))
                    return ConditionViolation{4, "me-D-col-repeat", {prev->row, i}, {j}, {d, mod_reduce(-d, N)}};
        }
    }

    // state IV: repeated component within a row of DD
    for (int p = 0; p < DD.rows; ++p) {
        ResidueTable row(N);
        auto pr = row_pair_from_index(p, m);
        for (int j = 0; j < n; ++j) {
            const auto& cell = DD.cell(p, j);
            if (!cell) continue;
            for (int d : *cell)
                if (auto prev = row.insert(d, p, j))
                    return ConditionViolation{4, "me-DD-row-repeat",
                                              {pr[0], pr[1]},
                                              {prev->col, j},
                                              {d, mod_reduce(-d, N)}};
        }
    }
    return std::nullopt;
}

CheckResult check_me_6cycles(const ExponentMatrix& B, const DiffD& D, const DiffDD& DD) {
    const int N = B.lifting();
    if (B.is_single_edge()) return check_6cycles(D);
    const int m = B.rows(), n = B.cols();

    // weight >= 3 forces 6-cycles at every lifting degree
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            const ExponentEntry& e = B.entry(i, j);
            if (e.weight() >= 3) {
                int x = e.shifts[0], y = e.shifts[1], z = e.shifts[2];
                return ConditionViolation{6, "entry-weight>=3",
                                          {i},
                                          {j},
                                          {mod_reduce(x - y, N), mod_reduce(z - x, N), mod_reduce(y - z, N)}};
            }
        }

    // clause 1: 3d = 0
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            const auto& cell = D.cell(i, j);
            if (!cell) continue;
            for (int d : *cell)
                if (mod_reduce(3LL * d, N) == 0)
                    return ConditionViolation{6, "me-3D-zero", {i}, {j}, {d, d, d}};
        }

    // clause 2: D_i and 2D_i disjoint, per row and per column
    for (int i = 0; i < m; ++i) {
        ResidueTable row(N);
        for (int j = 0; j < n; ++j) {
            const auto& cell = D.cell(i, j);
            if (!cell) continue;
            for (int d : *cell) row.insert(d, i, j);
        }
        for (int j = 0; j < n; ++j) {
            const auto& cell = D.cell(i, j);
            if (!cell) continue;
            for (int d : *cell) {
                int doubled = mod_reduce(2LL * d, N);
                if (row.contains(doubled)) {
                    auto at = row.at(doubled);
                    return ConditionViolation{6, "me-D-row-2D", {i}, {j, at.col}, {d, d, mod_reduce(-doubled, N)}};
                }
            }
        }
    }
    for (int j = 0; j < n; ++j) {
        ResidueTable col(N);
        for (int i = 0; i < m; ++i) {
            const auto& cell = D.cell(i, j);
            if (!cell) continue;
            for (int d : *cell) col.insert(d, i, j);
        }
        for (int i = 0; i < m; ++i) {
            const auto& cell = D.cell(i, j);
            if (!cell) continue;
            for (int d : *cell) {
                int doubled = mod_reduce(2LL * d, N);
                if (col.contains(doubled)) {
                    auto at = col.at(doubled);
                    return ConditionViolation{6, "me-D-col-2D", {i, at.row}, {j}, {d, d, mod_reduce(-doubled, N)}};
                }
            }
        }
    }

    // clause 3: three within-entry differences across three columns of a row
    for (int i = 0; i < m; ++i)
        for (int j1 = 0; j1 < n; ++j1) {
            const auto& c1 = D.cell(i, j1);
            if (!c1 || c1->empty()) continue;
            for (int j2 = j1 + 1; j2 < n; ++j2) {
                const auto& c2 = D.cell(i, j2);
                if (!c2 || c2->empty()) continue;
                for (int j3 = j2 + 1; j3 < n; ++j3) {
                    const auto& c3 = D.cell(i, j3);
                    if (!c3 || c3->empty()) continue;
                    for (int d1 : *c1)
                        for (int d2 : *c2)
                            for (int d3 : *c3)
                                if (mod_reduce(static_cast<long long>(d1) + d2 + d3, N) == 0)
                                    return ConditionViolation{6, "me-D-row-triple", {i}, {j1, j2, j3}, {d1, d2, d3}};
                }
            }
        }

    // clause 4: cross-column DD differences versus the two row value sets
    {
        std::vector<ResidueTable> row_values;
        row_values.reserve(m);
        for (int i = 0; i < m; ++i) {
            ResidueTable t(N);
            for (int j = 0; j < n; ++j) {
                const auto& cell = D.cell(i, j);
                if (!cell) continue;
                for (int d : *cell) t.insert(d, i, j);
            }
            row_values.push_back(std::move(t));
        }
        for (int p = 0; p < DD.rows; ++p) {
            auto pr = row_pair_from_index(p, m);
            for (int j1 = 0; j1 < n; ++j1) {
                const auto& c1 = DD.cell(p, j1);
                if (!c1) continue;
                for (int j2 = 0; j2 < n; ++j2) {
                    if (j2 == j1) continue;
                    const auto& c2 = DD.cell(p, j2);
                    if (!c2) continue;
                    for (int u : *c1)
                        for (int v : *c2) {
                            int val = mod_reduce(static_cast<long long>(u) - v, N);
                            for (int which : {0, 1}) {
                                int row = pr[which];
                                if (val != 0 && row_values[row].contains(val)) {
                                    auto at = row_values[row].at(val);
                                    return ConditionViolation{6, "me-DD-cross",
                                                              {pr[0], pr[1], row},
                                                              {j1, j2, at.col},
                                                              {u, mod_reduce(-v, N), mod_reduce(-val, N)}};
                                }
                            }
                        }
                }
            }
        }
    }

    // clause 5: direct enumeration over 3 distinct rows and 3 distinct columns
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            if (b == a) continue;
            for (int c = std::max(a, b) + 1; c < m; ++c) {  // rotations fixed by putting the largest last
                for (int n0 = 0; n0 < n; ++n0)
                    for (int n1 = 0; n1 < n; ++n1) {
                        if (n1 == n0) continue;
                        for (int n2 = 0; n2 < n; ++n2) {
                            if (n2 == n0 || n2 == n1) continue;
                            const ExponentEntry& e00 = B.entry(a, n0);
                            const ExponentEntry& e01 = B.entry(a, n1);
                            const ExponentEntry& e11 = B.entry(b, n1);
                            const ExponentEntry& e12 = B.entry(b, n2);
                            const ExponentEntry& e22 = B.entry(c, n2);
                            const ExponentEntry& e20 = B.entry(c, n0);
                            if (e00.unused() || e01.unused() || e11.unused() || e12.unused() || e22.unused() ||
                                e20.unused())
                                continue;
                            for (int s0 : e00.shifts)
                                for (int s1 : e01.shifts)
                                    for (int s2 : e11.shifts)
                                        for (int s3 : e12.shifts)
                                            for (int s4 : e22.shifts)
                                                for (int s5 : e20.shifts) {
                                                    long long sum = static_cast<long long>(s0) - s1 + s2 - s3 + s4 - s5;
                                                    if (mod_reduce(sum, N) == 0)
                                                        return ConditionViolation{
                                                            6, "me-3x3-eq",
                                                            {a, b, c},
                                                            {n0, n1, n2},
                                                            {s0, mod_reduce(-s1, N), s2, mod_reduce(-s3, N), s4,
                                                             mod_reduce(-s5, N)}};
                                                }
                        }
                    }
            }
        }
    return std::nullopt;
}

namespace {

// Closed-walk enumeration with symbolic shift values; a vanishing integer sum
// means the cycle appears at every lifting degree.
struct SymbolicSearch {
    const ExponentMatrix& B;
    std::vector<std::vector<long long>> symbols;  // per cell, per shift index
    int k = 0;
    std::vector<WalkStep> steps;
    std::optional<CycleWitness> found;

    explicit SymbolicSearch(const ExponentMatrix& b) : B(b) {
        symbols.resize(static_cast<size_t>(B.rows()) * B.cols());
        long long candidate = 1'000'003;
        for (int i = 0; i < B.rows(); ++i)
            for (int j = 0; j < B.cols(); ++j) {
                auto& cell = symbols[static_cast<size_t>(i) * B.cols() + j];
                for (int r = 0; r < B.entry(i, j).weight(); ++r) {
                    while (!is_prime(candidate)) ++candidate;
                    cell.push_back(candidate);
                    candidate += 2;
                }
            }
    }

    long long sym(int i, int j, int r) const { return symbols[static_cast<size_t>(i) * B.cols() + j][r]; }

    bool extend(int s, int row, int col, int r, long long sum, int row0, int col0, int r0) {
        const bool last = (s == k - 1);
        const int cmin = last ? col0 : 0;
        const int cmax = last ? col0 : B.cols() - 1;
        for (int c = cmin; c <= cmax; ++c) {
            const ExponentEntry& out = B.entry(row, c);
            if (out.unused()) continue;
            for (int rp = 0; rp < out.weight(); ++rp) {
                if (c == col && rp == r) continue;
                long long total = sum + sym(row, col, r) - sym(row, c, rp);
                steps[s] = {row, col, c, r, rp};
                if (last) {
                    if (row == row0 && rp == r0) continue;
                    if (total == 0) {
                        found = CycleWitness{2 * k, steps};
                        return true;
                    }
                    continue;
                }
                for (int row2 = row0; row2 < B.rows(); ++row2) {
                    const ExponentEntry& in = B.entry(row2, c);
                    if (in.unused()) continue;
                    for (int r2 = 0; r2 < in.weight(); ++r2) {
                        if (row2 == row && r2 == rp) continue;
                        if (extend(s + 1, row2, c, r2, total, row0, col0, r0)) return true;
                    }
                }
            }
        }
        return false;
    }

    std::optional<CycleWitness> run(int length) {
        k = length / 2;
        steps.assign(k, {});
        found.reset();
        for (int row0 = 0; row0 < B.rows() && !found; ++row0)
            for (int col0 = 0; col0 < B.cols() && !found; ++col0) {
                const ExponentEntry& e = B.entry(row0, col0);
                if (e.unused()) continue;
                for (int r0 = 0; r0 < e.weight(); ++r0)
                    if (extend(0, row0, col0, r0, 0, row0, col0, r0)) break;
            }
        return found;
    }
};

}  // namespace

InevitableCycleReport detect_inevitable_cycles(const ExponentMatrix& B) {
    const int m = B.rows(), n = B.cols();
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            if (B.entry(i, j).weight() >= 3) return {true, 6, "entry-weight>=3", {i}, {j}, std::nullopt};
    for (int i = 0; i < m; ++i)
        for (int j1 = 0; j1 < n; ++j1) {
            if (B.entry(i, j1).weight() < 2) continue;
            for (int j2 = j1 + 1; j2 < n; ++j2)
                if (B.entry(i, j2).weight() >= 2) return {true, 8, "row-[2 2]", {i}, {j1, j2}, std::nullopt};
        }
    for (int i1 = 0; i1 < m; ++i1)
        for (int i2 = 0; i2 < m; ++i2) {
            if (i2 == i1) continue;
            for (int j1 = 0; j1 < n; ++j1) {
                if (B.entry(i1, j1).weight() < 2) continue;
                for (int j2 = 0; j2 < n; ++j2) {
                    if (j2 == j1) continue;
                    if (!B.entry(i1, j2).unused() && !B.entry(i2, j1).unused() && !B.entry(i2, j2).unused())
                        return {true, 10, "[2 1;1 1]", {std::min(i1, i2), std::max(i1, i2)}, {std::min(j1, j2),
                                std::max(j1, j2)}, std::nullopt};
                }
            }
        }
    if (m <= 4 && n <= 4) {
        SymbolicSearch search(B);
        for (int len = 4; len <= 10; len += 2)
            if (auto w = search.run(len)) {
                InevitableCycleReport rep{true, len, "symbolic", {}, {}, w};
                for (const WalkStep& s : w->steps) {
                    rep.rows.push_back(s.row);
                    rep.cols.push_back(s.col_in);
                }
                return rep;
            }
    }
    return {};
}

}  // namespace girthlab
