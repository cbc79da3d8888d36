#include "girthlab/girth_se.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "girthlab/girth_me.hpp"
#include "girthlab/oracle.hpp"

namespace girthlab {

namespace {

void require_single_edge(bool single_edge, const char* who) {
    if (!single_edge) throw std::invalid_argument(std::string(who) + ": multiple-edge input, use the girth-me checks");
}

// b[x][j] - b[y][j] expressed through D, valid for any x != y.
std::optional<int> signed_diff(const DiffD& D, int x, int y, int j) {
    if (x < y) return D.scalar(row_pair_index(x, y, D.m), j);
    auto v = D.scalar(row_pair_index(y, x, D.m), j);
    if (!v) return std::nullopt;
    return mod_reduce(-*v, D.lifting);
}

}  // namespace

CheckResult check_4cycles(const DiffD& D) {
    require_single_edge(D.single_edge, "check_4cycles");
    const int N = D.lifting;
    for (int p = 0; p < D.rows; ++p) {
        std::vector<int> first_col(N, -1);
        for (int j = 0; j < D.n; ++j) {
            auto v = D.scalar(p, j);
            if (!v) continue;
            if (first_col[*v] >= 0) {
                auto [i1, i2] = row_pair_from_index(p, D.m);
                return ConditionViolation{4, "D-row-repeat",
                                          {i1, i2},
                                          {first_col[*v], j},
                                          {*v, mod_reduce(-*v, N)}};
            }
            first_col[*v] = j;
        }
    }
    return std::nullopt;
}

std::vector<std::array<int, 3>> enumerate_row_triples(int m) {
    std::vector<std::array<int, 3>> out;
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            for (int c = b + 1; c < m; ++c)
                out.push_back({row_pair_index(a, b, m), row_pair_index(a, c, m), row_pair_index(b, c, m)});
    return out;
}

namespace {

// Shared enumeration of the 6-cycle equations. Calls fn(a,b,c, j1,j2,j3, value)
// for every matrix-row triple and ordered distinct column triple; stops when
// fn returns true.
template <typename Fn>
void for_each_six_value(const DiffD& D, Fn&& fn) {
    const int m = D.m, n = D.n, N = D.lifting;
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            for (int c = b + 1; c < m; ++c) {
                int t1 = row_pair_index(a, b, m);
                int t2 = row_pair_index(a, c, m);
                int t3 = row_pair_index(b, c, m);
                for (int j1 = 0; j1 < n; ++j1) {
                    auto d1 = D.scalar(t1, j1);
                    if (!d1) continue;
                    for (int j2 = 0; j2 < n; ++j2) {
                        if (j2 == j1) continue;
                        auto d2 = D.scalar(t2, j2);
                        if (!d2) continue;
                        for (int j3 = 0; j3 < n; ++j3) {
                            if (j3 == j1 || j3 == j2) continue;
                            auto d3 = D.scalar(t3, j3);
                            if (!d3) continue;
                            int v = mod_reduce(-static_cast<long long>(*d1) + *d2 - *d3, N);
                            if (fn(a, b, c, j1, j2, j3, v)) return;
                        }
                    }
                }
            }
}

}  // namespace

CheckResult check_6cycles(const DiffD& D) {
    require_single_edge(D.single_edge, "check_6cycles");
    CheckResult result;
    const int N = D.lifting;
    for_each_six_value(D, [&](int a, int b, int c, int j1, int j2, int j3, int v) {
        if (v != 0) return false;
        int t1 = row_pair_index(a, b, D.m), t2 = row_pair_index(a, c, D.m), t3 = row_pair_index(b, c, D.m);
        result = ConditionViolation{6, "six-cycle-equation",
                                    {a, b, c},
                                    {j1, j2, j3},
                                    {mod_reduce(-*D.scalar(t1, j1), N), *D.scalar(t2, j2),
                                     mod_reduce(-*D.scalar(t3, j3), N)}};
        return true;
    });
    return result;
}

bool SixCycleValues::contains(int v) const {
    return std::binary_search(values.begin(), values.end(), v);
}

SixCycleValues six_cycle_values(const DiffD& D) {
    require_single_edge(D.single_edge, "six_cycle_values");
    SixCycleValues out;
    out.lifting = D.lifting;
    std::set<int> all;
    std::map<std::array<int, 3>, std::set<int>> per_triple;
    for_each_six_value(D, [&](int a, int b, int c, int, int, int, int v) {
        all.insert(v);
        per_triple[{a, b, c}].insert(v);
        return false;
    });
    out.values.assign(all.begin(), all.end());
    for (auto& [triple, vals] : per_triple)
        out.by_triple.emplace_back(triple, std::vector<int>(vals.begin(), vals.end()));
    return out;
}

namespace {

struct DDSlot {
    int p;        // D-row (row pair) index
    int j1, j2;   // column pair
    int comp[2];  // the two components, Definition-2 order
};

std::vector<DDSlot> collect_dd_slots(const DiffDD& DD) {
    std::vector<DDSlot> slots;
    for (int p = 0; p < DD.rows; ++p)
        for (int q = 0; q < DD.cols; ++q) {
            const auto& cell = DD.cell(p, q);
            if (!cell) continue;
            auto [j1, j2] = row_pair_from_index(q, DD.n);
            slots.push_back({p, j1, j2, {(*cell)[0], (*cell)[1]}});
        }
    return slots;
}

bool pairs_share_row(int p1, int p2, int m) {
    auto a = row_pair_from_index(p1, m);
    auto b = row_pair_from_index(p2, m);
    return a[0] == b[0] || a[0] == b[1] || a[1] == b[0] || a[1] == b[1];
}

bool col_pairs_intersect(const DDSlot& s1, const DDSlot& s2) {
    return s1.j1 == s2.j1 || s1.j1 == s2.j2 || s1.j2 == s2.j1 || s1.j2 == s2.j2;
}

// The three cyclic orders of a 4-set {a<b<c<d}, as row sequences.
constexpr int kFourCycleOrders[3][4] = {{0, 1, 2, 3}, {0, 1, 3, 2}, {0, 2, 1, 3}};

}  // namespace

CheckResult check_8cycles(const DiffD& D, const DiffDD& DD) {
    require_single_edge(D.single_edge && DD.single_edge, "check_8cycles");
    const int N = D.lifting, m = D.m, n = D.n;
    std::vector<DDSlot> slots = collect_dd_slots(DD);

    // (a) doubled component: 2d = 0 mod N
    for (const DDSlot& s : slots)
        for (int c = 0; c < 2; ++c)
            if (mod_reduce(2LL * s.comp[c], N) == 0) {
                auto [i1, i2] = row_pair_from_index(s.p, m);
                return ConditionViolation{8, "DD-component-doubled", {i1, i2}, {s.j1, s.j2}, {s.comp[c], s.comp[c]}};
            }

    // (b) repeated components wherever a single 8-cycle can realize the
    // coincidence: same D-row, D-rows sharing a matrix row, or disjoint row
    // pairs whose column pairs intersect.
    {
        std::map<int, std::vector<int>> by_value;  // component value -> slot indices, insertion order
        for (size_t si = 0; si < slots.size(); ++si) {
            const DDSlot& s = slots[si];
            for (int c = 0; c < 2; ++c) {
                if (c == 1 && s.comp[1] == s.comp[0]) break;
                for (int oi : by_value[s.comp[c]]) {
                    const DDSlot& o = slots[oi];
                    bool realizable = (o.p == s.p) || pairs_share_row(o.p, s.p, m) || col_pairs_intersect(o, s);
                    if (!realizable) continue;
                    auto [i1, i2] = row_pair_from_index(o.p, m);
                    auto [i3, i4] = row_pair_from_index(s.p, m);
                    return ConditionViolation{8, "DD-repeat",
                                              {i1, i2, i3, i4},
                                              {o.j1, o.j2, s.j1, s.j2},
                                              {s.comp[c], mod_reduce(-s.comp[c], N)}};
                }
            }
            by_value[s.comp[0]].push_back(static_cast<int>(si));
            if (s.comp[1] != s.comp[0]) by_value[s.comp[1]].push_back(static_cast<int>(si));
        }
    }

    // (c) 4 distinct rows in cyclic order, 4 distinct columns
    if (m >= 4 && n >= 4) {
        int rows4[4];
        for (rows4[0] = 0; rows4[0] < m; ++rows4[0])
            for (rows4[1] = rows4[0] + 1; rows4[1] < m; ++rows4[1])
                for (rows4[2] = rows4[1] + 1; rows4[2] < m; ++rows4[2])
                    for (rows4[3] = rows4[2] + 1; rows4[3] < m; ++rows4[3])
                        for (const auto& order : kFourCycleOrders) {
                            int r[4];
                            for (int i = 0; i < 4; ++i) r[i] = rows4[order[i]];
                            int cols[4];
                            for (cols[0] = 0; cols[0] < n; ++cols[0])
                                for (cols[1] = 0; cols[1] < n; ++cols[1]) {
                                    if (cols[1] == cols[0]) continue;
                                    for (cols[2] = 0; cols[2] < n; ++cols[2]) {
                                        if (cols[2] == cols[0] || cols[2] == cols[1]) continue;
                                        for (cols[3] = 0; cols[3] < n; ++cols[3]) {
                                            if (cols[3] == cols[0] || cols[3] == cols[1] || cols[3] == cols[2])
                                                continue;
                                            long long sum = 0;
                                            std::vector<int> terms;
                                            bool ok = true;
                                            for (int s = 0; s < 4 && ok; ++s) {
                                                // link s joins rows r[s], r[s+1] at column cols[(s+1)%4]
                                                auto t = signed_diff(D, r[(s + 1) % 4], r[s], cols[(s + 1) % 4]);
                                                if (!t) {
                                                    ok = false;
                                                    break;
                                                }
                                                terms.push_back(*t);
                                                sum += *t;
                                            }
                                            if (ok && mod_reduce(sum, N) == 0)
                                                return ConditionViolation{
                                                    8, "D-4x4",
                                                    {r[0], r[1], r[2], r[3]},
                                                    {cols[0], cols[1], cols[2], cols[3]},
                                                    terms};
                                        }
                                    }
                                }
                        }
    }
    return std::nullopt;
}

CheckResult check_10cycles(const ExponentMatrix& B, const DiffD& D, const DiffDD& DD) {
    require_single_edge(D.single_edge && DD.single_edge, "check_10cycles");
    const int N = D.lifting, m = D.m, n = D.n;
    std::vector<DDSlot> slots = collect_dd_slots(DD);
    std::map<int, std::vector<std::pair<int, int>>> occ;  // value -> (slot index, component index)
    for (size_t si = 0; si < slots.size(); ++si)
        for (int c = 0; c < 2; ++c) {
            if (c == 1 && slots[si].comp[1] == slots[si].comp[0]) break;
            occ[slots[si].comp[c]].push_back({static_cast<int>(si), c});
        }

    // (a) a 6-cycle value cancels a DD component
    CheckResult result;
    for (int a = 0; a < m && !result; ++a)
        for (int b = a + 1; b < m && !result; ++b)
            for (int c = b + 1; c < m && !result; ++c) {
                int t1 = row_pair_index(a, b, m), t2 = row_pair_index(a, c, m), t3 = row_pair_index(b, c, m);
                for (int j1 = 0; j1 < n && !result; ++j1) {
                    auto d1 = D.scalar(t1, j1);
                    if (!d1) continue;
                    for (int j2 = 0; j2 < n && !result; ++j2) {
                        if (j2 == j1) continue;
                        auto d2 = D.scalar(t2, j2);
                        if (!d2) continue;
                        for (int j3 = 0; j3 < n && !result; ++j3) {
                            if (j3 == j1 || j3 == j2) continue;
                            auto d3 = D.scalar(t3, j3);
                            if (!d3) continue;
                            int v = mod_reduce(-static_cast<long long>(*d1) + *d2 - *d3, N);
                            auto it = occ.find(mod_reduce(-v, N));
                            if (it == occ.end()) continue;
                            for (auto [si, comp] : it->second) {
                                const DDSlot& s = slots[si];
                                auto pr = row_pair_from_index(s.p, m);
                                int inside = (pr[0] == a || pr[0] == b || pr[0] == c) +
                                             (pr[1] == a || pr[1] == b || pr[1] == c);
                                if (inside == 0 &&
                                    !(s.j1 == j1 || s.j1 == j2 || s.j1 == j3 || s.j2 == j1 || s.j2 == j2 ||
                                      s.j2 == j3))
                                    continue;
                                result = ConditionViolation{
                                    10, "sixvalue-vs-DD",
                                    {a, b, c, pr[0], pr[1]},
                                    {j1, j2, j3, s.j1, s.j2},
                                    {mod_reduce(-*d1, N), *d2, mod_reduce(-*d3, N),
                                     comp == 0 ? *D.scalar(s.p, s.j1) : *D.scalar(s.p, s.j2),
                                     mod_reduce(comp == 0 ? -*D.scalar(s.p, s.j2) : -*D.scalar(s.p, s.j1), N)}};
                                break;
                            }
                        }
                    }
                }
            }
    if (result) return result;

    // (b) two DD components cancel across disjoint row pairs at disjoint
    // column pairs (not an 8-cycle, but a 10-cycle with a doubled column)
    for (size_t si = 0; si < slots.size(); ++si) {
        const DDSlot& s = slots[si];
        auto it = occ.find(mod_reduce(-s.comp[0], N));
        if (it == occ.end()) continue;
        for (auto [oi, comp] : it->second) {
            if (static_cast<size_t>(oi) >= si) break;  // insertion order is slot order
            const DDSlot& o = slots[oi];
            if (pairs_share_row(o.p, s.p, m) || col_pairs_intersect(o, s)) continue;
            auto p1 = row_pair_from_index(o.p, m);
            auto p2 = row_pair_from_index(s.p, m);
            int x = comp == 0 ? o.comp[0] : o.comp[1];
            return ConditionViolation{10, "DD-DD-disjoint",
                                      {p1[0], p1[1], p2[0], p2[1]},
                                      {o.j1, o.j2, s.j1, s.j2},
                                      {x, s.comp[0]}};
        }
    }

    // (c) 5 distinct rows in cyclic order, 5 distinct columns
    if (m >= 5 && n >= 5) {
        std::vector<int> sub(5);
        for (sub[0] = 0; sub[0] < m; ++sub[0])
            for (sub[1] = sub[0] + 1; sub[1] < m; ++sub[1])
                for (sub[2] = sub[1] + 1; sub[2] < m; ++sub[2])
                    for (sub[3] = sub[2] + 1; sub[3] < m; ++sub[3])
                        for (sub[4] = sub[3] + 1; sub[4] < m; ++sub[4]) {
                            // cyclic orders with fixed start and orientation
                            int idx[4] = {1, 2, 3, 4};
                            std::sort(idx, idx + 4);
                            do {
                                if (idx[0] > idx[3]) continue;  // kill reflections
                                int r[5] = {sub[0], sub[idx[0]], sub[idx[1]], sub[idx[2]], sub[idx[3]]};
                                int cols[5];
                                std::vector<int> terms(5);
                                auto rec = [&](auto&& self, int pos) -> CheckResult {
                                    if (pos == 5) {
                                        long long sum = 0;
                                        for (int t : terms) sum += t;
                                        if (mod_reduce(sum, N) == 0)
                                            return ConditionViolation{10, "D-5x5",
                                                                      {r[0], r[1], r[2], r[3], r[4]},
                                                                      {cols[0], cols[1], cols[2], cols[3], cols[4]},
                                                                      terms};
                                        return std::nullopt;
                                    }
                                    for (int cc = 0; cc < n; ++cc) {
                                        bool dup = false;
                                        for (int q = 0; q < pos; ++q) dup |= (cols[q] == cc);
                                        if (dup) continue;
                                        cols[pos] = cc;
                                        auto t = signed_diff(D, r[(pos + 1) % 5], r[pos], cc);
                                        if (!t) continue;
                                        terms[pos] = *t;
                                        if (auto v = self(self, pos + 1)) return v;
                                    }
                                    return std::nullopt;
                                };
                                // column at position pos joins rows r[pos], r[pos+1]
                                if (auto v = rec(rec, 0)) return v;
                            } while (std::next_permutation(idx, idx + 4));
                        }
    }
    return std::nullopt;
}

GirthReport girth(const ExponentMatrix& B) {
    DiffD D = build_D(B);
    DiffDD DD = build_DD(B);
    if (B.is_single_edge()) {
        if (auto v = check_4cycles(D)) return {4, false, "D-conditions", v};
        if (auto v = check_6cycles(D)) return {6, false, "D-conditions", v};
        if (auto v = check_8cycles(D, DD)) return {8, false, "DD-conditions", v};
        if (auto v = check_10cycles(B, D, DD)) return {10, false, "DD-conditions", v};
        return {12, true, "DD-conditions", std::nullopt};
    }
    if (auto v = check_me_4cycles(B, D, DD)) return {4, false, "me-conditions", v};
    if (auto v = check_me_6cycles(B, D, DD)) return {6, false, "me-conditions", v};
    auto g = girth_bfs(lift(B));
    if (!g) return {0, false, "oracle-bfs (acyclic)", std::nullopt};
    return {*g, false, "oracle-bfs", std::nullopt};
}

}  // namespace girthlab
