#include "girthlab/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <set>
#include <thread>

#include "girthlab/bounds.hpp"
#include "girthlab/diffmat.hpp"
#include "girthlab/girth_me.hpp"
#include "girthlab/girth_se.hpp"
#include "girthlab/oracle.hpp"

namespace girthlab {

namespace {

std::vector<int> units_mod(int N) {
    std::vector<int> out;
    for (int u = 1; u < N; ++u)
        if (std::gcd(u, N) == 1) out.push_back(u);
    return out;
}

// ---------------------------------------------------------------------------
// Single-edge depth-first search with incremental difference-matrix pruning.
// Cells are filled column-major; the first row/column are pinned to zero when
// normalization is on.
// ---------------------------------------------------------------------------

struct SeEngine {
    int m, n, N, target;
    bool normalize;
    bool disable_pruning;
    long long* budget;          // shared remaining node budget, -1 entries mean unlimited
    double deadline;            // absolute seconds since epoch of steady clock, 0 = none
    SearchStats stats;
    bool budget_exhausted = false;

    std::vector<int> value;                 // m*n grid, -1 unassigned
    std::vector<std::pair<int, int>> cells; // fill order
    std::vector<std::vector<char>> row_used;   // per D-row residue table (4-cycle prune)
    std::vector<char> dd_used;                 // global DD component table (m == 3 fast path)
    struct DDSlotRec { int p, j1, j2, comp; };
    std::vector<std::vector<DDSlotRec>> dd_slots;  // per residue, for m >= 4
    std::vector<ExponentMatrix> survivors;

    SeEngine(const SearchConfig& cfg, int lifting, long long* budget_, double deadline_)
        : m(cfg.m), n(cfg.n), N(lifting), target(cfg.target_girth), normalize(cfg.normalize),
          disable_pruning(cfg.disable_pruning), budget(budget_), deadline(deadline_) {
        value.assign(static_cast<size_t>(m) * n, -1);
        int i0 = normalize ? 1 : 0, j0 = normalize ? 1 : 0;
        if (normalize) {
            for (int j = 0; j < n; ++j) value[j] = 0;
            for (int i = 0; i < m; ++i) value[static_cast<size_t>(i) * n] = 0;
        }
        for (int j = j0; j < n; ++j)
            for (int i = i0; i < m; ++i) cells.push_back({i, j});
        row_used.assign(pair_count(m), std::vector<char>(N, 0));
        if (normalize)
            for (auto& row : row_used) row[0] = 1;  // column 0 contributes a zero everywhere
        dd_used.assign(N, 0);
        dd_slots.assign(N, {});
    }

    int& at(int i, int j) { return value[static_cast<size_t>(i) * n + j]; }

    bool out_of_budget() {
        if (budget && *budget >= 0 && --*budget < 0) {
            budget_exhausted = true;
            return true;
        }
        return false;
    }

    ExponentMatrix to_matrix() const {
        std::vector<ExponentEntry> es;
        es.reserve(value.size());
        for (int v : value) es.push_back(ExponentEntry::single(v));
        return ExponentMatrix(m, n, N, std::move(es));
    }

    // 6-cycle equations whose column set peaks at column j (all rows known).
    bool six_ok_for_column(int j) {
        for (int a = 0; a < m; ++a)
            for (int b = a + 1; b < m; ++b)
                for (int c = b + 1; c < m; ++c) {
                    int dab[3] = {row_pair_index(a, b, m), row_pair_index(a, c, m), row_pair_index(b, c, m)};
                    for (int j1 = 0; j1 <= j; ++j1)
                        for (int j2 = 0; j2 <= j; ++j2) {
                            if (j2 == j1) continue;
                            for (int j3 = 0; j3 <= j; ++j3) {
                                if (j3 == j1 || j3 == j2) continue;
                                if (j1 != j && j2 != j && j3 != j) continue;
                                long long v = -(at(a, j1) - at(b, j1)) + (at(a, j2) - at(c, j2)) -
                                              (at(b, j3) - at(c, j3));
                                if (mod_reduce(v, N) == 0) return false;
                            }
                        }
                }
        return true;
    }

    // 8-cycle 4-row sums whose column set peaks at column j (m >= 4 only).
    bool four_row_ok_for_column(int j) {
        static constexpr int kOrders[3][4] = {{0, 1, 2, 3}, {0, 1, 3, 2}, {0, 2, 1, 3}};
        if (m < 4 || j < 3) return true;
        int rows4[4];
        for (rows4[0] = 0; rows4[0] < m; ++rows4[0])
            for (rows4[1] = rows4[0] + 1; rows4[1] < m; ++rows4[1])
                for (rows4[2] = rows4[1] + 1; rows4[2] < m; ++rows4[2])
                    for (rows4[3] = rows4[2] + 1; rows4[3] < m; ++rows4[3])
                        for (const auto& ord : kOrders) {
                            int r[4];
                            for (int q = 0; q < 4; ++q) r[q] = rows4[ord[q]];
                            int cols[4];
                            for (cols[0] = 0; cols[0] <= j; ++cols[0])
                                for (cols[1] = 0; cols[1] <= j; ++cols[1]) {
                                    if (cols[1] == cols[0]) continue;
                                    for (cols[2] = 0; cols[2] <= j; ++cols[2]) {
                                        if (cols[2] == cols[0] || cols[2] == cols[1]) continue;
                                        for (cols[3] = 0; cols[3] <= j; ++cols[3]) {
                                            if (cols[3] == cols[0] || cols[3] == cols[1] ||
                                                cols[3] == cols[2])
                                                continue;
                                            if (cols[0] != j && cols[1] != j && cols[2] != j && cols[3] != j)
                                                continue;
                                            long long sum = 0;
                                            for (int s = 0; s < 4; ++s) {
                                                int x = r[(s + 1) % 4], y = r[s], cc = cols[(s + 1) % 4];
                                                sum += at(x, cc) - at(y, cc);
                                            }
                                            if (mod_reduce(sum, N) == 0) return false;
                                        }
                                    }
                                }
                        }
        return true;
    }

    // DD components between column j and the earlier columns; returns false on
    // an 8-cycle collision, otherwise records the inserted components in undo.
    bool insert_dd_for_column(int j, std::vector<std::pair<int, DDSlotRec>>& undo) {
        for (int p = 0; p < pair_count(m); ++p) {
            auto [a, b] = row_pair_from_index(p, m);
            int dj = mod_reduce(at(a, j) - at(b, j), N);
            for (int j1 = 0; j1 < j; ++j1) {
                int d1 = mod_reduce(at(a, j1) - at(b, j1), N);
                for (int comp : {mod_reduce(d1 - dj, N), mod_reduce(dj - d1, N)}) {
                    if (mod_reduce(2LL * comp, N) == 0) return false;
                    if (m == 3) {
                        if (dd_used[comp]) return false;
                        dd_used[comp] = 1;
                        undo.push_back({comp, {p, j1, j, comp}});
                    } else {
                        for (const DDSlotRec& o : dd_slots[comp]) {
                            bool share = pairs_share(o.p, p);
                            bool cols_meet = o.j1 == j1 || o.j1 == j || o.j2 == j1 || o.j2 == j;
                            if (o.p == p || share || cols_meet) return false;
                        }
                        dd_slots[comp].push_back({p, j1, j, comp});
                        undo.push_back({comp, {p, j1, j, comp}});
                    }
                }
            }
        }
        return true;
    }

    bool pairs_share(int p1, int p2) const {
        auto a = row_pair_from_index(p1, m);
        auto b = row_pair_from_index(p2, m);
        return a[0] == b[0] || a[0] == b[1] || a[1] == b[0] || a[1] == b[1];
    }

    void remove_dd(const std::vector<std::pair<int, DDSlotRec>>& undo) {
        for (auto it = undo.rbegin(); it != undo.rend(); ++it) {
            if (m == 3)
                dd_used[it->first] = 0;
            else
                dd_slots[it->first].pop_back();
        }
    }

    void leaf() {
        ++stats.leaves;
        ExponentMatrix B = to_matrix();
        if (disable_pruning) {
            auto g = girth_bfs(lift(B));
            if (g && *g >= target) survivors.push_back(std::move(B));
            return;
        }
        GirthReport rep = girth(B);
        if (rep.girth >= target) survivors.push_back(std::move(B));
    }

    void dfs(size_t ci) {
        if (budget_exhausted) return;
        if (deadline > 0 &&
            std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch()).count() > deadline) {
            budget_exhausted = true;
            return;
        }
        if (ci == cells.size()) {
            leaf();
            return;
        }
        auto [i, j] = cells[ci];
        for (int v = 0; v < N; ++v) {
            if (out_of_budget()) return;
            ++stats.nodes;
            at(i, j) = v;
            if (disable_pruning) {
                dfs(ci + 1);
                at(i, j) = -1;
                continue;
            }
            // incremental 4-cycle check against every assigned row above
            int set_count = 0;
            bool ok = true;
            for (int a = 0; a < i; ++a) {
                if (at(a, j) < 0) continue;
                int p = row_pair_index(a, i, m);
                int d = mod_reduce(at(a, j) - v, N);
                if (row_used[p][d]) {
                    ok = false;
                    break;
                }
                row_used[p][d] = 1;
                ++set_count;
            }
            if (!ok) {
                ++stats.prune4;
                for (int a = 0, undone = 0; a < i && undone < set_count; ++a) {
                    if (at(a, j) < 0) continue;
                    row_used[row_pair_index(a, i, m)][mod_reduce(at(a, j) - v, N)] = 0;
                    ++undone;
                }
                at(i, j) = -1;
                continue;
            }
            bool column_complete = (i == m - 1);
            std::vector<std::pair<int, DDSlotRec>> dd_undo;
            bool pass = true;
            if (column_complete && target >= 8 && !six_ok_for_column(j)) {
                pass = false;
                ++stats.prune6;
            }
            if (pass && column_complete && target >= 10) {
                if (!insert_dd_for_column(j, dd_undo) || !four_row_ok_for_column(j)) {
                    pass = false;
                    ++stats.prune8;
                }
            }
            if (pass) dfs(ci + 1);
            remove_dd(dd_undo);
            for (int a = 0; a < i; ++a) {
                if (at(a, j) < 0) continue;
                row_used[row_pair_index(a, i, m)][mod_reduce(at(a, j) - v, N)] = 0;
            }
            at(i, j) = -1;
            if (budget_exhausted) return;
        }
    }

    // Run the subtree where the first free cell takes the given value.
    void run_first(int v) {
        auto [i, j] = cells[0];
        int saved = at(i, j);
        (void)saved;
        dfs_first_value(v);
    }

    void dfs_first_value(int v) {
        auto [i, j] = cells[0];
        ++stats.nodes;
        at(i, j) = v;
        bool ok = true;
        int set_count = 0;
        if (!disable_pruning) {
            for (int a = 0; a < i; ++a) {
                if (at(a, j) < 0) continue;
                int p = row_pair_index(a, i, m);
                int d = mod_reduce(at(a, j) - v, N);
                if (row_used[p][d]) {
                    ok = false;
                    break;
                }
                row_used[p][d] = 1;
                ++set_count;
            }
        }
        if (ok) {
            bool column_complete = (i == m - 1);
            std::vector<std::pair<int, DDSlotRec>> dd_undo;
            bool pass = true;
            if (!disable_pruning && column_complete && target >= 8 && !six_ok_for_column(j)) pass = false;
            if (!disable_pruning && pass && column_complete && target >= 10 &&
                (!insert_dd_for_column(j, dd_undo) || !four_row_ok_for_column(j)))
                pass = false;
            if (pass || disable_pruning) dfs(1);
            remove_dd(dd_undo);
        } else {
            ++stats.prune4;
        }
        if (!disable_pruning) {
            for (int a = 0, undone = 0; a < i && undone < set_count; ++a) {
                if (at(a, j) < 0) continue;
                row_used[row_pair_index(a, i, m)][mod_reduce(at(a, j) - v, N)] = 0;
                ++undone;
            }
        }
        at(i, j) = -1;
    }
};

// ---------------------------------------------------------------------------
// Multiple-edge depth-first search. Cells carry weight-many shifts; pruning
// uses the multiple-edge 4-cycle conditions (and the cheap 6-cycle ones when
// the target is 8 or more).
// ---------------------------------------------------------------------------

struct MeEngine {
    const SearchConfig& cfg;
    int m, n, N, target;
    long long* budget;
    double deadline;
    SearchStats stats;
    bool budget_exhausted = false;

    std::vector<std::vector<int>> shifts;  // per cell, current shift set (empty = pending)
    std::vector<std::pair<int, int>> cells;
    std::vector<std::vector<char>> row_vals, col_vals;  // D value tables
    std::vector<std::vector<char>> pair_vals;           // DD row tables per row pair
    std::vector<ExponentMatrix> survivors;

    MeEngine(const SearchConfig& c, int lifting, long long* budget_, double deadline_)
        : cfg(c), m(c.m), n(c.n), N(lifting), target(c.target_girth), budget(budget_), deadline(deadline_) {
        shifts.assign(static_cast<size_t>(m) * n, {});
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < m; ++i)
                if (weight(i, j) > 0) cells.push_back({i, j});
        row_vals.assign(m, std::vector<char>(N, 0));
        col_vals.assign(n, std::vector<char>(N, 0));
        pair_vals.assign(pair_count(m), std::vector<char>(N, 0));
    }

    int weight(int i, int j) const { return cfg.weights[i][j]; }
    std::vector<int>& cell(int i, int j) { return shifts[static_cast<size_t>(i) * n + j]; }

    ExponentMatrix to_matrix() const {
        std::vector<ExponentEntry> es;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) {
                const auto& s = shifts[static_cast<size_t>(i) * n + j];
                es.push_back(ExponentEntry{s});
            }
        return ExponentMatrix(m, n, N, std::move(es));
    }

    bool out_of_budget() {
        if (budget && *budget >= 0 && --*budget < 0) {
            budget_exhausted = true;
            return true;
        }
        return false;
    }

    struct Undo {
        std::vector<std::pair<std::vector<char>*, int>> bits;
        void set(std::vector<char>& table, int v) {
            table[v] = 1;
            bits.push_back({&table, v});
        }
        void rollback() {
            for (auto it = bits.rbegin(); it != bits.rend(); ++it) (*it->first)[it->second] = 0;
        }
    };

    // Apply the multiple-edge 4-cycle (and cheap 6-cycle) conditions for a
    // freshly assigned cell.
    bool admit(int i, int j, const std::vector<int>& S, Undo& undo) {
        const bool me6 = target >= 8 && !cfg.disable_pruning;
        // within-entry differences
        for (size_t a = 0; a < S.size(); ++a)
            for (size_t b = 0; b < S.size(); ++b) {
                if (a == b) continue;
                int d = mod_reduce(S[a] - S[b], N);
                if (mod_reduce(2LL * d, N) == 0) return false;
                if (me6 && mod_reduce(3LL * d, N) == 0) return false;
                if (row_vals[i][d] || col_vals[j][d]) return false;
                if (me6 && (row_vals[i][mod_reduce(2LL * d, N)] || col_vals[j][mod_reduce(2LL * d, N)]))
                    return false;
            }
        for (size_t a = 0; a < S.size(); ++a)
            for (size_t b = 0; b < S.size(); ++b) {
                if (a == b) continue;
                int d = mod_reduce(S[a] - S[b], N);
                if (!row_vals[i][d]) undo.set(row_vals[i], d);
                if (!col_vals[j][d]) undo.set(col_vals[j], d);
            }
        // halves already in the tables versus the doubled new values
        if (me6)
            for (size_t a = 0; a < S.size(); ++a)
                for (size_t b = 0; b < S.size(); ++b) {
                    if (a == b) continue;
                    int d = mod_reduce(S[a] - S[b], N);
                    if (N % 2 == 1) {
                        int inv2 = (N + 1) / 2;  // 2 * inv2 = 1 mod N
                        int half = mod_reduce(static_cast<long long>(d) * inv2, N);
                        if (row_vals[i][half] && half != d) return false;
                    } else if (d % 2 == 0) {
                        for (int half : {d / 2, d / 2 + N / 2})
                            if (row_vals[i][half] && half != d) return false;
                    }
                }
        // DD components against cells above in this column
        for (int a = 0; a < i; ++a) {
            const auto& T = cell(a, j);
            if (T.empty()) continue;
            int p = row_pair_index(a, i, m);
            for (int x : T)
                for (int y : S) {
                    int d = mod_reduce(x - y, N);
                    if (pair_vals[p][d]) return false;
                    undo.set(pair_vals[p], d);
                }
        }
        return true;
    }

    void leaf() {
        ++stats.leaves;
        ExponentMatrix B = to_matrix();
        if (cfg.disable_pruning) {
            auto g = girth_bfs(lift(B));
            if (g && *g >= target) survivors.push_back(std::move(B));
            return;
        }
        DiffD D = build_D(B);
        DiffDD DD = build_DD(B);
        if (check_me_4cycles(B, D, DD)) return;
        if (target >= 8 && check_me_6cycles(B, D, DD)) return;
        if (target >= 10) {
            auto g = girth_bfs(lift(B));
            if (!g || *g < target) return;
        }
        survivors.push_back(std::move(B));
    }

    void enumerate_subsets(int i, int j, int w, int start, std::vector<int>& cur, size_t ci) {
        if (budget_exhausted) return;
        if (static_cast<int>(cur.size()) == w) {
            if (out_of_budget()) return;
            ++stats.nodes;
            Undo undo;
            bool ok = cfg.disable_pruning || admit(i, j, cur, undo);
            if (ok) {
                cell(i, j) = cur;
                dfs(ci + 1);
                cell(i, j).clear();
            } else {
                ++stats.prune4;
            }
            undo.rollback();
            return;
        }
        for (int s = start; s < N; ++s) {
            cur.push_back(s);
            enumerate_subsets(i, j, w, s + 1, cur, ci);
            cur.pop_back();
            if (budget_exhausted) return;
        }
    }

    void dfs(size_t ci) {
        if (budget_exhausted) return;
        if (deadline > 0 &&
            std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch()).count() > deadline) {
            budget_exhausted = true;
            return;
        }
        if (ci == cells.size()) {
            leaf();
            return;
        }
        auto [i, j] = cells[ci];
        std::vector<int> cur;
        enumerate_subsets(i, j, weight(i, j), 0, cur, ci);
    }
};

ExponentMatrix canonical_single_edge(const ExponentMatrix& B);
ExponentMatrix canonical_restricted(const ExponentMatrix& B);

}  // namespace

SearchResult search_min_N(const SearchConfig& cfg) {
    if (cfg.m < 2 || cfg.n < 1) throw std::invalid_argument("search_min_N: need m >= 2, n >= 1");
    const bool multiple_edge = !cfg.weights.empty() &&
                               [&] {
                                   for (const auto& row : cfg.weights)
                                       for (int w : row)
                                           if (w > 1) return true;
                                   return false;
                               }();
    if (!cfg.weights.empty() &&
        (static_cast<int>(cfg.weights.size()) != cfg.m ||
         static_cast<int>(cfg.weights[0].size()) != cfg.n))
        throw std::invalid_argument("search_min_N: weight grid must be m x n");

    SearchResult result;
    auto t0 = std::chrono::steady_clock::now();

    // Structural impossibility: inevitable cycles cap the reachable girth.
    if (multiple_edge) {
        for (int i = 0; i < cfg.m; ++i)
            for (int j = 0; j < cfg.n; ++j)
                if (cfg.weights[i][j] >= 3 && cfg.target_girth >= 8) result.structurally_impossible = 6;
        for (int i = 0; i < cfg.m; ++i) {
            int heavy = 0;
            for (int j = 0; j < cfg.n; ++j) heavy += cfg.weights[i][j] >= 2;
            if (heavy >= 2 && cfg.target_girth >= 10)
                result.structurally_impossible = std::max(result.structurally_impossible, 8);
        }
        if (result.structurally_impossible) return result;
    }

    int n_lo = cfg.n_lo;
    if (n_lo <= 0) {
        if (multiple_edge) {
            std::vector<ExponentEntry> probe;
            for (int i = 0; i < cfg.m; ++i)
                for (int j = 0; j < cfg.n; ++j) {
                    ExponentEntry e;
                    for (int w = 0; w < cfg.weights[i][j]; ++w) e.shifts.push_back(w);
                    probe.push_back(e);
                }
            int big = 0;
            for (const auto& e : probe) big = std::max(big, e.weight());
            ExponentMatrix shape(cfg.m, cfg.n, std::max(2, big + 1), std::move(probe));
            n_lo = static_cast<int>(bound_me_girth6(shape).bound);
        } else {
            switch (cfg.target_girth) {
                case 6: n_lo = cfg.n; break;
                case 8: n_lo = (cfg.m - 1) * (cfg.n - 1) + 1; break;
                case 10: n_lo = static_cast<int>(bound_girth10(cfg.m, cfg.n).bound); break;
                default: n_lo = static_cast<int>(bound_girth10(cfg.m, cfg.n).bound); break;
            }
        }
        n_lo = std::max(n_lo, 2);
    }
    int n_hi = cfg.n_hi > 0 ? cfg.n_hi : n_lo + 64;

    long long budget = cfg.node_budget;
    double deadline = 0;
    if (cfg.time_budget_seconds > 0)
        deadline = std::chrono::duration<double>(t0.time_since_epoch()).count() + cfg.time_budget_seconds;

    int threads = std::max(1, cfg.threads);

    for (int N = n_lo; N <= n_hi; ++N) {
        std::vector<ExponentMatrix> survivors;
        SearchStats level_stats;
        bool exhausted = false;

        auto merge = [&](SearchStats& s, bool ex, std::vector<ExponentMatrix>&& found) {
            level_stats.nodes += s.nodes;
            level_stats.leaves += s.leaves;
            level_stats.prune4 += s.prune4;
            level_stats.prune6 += s.prune6;
            level_stats.prune8 += s.prune8;
            exhausted |= ex;
            for (auto& b : found) survivors.push_back(std::move(b));
        };

        if (!multiple_edge) {
            int first_values = N;
            std::vector<std::unique_ptr<SeEngine>> engines;
            std::vector<long long> budgets(threads, budget < 0 ? -1 : budget / threads);
            for (int t = 0; t < threads; ++t)
                engines.push_back(std::make_unique<SeEngine>(cfg, N, &budgets[t], deadline));
            auto work = [&](int t) {
                for (int v = t; v < first_values; v += threads) engines[t]->dfs_first_value(v);
            };
            if (threads == 1) {
                work(0);
            } else {
                std::vector<std::thread> pool;
                for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
                for (auto& th : pool) th.join();
            }
            // merge in first-value order for determinism
            for (int t = 0; t < threads; ++t)
                merge(engines[t]->stats, engines[t]->budget_exhausted, std::move(engines[t]->survivors));
            std::sort(survivors.begin(), survivors.end(), [](const ExponentMatrix& a, const ExponentMatrix& b) {
                return serialize_matrix(a) < serialize_matrix(b);
            });
            if (budget >= 0) {
                budget = 0;
                for (long long b : budgets) budget += std::max(0LL, b);
            }
        } else {
            MeEngine engine(cfg, N, &budget, deadline);
            engine.dfs(0);
            merge(engine.stats, engine.budget_exhausted, std::move(engine.survivors));
        }

        result.stats.nodes += level_stats.nodes;
        result.stats.leaves += level_stats.leaves;
        result.stats.prune4 += level_stats.prune4;
        result.stats.prune6 += level_stats.prune6;
        result.stats.prune8 += level_stats.prune8;

        if (exhausted) {
            result.budget_exhausted = true;
            break;
        }
        if (!survivors.empty()) {
            result.minimal_N = N;
            result.survivor_count = static_cast<long long>(survivors.size());
            std::set<std::string> seen;
            for (const ExponentMatrix& s : survivors) {
                ExponentMatrix canon = canonical_form(s);
                std::string key = serialize_matrix(canon);
                if (seen.insert(key).second) result.representatives.push_back(std::move(canon));
            }
            result.class_count = static_cast<int>(result.representatives.size());
            break;
        }
    }
    result.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

namespace {

ExponentMatrix canonical_single_edge(const ExponentMatrix& B) {
    const int m = B.rows(), n = B.cols(), N = B.lifting();
    if (!B.is_fully_connected()) return canonical_restricted(B);
    std::vector<int> best;
    auto consider = [&](const std::vector<int>& flat) {
        if (best.empty() || flat < best) best = flat;
    };
    std::vector<int> units = units_mod(N);
    std::vector<int> other_cols(n - 1), other_rows;
    for (int u : units)
        for (int r0 = 0; r0 < m; ++r0)
            for (int c0 = 0; c0 < n; ++c0) {
                // double-centered scaled matrix: row r0 and column c0 become zero
                std::vector<int> M(static_cast<size_t>(m) * n);
                for (int i = 0; i < m; ++i)
                    for (int j = 0; j < n; ++j)
                        M[static_cast<size_t>(i) * n + j] = mod_reduce(
                            static_cast<long long>(u) * (*B.shift(i, j) - *B.shift(r0, j) - *B.shift(i, c0) +
                                                         *B.shift(r0, c0)),
                            N);
                for (int r1 = 0; r1 < m; ++r1) {
                    if (r1 == r0) continue;
                    // order the free columns by the value in row r1
                    int idx = 0;
                    for (int j = 0; j < n; ++j)
                        if (j != c0) other_cols[idx++] = j;
                    std::sort(other_cols.begin(), other_cols.end(), [&](int a, int b) {
                        int va = M[static_cast<size_t>(r1) * n + a], vb = M[static_cast<size_t>(r1) * n + b];
                        if (va != vb) return va < vb;
                        return a < b;
                    });
                    // remaining rows sorted as vectors under that column order
                    other_rows.clear();
                    for (int i = 0; i < m; ++i)
                        if (i != r0 && i != r1) other_rows.push_back(i);
                    auto row_key = [&](int i) {
                        std::vector<int> key;
                        key.reserve(n - 1);
                        for (int j : other_cols) key.push_back(M[static_cast<size_t>(i) * n + j]);
                        return key;
                    };
                    std::sort(other_rows.begin(), other_rows.end(),
                              [&](int a, int b) { return row_key(a) < row_key(b); });
                    std::vector<int> flat;
                    flat.reserve(static_cast<size_t>(m) * n);
                    std::vector<int> row_order{r1};
                    for (int i : other_rows) row_order.push_back(i);
                    // first row and column are zero by construction; store the free grid
                    for (int i : row_order)
                        for (int j : other_cols) flat.push_back(M[static_cast<size_t>(i) * n + j]);
                    consider(flat);
                }
            }
    std::vector<ExponentEntry> entries;
    entries.reserve(static_cast<size_t>(m) * n);
    for (int j = 0; j < n; ++j) entries.push_back(ExponentEntry::single(0));
    size_t pos = 0;
    for (int i = 1; i < m; ++i) {
        entries.push_back(ExponentEntry::single(0));
        for (int j = 1; j < n; ++j) entries.push_back(ExponentEntry::single(best[pos++]));
    }
    return ExponentMatrix(m, n, N, std::move(entries));
}

ExponentMatrix canonical_restricted(const ExponentMatrix& B) {
    const int m = B.rows(), n = B.cols(), N = B.lifting();
    std::vector<int> rows(m), cols(n);
    std::iota(rows.begin(), rows.end(), 0);
    std::iota(cols.begin(), cols.end(), 0);
    std::optional<std::vector<std::vector<int>>> best;
    std::vector<int> row_perm = rows;
    do {
        std::vector<int> col_perm = cols;
        do {
            // translations: zero the first shift of row 0's entries (per
            // column) and then of column 0's entries (per row)
            std::vector<int> col_shift(n, 0), row_shift(m, 0);
            for (int j = 0; j < n; ++j) {
                const ExponentEntry& e = B.entry(row_perm[0], col_perm[j]);
                col_shift[j] = e.unused() ? 0 : e.shifts.front();
            }
            for (int i = 0; i < m; ++i) {
                const ExponentEntry& e = B.entry(row_perm[i], col_perm[0]);
                row_shift[i] = e.unused() ? 0 : mod_reduce(e.shifts.front() - col_shift[0], N);
            }
            std::vector<std::vector<int>> flat;
            flat.reserve(static_cast<size_t>(m) * n);
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < n; ++j) {
                    const ExponentEntry& e = B.entry(row_perm[i], col_perm[j]);
                    std::vector<int> val;
                    if (!e.unused()) {
                        for (int s : e.shifts) val.push_back(mod_reduce(s - col_shift[j] - row_shift[i], N));
                        std::sort(val.begin(), val.end());
                    }
                    flat.push_back(std::move(val));
                }
            if (!best || flat < *best) best = std::move(flat);
        } while (std::next_permutation(col_perm.begin(), col_perm.end()));
    } while (std::next_permutation(row_perm.begin(), row_perm.end()));

    std::vector<ExponentEntry> entries;
    for (auto& shifts : *best) entries.push_back(ExponentEntry{std::move(shifts)});
    return ExponentMatrix(m, n, N, std::move(entries));
}

}  // namespace

ExponentMatrix canonical_form(const ExponentMatrix& B) {
    if (B.is_single_edge()) return canonical_single_edge(B);
    return canonical_restricted(B);
}

}  // namespace girthlab
