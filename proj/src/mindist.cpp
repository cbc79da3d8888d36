#include "girthlab/mindist.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>

namespace girthlab {

namespace {

// Row-major bit matrix, one vector<uint64_t> block per row.
struct BitMatrix {
    int rows = 0, cols = 0, words = 0;
    std::vector<uint64_t> data;

    BitMatrix(int r, int c) : rows(r), cols(c), words((c + 63) / 64), data(static_cast<size_t>(r) * words, 0) {}

    uint64_t* row(int r) { return data.data() + static_cast<size_t>(r) * words; }
    const uint64_t* row(int r) const { return data.data() + static_cast<size_t>(r) * words; }
    bool get(int r, int c) const { return (row(r)[c >> 6] >> (c & 63)) & 1; }
    void set(int r, int c) { row(r)[c >> 6] |= 1ull << (c & 63); }
    void xor_rows(int dst, int src) {
        uint64_t* d = row(dst);
        const uint64_t* s = row(src);
        for (int w = 0; w < words; ++w) d[w] ^= s[w];
    }
    int weight(int r) const {
        const uint64_t* p = row(r);
        int w = 0;
        for (int i = 0; i < words; ++i) w += std::popcount(p[i]);
        return w;
    }
};

BitMatrix parity_check_bits(const ExponentMatrix& B) {
    const int m = B.rows(), n = B.cols(), N = B.lifting();
    BitMatrix H(m * N, n * N);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            for (int b : B.entry(i, j).shifts)
                for (int s = 0; s < N; ++s) H.set(i * N + s, j * N + (b + s) % N);
    return H;
}

// Gaussian elimination; returns pivot columns. Reduces rows in place to RREF.
std::vector<int> rref(BitMatrix& M) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < M.cols && r < M.rows; ++c) {
        int pivot = -1;
        for (int i = r; i < M.rows; ++i)
            if (M.get(i, c)) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int w = 0; w < M.words; ++w) std::swap(M.row(pivot)[w], M.row(r)[w]);
        for (int i = 0; i < M.rows; ++i)
            if (i != r && M.get(i, c)) M.xor_rows(i, r);
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

// Generator matrix (k x n) from the RREF of H: one row per free column.
BitMatrix generator_from_parity(const BitMatrix& Href, const std::vector<int>& pivots, int n) {
    std::vector<int> is_pivot(n, -1);
    for (size_t i = 0; i < pivots.size(); ++i) is_pivot[pivots[i]] = static_cast<int>(i);
    std::vector<int> free_cols;
    for (int c = 0; c < n; ++c)
        if (is_pivot[c] < 0) free_cols.push_back(c);
    BitMatrix G(static_cast<int>(free_cols.size()), n);
    for (size_t r = 0; r < free_cols.size(); ++r) {
        int f = free_cols[r];
        G.set(static_cast<int>(r), f);
        for (size_t p = 0; p < pivots.size(); ++p)
            if (Href.get(static_cast<int>(p), f)) G.set(static_cast<int>(r), pivots[p]);
    }
    return G;
}

int exhaustive_min_weight(const BitMatrix& G, long long* enumerated) {
    const int k = G.rows;
    std::vector<uint64_t> current(G.words, 0);
    int best = G.cols + 1;
    const uint64_t total = (1ull << k) - 1;
    for (uint64_t i = 1; i <= total; ++i) {
        int flip = std::countr_zero(i);  // Gray code neighbour
        const uint64_t* g = G.row(flip);
        int w = 0;
        for (int q = 0; q < G.words; ++q) {
            current[q] ^= g[q];
            w += std::popcount(current[q]);
        }
        best = std::min(best, w);
    }
    *enumerated = static_cast<long long>(total);
    return best;
}

// One systematic form of G: unit columns on an information set. Returns the
// rank deficiency of the set (0 = full rank on k fresh columns).
struct InfoSet {
    BitMatrix G;
    int deficiency;
};

InfoSet systematic_on_fresh_columns(BitMatrix G, std::vector<char>& used) {
    int r = 0;
    int deficiency = 0;
    for (int c = 0; c < G.cols && r < G.rows; ++c) {
        if (used[c]) continue;
        int pivot = -1;
        for (int i = r; i < G.rows; ++i)
            if (G.get(i, c)) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int w = 0; w < G.words; ++w) std::swap(G.row(pivot)[w], G.row(r)[w]);
        for (int i = 0; i < G.rows; ++i)
            if (i != r && G.get(i, c)) G.xor_rows(i, r);
        used[c] = 1;
        ++r;
    }
    deficiency = G.rows - r;
    return {std::move(G), deficiency};
}

int combination_min_weight(const BitMatrix& G, int w, long long* enumerated) {
    // all codewords that are XORs of exactly w generator rows
    const int k = G.rows;
    std::vector<int> idx(w);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<std::vector<uint64_t>> partial(w + 1, std::vector<uint64_t>(G.words, 0));
    int best = G.cols + 1;
    auto rec = [&](auto&& self, int depth, int start) -> void {
        if (depth == w) {
            int weight = 0;
            for (int q = 0; q < G.words; ++q) weight += std::popcount(partial[depth][q]);
            best = std::min(best, weight);
            ++*enumerated;
            return;
        }
        for (int i = start; i < k - (w - depth - 1); ++i) {
            const uint64_t* g = G.row(i);
            for (int q = 0; q < G.words; ++q) partial[depth + 1][q] = partial[depth][q] ^ g[q];
            self(self, depth + 1, i + 1);
        }
    };
    rec(rec, 0, 0);
    return best;
}

}  // namespace

int gf2_rank_of_lift(const ExponentMatrix& B) {
    BitMatrix H = parity_check_bits(B);
    return static_cast<int>(rref(H).size());
}

MinDistResult min_distance(const ExponentMatrix& B, const MinDistOptions& opt) {
    const auto start = std::chrono::steady_clock::now();
    BitMatrix H = parity_check_bits(B);
    const int n = H.cols;
    std::vector<int> pivots = rref(H);
    const int k = n - static_cast<int>(pivots.size());
    if (k <= 0) throw std::invalid_argument("min_distance: zero-dimensional code");
    BitMatrix G = generator_from_parity(H, pivots, n);

    MinDistResult res;
    res.dimension = k;
    res.length = n;

    if (k <= opt.exhaustive_dim_limit && k < 63) {
        res.distance = exhaustive_min_weight(G, &res.enumerated);
        res.exact = true;
        res.lower_bound = res.distance;
        res.method = "exhaustive";
        return res;
    }

    // Information-set search: systematic forms on disjoint column sets.
    std::vector<InfoSet> sets;
    std::vector<char> used(n, 0);
    int max_sets = opt.info_sets > 0 ? opt.info_sets : n / k;
    max_sets = std::max(max_sets, 1);
    for (int s = 0; s < max_sets; ++s) {
        InfoSet is = systematic_on_fresh_columns(G, used);
        if (is.deficiency >= k) break;  // no fresh information left
        sets.push_back(std::move(is));
        if (sets.back().deficiency > 0) break;
    }

    int ub = n + 1;
    long long enumerated = 0;
    res.method = "information-set";
    for (int w = 1; w <= k; ++w) {
        for (const InfoSet& is : sets) ub = std::min(ub, combination_min_weight(is.G, w, &enumerated));
        int lb = 0;
        for (const InfoSet& is : sets) lb += std::max(0, w + 1 - is.deficiency);
        res.distance = ub;
        res.lower_bound = std::min(lb, ub);
        res.enumerated = enumerated;
        if (lb >= ub) {
            res.exact = true;
            return res;
        }
        double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (elapsed > opt.time_budget_seconds) break;
    }
    res.exact = false;
    return res;
}

}  // namespace girthlab
