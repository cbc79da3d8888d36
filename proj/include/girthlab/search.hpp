#pragma once

#include <optional>
#include <string>
#include <vector>

#include "girthlab/matrix.hpp"

namespace girthlab {

struct SearchConfig {
    int m = 0, n = 0;
    int target_girth = 6;                     // 6, 8, 10 or 12 (girth >= target)
    std::vector<std::vector<int>> weights;    // empty = single-edge fully connected
    int n_lo = 0, n_hi = 0;                   // 0 = derive from the applicable bound / n_lo + 64
    bool normalize = true;                    // pin first row and column to zero (single-edge)
    long long node_budget = -1;
    double time_budget_seconds = 0.0;         // 0 = unlimited
    int threads = 1;
    bool disable_pruning = false;             // enumerate everything, filter by the BFS oracle
};

struct SearchStats {
    long long nodes = 0;
    long long leaves = 0;
    long long prune4 = 0;
    long long prune6 = 0;
    long long prune8 = 0;
    double seconds = 0.0;
};

struct SearchResult {
    std::optional<int> minimal_N;
    std::vector<ExponentMatrix> representatives;  // canonical forms, one per class
    long long survivor_count = 0;
    int class_count = 0;
    SearchStats stats;
    bool budget_exhausted = false;
    int structurally_impossible = 0;  // target girth ruled out by an inevitable-cycle pattern
};

// Ascending-N search for the smallest lifting degree admitting the target
// girth; enumerates and canonicalizes every survivor at the first feasible N.
SearchResult search_min_N(const SearchConfig& cfg);

// Lexicographically minimal representative under row/column permutations,
// row/column translations and unit scaling (single-edge). Multiple-edge
// matrices use the subgroup without unit scaling.
ExponentMatrix canonical_form(const ExponentMatrix& B);

}  // namespace girthlab
