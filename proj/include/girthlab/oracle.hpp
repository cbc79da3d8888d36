#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "girthlab/matrix.hpp"

namespace girthlab {

// One protograph step of a closed cycle walk: the walk sits in block row
// `row`, enters through block column `col_in` using shift index `shift_in`
// (index into the entry's shift list) and leaves through `col_out` with
// `shift_out`. col_out of step s equals col_in of step s+1 (cyclically).
struct WalkStep {
    int row = 0;
    int col_in = 0;
    int col_out = 0;
    int shift_in = 0;
    int shift_out = 0;
};

struct CycleWitness {
    int length = 0;                // 2k
    std::vector<WalkStep> steps;   // k steps
};

// Exhaustive alternating-sum enumeration over closed index sequences.
// Returns the first witness whose sum vanishes mod N, lexicographically
// smallest in DFS order, or nullopt when no cycle of that length exists.
// Supported lengths: 4, 6, 8, 10, 12.
std::optional<CycleWitness> has_cycle_fossorier(const ExponentMatrix& B, int length,
                                                long long node_budget = -1,
                                                bool* budget_hit = nullptr);

// Alternating shift sum of a witness, reduced mod N. Zero for valid witnesses.
int witness_sum(const ExponentMatrix& B, const CycleWitness& w);

// Replays the witness as a walk in lift(B); true when it closes after
// exactly `length` edges.
bool witness_replays(const ExponentMatrix& B, const CycleWitness& w);

// Exact girth by per-vertex BFS with parent-edge exclusion. nullopt = acyclic.
std::optional<int> girth_bfs(const LiftedGraph& G);

// Smallest cycle length detected by the Fossorier enumeration, trying
// lengths 4,6,...,max_length in order. Values > max_length mean "none found
// up to max_length" (reported as max_length + 2).
int oracle_girth(const ExponentMatrix& B, int max_length = 12, long long node_budget = -1);

// Equation counting for the published complexity tables.
struct ShapeCount {
    int rows = 0;
    int cols = 0;
    long long count = 0;
};

struct EquationCounts {
    int girth_target = 0;  // 8 or 10
    int m = 0, n = 0;
    std::vector<ShapeCount> shapes;
    long long total = 0;
};

EquationCounts count_fossorier_equations(int girth_target, int m, int n);

// Closed-form totals for the 8-cycle table, defined for m in {3,4,5,6}.
long long closed_form_equations_8(int m, int n);

// Computation counts for deciding 8-cycle freeness of a 4-cycle-free matrix.
long long computations_8_fossorier(int m, int n);
long long computations_8_dd(int m, int n, bool odd_lifting);

}  // namespace girthlab
