#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "girthlab/diffmat.hpp"
#include "girthlab/matrix.hpp"

namespace girthlab {

// Evidence for a failed cycle condition. `terms` are the signed residues of
// the equation that sums to zero mod N (or the colliding values for the
// equality-type conditions); `rows`/`cols` identify the matrix coordinates
// involved, condition-specific.
struct ConditionViolation {
    int cycle_length = 0;      // 4, 6, 8 or 10
    std::string condition;     // which clause fired
    std::vector<int> rows;     // matrix rows involved
    std::vector<int> cols;     // matrix columns involved
    std::vector<int> terms;    // witness residues
};

using CheckResult = std::optional<ConditionViolation>;  // nullopt = PASS

// Proposition-1 test: a row of D may not contain two equal present residues.
CheckResult check_4cycles(const DiffD& D);

// D-row index triples covering every 3-subset of matrix rows; one triple
// (idx(a,b), idx(a,c), idx(b,c)) per subset {a<b<c}. Empty for m < 3.
std::vector<std::array<int, 3>> enumerate_row_triples(int m);

// -D[t1][j1] + D[t2][j2] - D[t3][j3] != 0 mod N over every row triple and
// every ordered triple of distinct columns.
CheckResult check_6cycles(const DiffD& D);

// The set of residues produced by the 6-cycle equations, with a per-triple
// breakdown keyed by matrix-row triples {a<b<c}. 0 in the set <=> 6-cycles.
struct SixCycleValues {
    int lifting = 0;
    std::vector<int> values;  // sorted, distinct
    std::vector<std::pair<std::array<int, 3>, std::vector<int>>> by_triple;

    bool contains(int v) const;
};

SixCycleValues six_cycle_values(const DiffD& D);

// 8-cycle freeness: (a) no component d of DD with 2d = 0 mod N; (b) no two
// equal DD components in positions a common cycle can join (same D-row, or
// D-rows sharing a matrix row, or disjoint row pairs whose column pairs
// intersect); (c) no vanishing signed sum over the D-rows of a 4-row cyclic
// pattern at 4 distinct columns.
CheckResult check_8cycles(const DiffD& D, const DiffDD& DD);

// 10-cycle freeness, assuming the 4/6/8-cycle checks passed: (a) no 6-cycle
// value cancels a DD component (with a column restriction when the DD row
// pair is disjoint from the triple); (b) no two DD components in disjoint
// row pairs at disjoint column pairs cancel; (c) no vanishing signed sum
// over 5-row cyclic patterns at 5 distinct columns.
CheckResult check_10cycles(const ExponentMatrix& B, const DiffD& D, const DiffDD& DD);

struct GirthReport {
    int girth = 0;             // girth value; 12 with at_least set means "no cycle of length <= 10"
    bool at_least = false;
    std::string method;        // which machinery decided
    std::optional<ConditionViolation> witness;
};

// Condition-chain girth for single-edge matrices (4 -> 6 -> 8 -> 10).
// Multiple-edge matrices use the multiple-edge 4/6-cycle conditions and fall
// back to the BFS oracle for longer cycles.
GirthReport girth(const ExponentMatrix& B);

}  // namespace girthlab
