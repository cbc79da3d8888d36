#pragma once

#include <optional>
#include <string>
#include <vector>

#include "girthlab/diffmat.hpp"
#include "girthlab/girth_se.hpp"
#include "girthlab/matrix.hpp"
#include "girthlab/oracle.hpp"

namespace girthlab {

// Multiple-edge 4-cycle conditions. D and DD must be the multiple-edge
// variants when B is multiple-edge; single-edge inputs degenerate to the
// single-edge tests and give identical verdicts.
CheckResult check_me_4cycles(const ExponentMatrix& B, const DiffD& D, const DiffDD& DD);

// Multiple-edge 6-cycle conditions. An entry of weight >= 3 is flagged
// immediately (it forces 6-cycles at every lifting degree); the remaining
// clauses cover the two-shift interactions, and the final clause enumerates
// the 3x3 distinct-row distinct-column equations directly.
CheckResult check_me_6cycles(const ExponentMatrix& B, const DiffD& D, const DiffDD& DD);

struct InevitableCycleReport {
    bool present = false;
    int length = 0;               // 2k'
    std::string pattern;          // "entry-weight>=3", "row-[2 2]", "[2 1;1 1]", "symbolic"
    std::vector<int> rows, cols;  // where the pattern sits
    // For symbolic detections: a walk whose alternating sum cancels at the
    // symbol level, hence at every lifting degree.
    std::optional<CycleWitness> walk;
};

// Structural inevitable-cycle detection: weight >= 3 entries (6-cycles),
// [2 2] row patterns (8-cycles), [2 1; 1 1] blocks (10-cycles). When none of
// the named patterns is present, a desk-scale symbolic scan substitutes
// distinct large primes for the shift symbols and searches closed walks of
// length <= 10 whose sum cancels over the integers (matrices up to 4x4).
InevitableCycleReport detect_inevitable_cycles(const ExponentMatrix& B);

}  // namespace girthlab
