#pragma once

#include <map>
#include <string>

#include "girthlab/girth_se.hpp"
#include "girthlab/matrix.hpp"

namespace girthlab {

struct BoundReport {
    std::string kind;  // "girth10", "girth12", "me-girth6"
    long long bound = 0;
    // Intermediate quantities and the literature comparison bounds.
    std::map<std::string, long long> details;
};

// N >= C(m,2)*n*(n-1) + 1 for girth 10. Also reports the classical bounds
// n (girth 6), (m-1)(n-1)+1 (girth 8) and n(n-1)(m-1)+1 (girth 10).
BoundReport bound_girth10(int m, int n);

// N >= |A| + C(m,2)*n*(n-1) + 1 for girth 12, where A is the 6-cycle value
// set of the candidate matrix. Requires a 6-cycle-free single-edge matrix.
BoundReport bound_girth12(const ExponentMatrix& B);

// max{A, B, C} bound for multiple-edge girth 6. Works for any matrix;
// single-edge matrices degenerate to the classical girth-6 bound n.
BoundReport bound_me_girth6(const ExponentMatrix& B);

}  // namespace girthlab
