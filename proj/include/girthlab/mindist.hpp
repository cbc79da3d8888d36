#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "girthlab/matrix.hpp"

namespace girthlab {

struct MinDistOptions {
    int exhaustive_dim_limit = 28;  // full codeword enumeration up to this dimension
    double time_budget_seconds = 600.0;
    int info_sets = 0;              // 0 = as many disjoint sets as fit
};

struct MinDistResult {
    int distance = 0;
    bool exact = false;
    std::string method;             // "exhaustive" or "information-set"
    int dimension = 0;
    int length = 0;
    int lower_bound = 0;            // certified lower bound (== distance when exact)
    long long enumerated = 0;
};

// Minimum Hamming distance of the code with parity-check matrix lift(B).
// Exhaustive when the dimension allows it, otherwise a Brouwer-Zimmermann
// style information-set search that either certifies the value or returns
// an upper bound with exact = false.
MinDistResult min_distance(const ExponentMatrix& B, const MinDistOptions& opt = {});

// GF(2) rank of the lifted parity-check matrix.
int gf2_rank_of_lift(const ExponentMatrix& B);

}  // namespace girthlab
