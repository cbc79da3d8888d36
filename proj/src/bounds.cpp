#include "girthlab/bounds.hpp"

#include <algorithm>

#include "girthlab/diffmat.hpp"

namespace girthlab {

BoundReport bound_girth10(int m, int n) {
    if (m < 2 || n < 2) throw std::invalid_argument("bound_girth10: need m, n >= 2");
    BoundReport r;
    r.kind = "girth10";
    long long pairs = pair_count(m);
    r.bound = pairs * n * (n - 1) + 1;
    r.details["dd_components"] = pairs * n * (n - 1);
    r.details["literature_girth6"] = n;
    r.details["literature_girth8"] = static_cast<long long>(m - 1) * (n - 1) + 1;
    r.details["literature_girth10"] = static_cast<long long>(n) * (n - 1) * (m - 1) + 1;
    return r;
}

BoundReport bound_girth12(const ExponentMatrix& B) {
    if (!B.is_single_edge()) throw std::invalid_argument("bound_girth12: single-edge matrices only");
    DiffD D = build_D(B);
    SixCycleValues A = six_cycle_values(D);
    if (A.contains(0)) throw std::invalid_argument("bound_girth12: matrix has 6-cycles, bound inapplicable");
    BoundReport r;
    r.kind = "girth12";
    long long pairs = pair_count(B.rows());
    long long dd = pairs * B.cols() * (B.cols() - 1);
    r.bound = static_cast<long long>(A.values.size()) + dd + 1;
    r.details["setA_size"] = static_cast<long long>(A.values.size());
    r.details["dd_components"] = dd;
    r.details["girth10_bound"] = dd + 1;
    return r;
}

BoundReport bound_me_girth6(const ExponentMatrix& B) {
    const int m = B.rows(), n = B.cols();
    auto choose2 = [](long long w) { return w * (w - 1) / 2; };
    long long A = 0, Bv = 0, C = 0;
    for (int i = 0; i < m; ++i) {
        long long s = 0;
        for (int j = 0; j < n; ++j) s += choose2(B.entry(i, j).weight());
        A = std::max(A, 2 * s);
    }
    for (int j = 0; j < n; ++j) {
        long long s = 0;
        for (int i = 0; i < m; ++i) s += choose2(B.entry(i, j).weight());
        Bv = std::max(Bv, 2 * s);
    }
    for (int i1 = 0; i1 < m; ++i1)
        for (int i2 = i1 + 1; i2 < m; ++i2) {
            long long s = 0;
            for (int j = 0; j < n; ++j)
                s += static_cast<long long>(B.entry(i1, j).weight()) * B.entry(i2, j).weight();
            C = std::max(C, s);
        }
    BoundReport r;
    r.kind = "me-girth6";
    r.bound = std::max({A, Bv, C});
    r.details["A"] = A;
    r.details["B"] = Bv;
    r.details["C"] = C;
    return r;
}

}  // namespace girthlab
