#pragma once

#include "punar/qmatrix.hpp"
#include "punar/rational.hpp"

#include <utility>
#include <vector>

namespace punar {

// All integer vectors c != 0 with c^T G c <= bound, one per +-pair (the
// representative has its first nonzero coordinate positive), paired with
// the exact form value.  G must be symmetric positive definite.  Results
// are sorted by (value, coordinates).  Throws NotTotallyPositive if G is
// not positive definite and LimitExceeded past max_results.
std::vector<std::pair<IntVec, Rat>> enumerate_quadratic(const QMatrix& g, const Rat& bound,
                                                        size_t max_results = 2000000);

// Exact LLL (Gram version, delta = 3/4) for a positive definite Gram
// matrix.  gram = transform * g * transform^T with transform unimodular.
struct LLLResult {
    QMatrix gram;
    QMatrix transform;
};
LLLResult lll_gram(QMatrix g);

} // namespace punar
