#pragma once

#include "punar/qmatrix.hpp"
#include "punar/rational.hpp"

#include <optional>

namespace punar {

// Feasibility of { x in Q^n : a * x >= b } for free x, by exact phase-one
// simplex with Bland's rule.  Returns a feasible point when one exists.
std::optional<RatVec> lp_feasible_point(const QMatrix& a, const RatVec& b);

} // namespace punar
