#include "punar/simplex.hpp"

#include "punar/errors.hpp"

#include <cassert>

namespace punar {

// Phase one on the standard form A'y = b', y >= 0, with
// y = (u, v, s): x = u - v, slacks s turn a*x >= b into a*x - s = b.
// Rows are negated as needed so b' >= 0; artificials start as the basis.
std::optional<RatVec> lp_feasible_point(const QMatrix& a, const RatVec& b) {
    size_t m = a.rows(), n = a.cols();
    size_t vars = 2 * n + m;         // u, v, s
    size_t total = vars + m;         // plus artificials
    // Tableau: m rows of [coefficients | rhs], plus objective row.
    std::vector<RatVec> t(m + 1, RatVec(total + 1));
    std::vector<size_t> basis(m);
    for (size_t i = 0; i < m; ++i) {
        int sign = b[i] >= 0 ? 1 : -1;
        for (size_t j = 0; j < n; ++j) {
            t[i][j] = sign * a(i, j);
            t[i][n + j] = -sign * a(i, j);
        }
        t[i][2 * n + i] = -sign;
        t[i][vars + i] = 1;
        t[i][total] = sign * b[i];
        basis[i] = vars + i;
    }
    // Objective: minimize sum of artificials; reduced-cost row starts as
    // -(sum of constraint rows) over non-artificial columns.
    for (size_t j = 0; j <= total; ++j) {
        Rat s = 0;
        for (size_t i = 0; i < m; ++i) s += t[i][j];
        t[m][j] = -s;
    }
    for (size_t i = 0; i < m; ++i) t[m][vars + i] = 0;

    size_t guard = 0;
    while (true) {
        if (++guard > 200000) throw LimitExceeded("simplex failed to terminate");
        // Bland: entering column = lowest index with negative reduced cost.
        size_t enter = total;
        for (size_t j = 0; j < total; ++j)
            if (t[m][j] < 0) {
                enter = j;
                break;
            }
        if (enter == total) break;
        // Leaving row: min ratio, ties by lowest basis index.
        size_t leave = m;
        Rat best;
        for (size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            Rat ratio = t[i][total] / t[i][enter];
            if (leave == m || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) throw UnboundedDirection("phase-one objective unbounded");
        Rat pivot = t[leave][enter];
        for (size_t j = 0; j <= total; ++j) t[leave][j] /= pivot;
        for (size_t i = 0; i <= m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            Rat f = t[i][enter];
            for (size_t j = 0; j <= total; ++j) t[i][j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }

    if (t[m][total] != 0) return std::nullopt; // artificials cannot reach zero
    RatVec x(n);
    for (size_t i = 0; i < m; ++i) {
        if (basis[i] < n)
            x[basis[i]] += t[i][total];
        else if (basis[i] < 2 * n)
            x[basis[i] - n] -= t[i][total];
    }
    return x;
}

} // namespace punar
