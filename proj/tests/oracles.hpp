#pragma once

// Shared helpers for the test suites: reference implementations kept
// deliberately independent of the library code paths they check.

#include "punar/form_minima.hpp"
#include "punar/number_field.hpp"
#include "punar/qmatrix.hpp"
#include "punar/rational.hpp"
#include "punar/real_interval.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <vector>

namespace punar_test {

using namespace punar;

// x^3 + x^2 - 2x - 1, the totally real cubic of discriminant 49, with its
// fundamental units theta and theta^2 - 2.
inline FieldPtr cubic_field() {
    ZPoly p{Int(-1), Int(-2), Int(1), Int(1)};
    std::vector<RatVec> units{{Rat(0), Rat(1), Rat(0)}, {Rat(-2), Rat(0), Rat(1)}};
    return make_field(p, std::nullopt, units);
}

inline Rat form_value(const QMatrix& g, const IntVec& c) {
    size_t n = g.rows();
    Rat v = 0;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) v += g(i, j) * Rat(c[i]) * Rat(c[j]);
    return v;
}

// Exhaustive minimum of c^T G c over nonzero integer vectors with
// |c_i| <= box, one vector per +- pair (first nonzero coordinate positive),
// sorted.  Ground truth whenever the true minimal vectors fit in the box.
inline MinimaRecord brute_force_minima(const QMatrix& g, long box) {
    size_t n = g.rows();
    IntVec c(n, Int(-box));
    MinimaRecord out;
    bool have = false;
    for (;;) {
        bool zero = true;
        for (const Int& x : c)
            if (x != 0) zero = false;
        if (!zero) {
            size_t first = 0;
            while (c[first] == 0) ++first;
            if (c[first] > 0) {
                Rat v = form_value(g, c);
                if (!have || v < out.minimum) {
                    out.minimum = v;
                    out.vectors.clear();
                    have = true;
                }
                if (v == out.minimum) out.vectors.push_back(c);
            }
        }
        size_t k = 0;
        while (k < n && c[k] == box) c[k++] = -box;
        if (k == n) break;
        c[k] += 1;
    }
    std::sort(out.vectors.begin(), out.vectors.end());
    return out;
}

inline bool interval_near(const RealInterval& x, double v, double tol) {
    return std::abs(x.mid_double() - v) <= tol && x.width_double() <= tol;
}

inline bool contains_rat(const RealInterval& x, const Rat& q) {
    return x.lo_rat() <= q && q <= x.hi_rat();
}

// Uniform-ish in [lo, hi] via modulo; avoids uniform_int_distribution on
// purpose: its output is implementation defined.
inline long rand_range(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

inline Rat random_rat(std::mt19937_64& rng, long num_mag, long den_max) {
    Rat q(Int(rand_range(rng, -num_mag, num_mag)), Int(rand_range(rng, 1, den_max)));
    q.canonicalize(); // the two-argument constructor does not reduce
    return q;
}

} // namespace punar_test
