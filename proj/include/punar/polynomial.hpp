#pragma once

#include "punar/rational.hpp"

#include <vector>

namespace punar {

// Coefficients low to high; invariant: empty or nonzero leading coefficient.
using QPoly = RatVec;
using ZPoly = IntVec;

QPoly qpoly_from(const ZPoly& p);
void qpoly_normalize(QPoly& p);
int qpoly_degree(const QPoly& p); // -1 for zero polynomial

Rat qpoly_eval(const QPoly& p, const Rat& x);
RatInterval qpoly_eval(const QPoly& p, const RatInterval& x);
QPoly qpoly_derivative(const QPoly& p);
QPoly qpoly_mul(const QPoly& a, const QPoly& b);
// Remainder of a mod b (b nonzero).
QPoly qpoly_rem(QPoly a, const QPoly& b);
QPoly qpoly_monic_gcd(QPoly a, QPoly b);

// Sturm chain of a squarefree (or arbitrary) polynomial.
struct SturmChain {
    std::vector<QPoly> seq;

    // Number of real roots in the half-open interval (a, b].
    long count_roots(const Rat& a, const Rat& b) const;
    long count_roots_below(const Rat& b) const; // (-inf, b]
    long count_real_roots() const;

    long variations_at(const Rat& x) const;
    long variations_at_neg_inf() const;
    long variations_at_pos_inf() const;
};
SturmChain sturm_chain(const QPoly& p);

// Isolating intervals (lo, hi) for all real roots of a squarefree
// polynomial with no rational roots in the isolation endpoints' orbit;
// each interval has sign(p(lo)) != sign(p(hi)) and contains exactly one
// root.  Sorted ascending and pairwise disjoint.
std::vector<RatInterval> isolate_real_roots(const QPoly& p);

// Shrink an isolating interval by sign bisection until width <= target.
RatInterval refine_root(const QPoly& p, RatInterval iv, const Rat& target_width);

// Cauchy bound: all real roots lie in (-b, b).
Rat cauchy_root_bound(const QPoly& p);

// Exact irreducibility over Q for a monic integer polynomial: rational
// root test, squarefree test, then a complete Kronecker factor search
// (with a cheap mod-p certificate attempted first).
bool is_irreducible_monic(const ZPoly& p);

} // namespace punar
