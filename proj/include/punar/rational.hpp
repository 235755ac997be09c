#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace punar {

using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

// Closed rational interval [lo, hi].  All arithmetic on these is exact;
// widths only grow through composition, never through rounding.
struct RatInterval {
    Rat lo, hi;

    RatInterval() = default;
    RatInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {}
    explicit RatInterval(const Rat& point) : lo(point), hi(point) {}

    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }
    bool contains_zero() const { return lo <= 0 && hi >= 0; }
    int sign() const { return lo > 0 ? 1 : (hi < 0 ? -1 : 0); }

    RatInterval operator+(const RatInterval& o) const { return {lo + o.lo, hi + o.hi}; }
    RatInterval operator-(const RatInterval& o) const { return {lo - o.hi, hi - o.lo}; }
    RatInterval operator-() const { return {-hi, -lo}; }
    RatInterval operator*(const RatInterval& o) const;
    // Requires 0 not in o.
    RatInterval operator/(const RatInterval& o) const;
    RatInterval operator*(const Rat& c) const;
    RatInterval operator+(const Rat& c) const { return {lo + c, hi + c}; }
};

// "p/q" | "p" | "-p/q".  Throws InputError on malformed input.
Rat parse_rational(const std::string& s);
std::string format_rational(const Rat& q);

Int floor_rat(const Rat& q);
Int ceil_rat(const Rat& q);

// Largest integer t with t*den <= num + sqrt(m); den > 0, m >= 0.
Int floor_add_sqrt(const Int& num, const Int& m, const Int& den);

// All integers t with (t + c)^2 <= r, as [lo, hi]; empty (lo > hi) iff r < 0.
void quadratic_int_range(const Rat& c, const Rat& r, Int& lo, Int& hi);

// gcd of |numerators| over lcm-cleared coordinates: v -> primitive integer
// vector with the same direction and positive content 1.  Zero vector maps
// to itself.
RatVec primitive_scale(const RatVec& v);

bool is_integer_vec(const RatVec& v);

std::string format_rat_vec(const RatVec& v, char sep = ',');

} // namespace punar
