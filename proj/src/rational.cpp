#include "punar/rational.hpp"

#include "punar/errors.hpp"

#include <algorithm>
#include <sstream>

namespace punar {

RatInterval RatInterval::operator*(const RatInterval& o) const {
    Rat a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
    return {std::min(std::min(a, b), std::min(c, d)), std::max(std::max(a, b), std::max(c, d))};
}

RatInterval RatInterval::operator/(const RatInterval& o) const {
    if (o.contains_zero()) throw SingularMatrix("interval division by interval containing zero");
    Rat a = lo / o.lo, b = lo / o.hi, c = hi / o.lo, d = hi / o.hi;
    return {std::min(std::min(a, b), std::min(c, d)), std::max(std::max(a, b), std::max(c, d))};
}

RatInterval RatInterval::operator*(const Rat& c) const {
    if (c >= 0) return {lo * c, hi * c};
    return {hi * c, lo * c};
}

Rat parse_rational(const std::string& s) {
    if (s.empty()) throw InputError("empty rational literal");
    std::string t = s;
    // mpq_class accepts "p/q"; validate charset first for a clean error.
    for (size_t i = 0; i < t.size(); ++i) {
        char ch = t[i];
        bool ok = (ch >= '0' && ch <= '9') || ch == '/' || (ch == '-' && i == 0) ||
                  (ch == '+' && i == 0);
        if (!ok) throw InputError("malformed rational literal: \"" + s + "\"");
    }
    if (t[0] == '+') t.erase(0, 1); // mpq_set_str takes only a minus sign
    if (t.empty()) throw InputError("empty rational literal");
    try {
        Rat q(t);
        // den check must precede canonicalize: gcd(0, 0) = 0 would divide by zero
        if (q.get_den() == 0) throw InputError("zero denominator in \"" + s + "\"");
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw InputError("malformed rational literal: \"" + s + "\"");
    }
}

std::string format_rational(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Int floor_rat(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

Int ceil_rat(const Rat& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

namespace {

// t*den <= num + sqrt(m)  <=>  t*den - num <= 0  or  (t*den - num)^2 <= m
bool below_sqrt(const Int& t, const Int& num, const Int& m, const Int& den) {
    Int lhs = t * den - num;
    if (lhs <= 0) return true;
    return lhs * lhs <= m;
}

} // namespace

Int floor_add_sqrt(const Int& num, const Int& m, const Int& den) {
    Int s;
    mpz_sqrt(s.get_mpz_t(), m.get_mpz_t());
    Int t;
    Int top = num + s;
    mpz_fdiv_q(t.get_mpz_t(), top.get_mpz_t(), den.get_mpz_t());
    // isqrt truncation can put us off by one in either direction.
    while (below_sqrt(t + 1, num, m, den)) ++t;
    while (!below_sqrt(t, num, m, den)) --t;
    return t;
}

void quadratic_int_range(const Rat& c, const Rat& r, Int& lo, Int& hi) {
    if (r < 0) {
        lo = 1;
        hi = 0;
        return;
    }
    // (t + c)^2 <= r, bounds t in [-c - sqrt(r), -c + sqrt(r)].
    // Scale so the radicand is an integer: with c = pc/qc, r = pr/qr,
    // -c + sqrt(r) = (-pc*qr + qc*sqrt(pr*qr)) / (qc*qr).
    const Int& pc = c.get_num();
    const Int& qc = c.get_den();
    const Int& pr = r.get_num();
    const Int& qr = r.get_den();
    Int m = pr * qr * qc * qc;
    Int den = qc * qr;
    Int p_hi = -pc * qr;
    hi = floor_add_sqrt(p_hi, m, den);
    // lo = ceil(-c - sqrt(r)) = -floor(c + sqrt(r))
    Int p_lo = pc * qr;
    lo = -floor_add_sqrt(p_lo, m, den);
}

RatVec primitive_scale(const RatVec& v) {
    Int lcm_den = 1;
    bool all_zero = true;
    for (const Rat& x : v) {
        if (x != 0) all_zero = false;
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den().get_mpz_t());
    }
    if (all_zero) return v;
    Int content = 0;
    IntVec scaled(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        Rat s = v[i] * Rat(lcm_den);
        scaled[i] = s.get_num(); // denominator is 1 by construction
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled[i].get_mpz_t());
    }
    RatVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = Rat(scaled[i] / content);
    return out;
}

bool is_integer_vec(const RatVec& v) {
    for (const Rat& x : v)
        if (x.get_den() != 1) return false;
    return true;
}

std::string format_rat_vec(const RatVec& v, char sep) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << sep;
        os << format_rational(v[i]);
    }
    return os.str();
}

} // namespace punar
