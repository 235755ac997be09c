#include "punar/real_interval.hpp"

#include "punar/errors.hpp"

#include <cassert>
#include <cstdio>
#include <vector>

namespace punar {

RealInterval::RealInterval(mpfr_prec_t prec) : lo_(prec), hi_(prec) {
    mpfr_set_zero(lo_.get(), 1);
    mpfr_set_zero(hi_.get(), 1);
}

RealInterval::RealInterval(const Rat& x, mpfr_prec_t prec) : lo_(prec), hi_(prec) {
    mpfr_set_q(lo_.get(), x.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi_.get(), x.get_mpq_t(), MPFR_RNDU);
}

RealInterval::RealInterval(const Rat& lo, const Rat& hi, mpfr_prec_t prec) : lo_(prec), hi_(prec) {
    assert(lo <= hi);
    mpfr_set_q(lo_.get(), lo.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi_.get(), hi.get_mpq_t(), MPFR_RNDU);
}

RealInterval RealInterval::from_long(long x, mpfr_prec_t prec) {
    RealInterval r(prec);
    mpfr_set_si(r.lo_.get(), x, MPFR_RNDD);
    mpfr_set_si(r.hi_.get(), x, MPFR_RNDU);
    return r;
}

mpfr_prec_t RealInterval::precision() const { return mpfr_get_prec(lo_.get()); }

RealInterval RealInterval::operator+(const RealInterval& o) const {
    RealInterval r(precision());
    mpfr_add(r.lo_.get(), lo_.get(), o.lo_.get(), MPFR_RNDD);
    mpfr_add(r.hi_.get(), hi_.get(), o.hi_.get(), MPFR_RNDU);
    return r;
}

RealInterval RealInterval::operator-(const RealInterval& o) const {
    RealInterval r(precision());
    mpfr_sub(r.lo_.get(), lo_.get(), o.hi_.get(), MPFR_RNDD);
    mpfr_sub(r.hi_.get(), hi_.get(), o.lo_.get(), MPFR_RNDU);
    return r;
}

RealInterval RealInterval::operator*(const RealInterval& o) const {
    RealInterval r(precision());
    BigFloat t(precision());
    // lo: min of the four products rounded down; hi: max rounded up.
    bool first = true;
    mpfr_srcptr xs[2] = {lo_.get(), hi_.get()};
    mpfr_srcptr ys[2] = {o.lo_.get(), o.hi_.get()};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            mpfr_mul(t.get(), xs[i], ys[j], MPFR_RNDD);
            if (first || mpfr_cmp(t.get(), r.lo_.get()) < 0) mpfr_set(r.lo_.get(), t.get(), MPFR_RNDD);
            mpfr_mul(t.get(), xs[i], ys[j], MPFR_RNDU);
            if (first || mpfr_cmp(t.get(), r.hi_.get()) > 0) mpfr_set(r.hi_.get(), t.get(), MPFR_RNDU);
            first = false;
        }
    return r;
}

RealInterval RealInterval::operator/(const RealInterval& o) const {
    if (o.contains_zero()) throw SingularMatrix("interval division by interval containing zero");
    RealInterval r(precision());
    BigFloat t(precision());
    bool first = true;
    mpfr_srcptr xs[2] = {lo_.get(), hi_.get()};
    mpfr_srcptr ys[2] = {o.lo_.get(), o.hi_.get()};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            mpfr_div(t.get(), xs[i], ys[j], MPFR_RNDD);
            if (first || mpfr_cmp(t.get(), r.lo_.get()) < 0) mpfr_set(r.lo_.get(), t.get(), MPFR_RNDD);
            mpfr_div(t.get(), xs[i], ys[j], MPFR_RNDU);
            if (first || mpfr_cmp(t.get(), r.hi_.get()) > 0) mpfr_set(r.hi_.get(), t.get(), MPFR_RNDU);
            first = false;
        }
    return r;
}

RealInterval RealInterval::neg() const {
    RealInterval r(precision());
    mpfr_neg(r.lo_.get(), hi_.get(), MPFR_RNDD);
    mpfr_neg(r.hi_.get(), lo_.get(), MPFR_RNDU);
    return r;
}

RealInterval RealInterval::log() const {
    if (mpfr_sgn(lo_.get()) <= 0) throw PrecisionExhausted("log of interval touching zero");
    RealInterval r(precision());
    mpfr_log(r.lo_.get(), lo_.get(), MPFR_RNDD);
    mpfr_log(r.hi_.get(), hi_.get(), MPFR_RNDU);
    return r;
}

RealInterval RealInterval::exp() const {
    RealInterval r(precision());
    mpfr_exp(r.lo_.get(), lo_.get(), MPFR_RNDD);
    mpfr_exp(r.hi_.get(), hi_.get(), MPFR_RNDU);
    return r;
}

RealInterval RealInterval::sqrt() const {
    if (mpfr_sgn(lo_.get()) < 0) throw PrecisionExhausted("sqrt of interval touching negatives");
    RealInterval r(precision());
    mpfr_sqrt(r.lo_.get(), lo_.get(), MPFR_RNDD);
    mpfr_sqrt(r.hi_.get(), hi_.get(), MPFR_RNDU);
    return r;
}

RealInterval RealInterval::abs() const {
    if (mpfr_sgn(lo_.get()) >= 0) return *this;
    if (mpfr_sgn(hi_.get()) <= 0) return neg();
    RealInterval r(precision());
    mpfr_set_zero(r.lo_.get(), 1);
    BigFloat na(precision());
    mpfr_neg(na.get(), lo_.get(), MPFR_RNDU);
    if (mpfr_cmp(na.get(), hi_.get()) > 0)
        mpfr_set(r.hi_.get(), na.get(), MPFR_RNDU);
    else
        mpfr_set(r.hi_.get(), hi_.get(), MPFR_RNDU);
    return r;
}

RealInterval RealInterval::pow(const RealInterval& y) const { return (y * log()).exp(); }

RealInterval RealInterval::gamma() const {
    // Gamma is increasing on [3/2, inf); all uses here have arguments >= 2.
    if (mpfr_cmp_d(lo_.get(), 1.5) < 0)
        throw PrecisionExhausted("gamma outside monotone region");
    RealInterval r(precision());
    mpfr_gamma(r.lo_.get(), lo_.get(), MPFR_RNDD);
    mpfr_gamma(r.hi_.get(), hi_.get(), MPFR_RNDU);
    return r;
}

RealInterval RealInterval::max_with(const Rat& q) const {
    RealInterval r(precision());
    BigFloat t(precision());
    mpfr_set_q(t.get(), q.get_mpq_t(), MPFR_RNDD);
    mpfr_max(r.lo_.get(), lo_.get(), t.get(), MPFR_RNDD);
    mpfr_set_q(t.get(), q.get_mpq_t(), MPFR_RNDU);
    mpfr_max(r.hi_.get(), hi_.get(), t.get(), MPFR_RNDU);
    return r;
}

RealInterval RealInterval::pi(mpfr_prec_t prec) {
    RealInterval r(prec);
    mpfr_const_pi(r.lo_.get(), MPFR_RNDD);
    mpfr_const_pi(r.hi_.get(), MPFR_RNDU);
    return r;
}

int RealInterval::sign() const {
    if (mpfr_sgn(lo_.get()) > 0) return 1;
    if (mpfr_sgn(hi_.get()) < 0) return -1;
    return 0;
}

bool RealInterval::contains_zero() const {
    return mpfr_sgn(lo_.get()) <= 0 && mpfr_sgn(hi_.get()) >= 0;
}

bool RealInterval::operator<(const Rat& q) const { return mpfr_cmp_q(hi_.get(), q.get_mpq_t()) < 0; }
bool RealInterval::operator>(const Rat& q) const { return mpfr_cmp_q(lo_.get(), q.get_mpq_t()) > 0; }

bool RealInterval::certainly_less(const RealInterval& o) const {
    return mpfr_cmp(hi_.get(), o.lo_.get()) < 0;
}

bool RealInterval::certainly_greater(const RealInterval& o) const {
    return mpfr_cmp(lo_.get(), o.hi_.get()) > 0;
}

double RealInterval::lo_double() const { return mpfr_get_d(lo_.get(), MPFR_RNDD); }
double RealInterval::hi_double() const { return mpfr_get_d(hi_.get(), MPFR_RNDU); }

double RealInterval::width_double() const {
    BigFloat w(precision());
    mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
    return mpfr_get_d(w.get(), MPFR_RNDU);
}

double RealInterval::mid_double() const {
    BigFloat m(precision());
    mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
    mpfr_div_ui(m.get(), m.get(), 2, MPFR_RNDN);
    return mpfr_get_d(m.get(), MPFR_RNDN);
}

namespace {

Rat rat_from_mpfr(mpfr_srcptr x) {
    // Exact: every finite mpfr value is m * 2^e.
    mpz_class m;
    mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), x);
    Rat r(m);
    if (e >= 0) {
        mpz_class p2;
        mpz_ui_pow_ui(p2.get_mpz_t(), 2, static_cast<unsigned long>(e));
        r *= Rat(p2);
    } else {
        mpz_class p2;
        mpz_ui_pow_ui(p2.get_mpz_t(), 2, static_cast<unsigned long>(-e));
        r /= Rat(p2);
    }
    return r;
}

} // namespace

Rat RealInterval::hi_rat() const { return rat_from_mpfr(hi_.get()); }
Rat RealInterval::lo_rat() const { return rat_from_mpfr(lo_.get()); }

std::string RealInterval::to_string(int digits) const {
    BigFloat m(precision());
    mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
    mpfr_div_ui(m.get(), m.get(), 2, MPFR_RNDN);
    char fmt[32];
    std::snprintf(fmt, sizeof fmt, "%%.%dRg", digits);
    char buf[128];
    mpfr_snprintf(buf, sizeof buf, fmt, m.get());
    return buf;
}

} // namespace punar
