#pragma once

#include "punar/rational.hpp"

#include <mpfr.h>

#include <string>

namespace punar {

// RAII wrapper over a single mpfr_t.
class BigFloat {
  public:
    explicit BigFloat(mpfr_prec_t prec = 128) { mpfr_init2(v_, prec); }
    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

  private:
    mpfr_t v_;
};

// Closed interval [lo, hi] with outward-rounded endpoints.  Every
// operation encloses the exact image of the operand intervals.
class RealInterval {
  public:
    explicit RealInterval(mpfr_prec_t prec = 128);
    RealInterval(const Rat& x, mpfr_prec_t prec);
    RealInterval(const Rat& lo, const Rat& hi, mpfr_prec_t prec);
    static RealInterval from_long(long x, mpfr_prec_t prec);

    mpfr_prec_t precision() const;

    RealInterval operator+(const RealInterval& o) const;
    RealInterval operator-(const RealInterval& o) const;
    RealInterval operator*(const RealInterval& o) const;
    RealInterval operator/(const RealInterval& o) const; // requires o sign-definite
    RealInterval neg() const;

    RealInterval log() const;  // requires lo > 0
    RealInterval exp() const;
    RealInterval sqrt() const; // requires lo >= 0
    RealInterval abs() const;
    // x^y for x with lo > 0 and any y, via exp(y * log(x)).
    RealInterval pow(const RealInterval& y) const;
    // Gamma(x) for x with lo >= 3/2 (monotone increasing region).
    RealInterval gamma() const;
    // Pointwise max(x, q); encloses max of every point of the interval with q.
    RealInterval max_with(const Rat& q) const;

    static RealInterval pi(mpfr_prec_t prec);

    int sign() const;          // -1 / 0 (straddles) / +1
    bool contains_zero() const;
    bool operator<(const Rat& q) const;  // certainly below: hi < q
    bool operator>(const Rat& q) const;  // certainly above: lo > q
    bool certainly_less(const RealInterval& o) const;    // hi < o.lo
    bool certainly_greater(const RealInterval& o) const; // lo > o.hi

    double lo_double() const;
    double hi_double() const;
    double width_double() const;
    double mid_double() const;
    // Upper endpoint as an exact rational (outward, safe as an upper bound).
    Rat hi_rat() const;
    Rat lo_rat() const;

    std::string to_string(int digits = 12) const;

    const BigFloat& lo() const { return lo_; }
    const BigFloat& hi() const { return hi_; }
    BigFloat& lo() { return lo_; }
    BigFloat& hi() { return hi_; }

  private:
    BigFloat lo_, hi_;
};

} // namespace punar
