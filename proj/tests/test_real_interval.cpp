#include <doctest.h>

#include "punar/real_interval.hpp"

#include "oracles.hpp"

using namespace punar;
using namespace punar_test;

TEST_CASE("construction and exact endpoints") {
    RealInterval third(Rat(1, 3), 64);
    CHECK(third.lo_rat() <= Rat(1, 3));
    CHECK(Rat(1, 3) <= third.hi_rat());
    CHECK(third.hi_rat() - third.lo_rat() < Rat(1, Int(1) << 50));
    CHECK(third.hi_rat() > third.lo_rat()); // 1/3 is not dyadic

    RealInterval two = RealInterval::from_long(2, 64);
    CHECK(two.lo_rat() == 2);
    CHECK(two.hi_rat() == 2);
    CHECK(two.sign() == 1);

    RealInterval span(Rat(-1), Rat(3), 64);
    CHECK(span.contains_zero());
    CHECK(span.sign() == 0);
    CHECK(RealInterval(Rat(-2), 64).sign() == -1);
}

TEST_CASE("field operations enclose the exact rational results") {
    mpfr_prec_t p = 96;
    RealInterval a(Rat(1, 3), p), b(Rat(1, 7), p);
    CHECK(contains_rat(a + b, Rat(10, 21)));
    CHECK(contains_rat(a - b, Rat(4, 21)));
    CHECK(contains_rat(a * b, Rat(1, 21)));
    CHECK(contains_rat(a / b, Rat(7, 3)));
    CHECK(contains_rat(a.neg(), Rat(-1, 3)));
    CHECK(contains_rat(RealInterval(Rat(-5, 4), p).abs(), Rat(5, 4)));
    CHECK((a + b).width_double() < 1e-25);
}

TEST_CASE("sqrt, log, exp, pow") {
    mpfr_prec_t p = 128;
    RealInterval s = RealInterval::from_long(2, p).sqrt();
    RealInterval sq = s * s;
    CHECK(contains_rat(sq, Rat(2)));
    CHECK(sq.width_double() < 1e-30);

    RealInterval five = RealInterval::from_long(5, p);
    CHECK(contains_rat(five.log().exp(), Rat(5)));

    RealInterval lg1 = RealInterval::from_long(1, p).log();
    CHECK(lg1.lo_rat() == 0);
    CHECK(lg1.hi_rat() == 0);
    RealInterval e0 = RealInterval(Rat(0), p).exp();
    CHECK(e0.lo_rat() == 1);
    CHECK(e0.hi_rat() == 1);

    RealInterval cbrt = RealInterval::from_long(8, p).pow(RealInterval(Rat(1, 3), p));
    CHECK(contains_rat(cbrt, Rat(2)));
    CHECK(cbrt.width_double() < 1e-30);

    RealInterval sq2 = RealInterval::from_long(3, p).pow(RealInterval::from_long(2, p));
    CHECK(contains_rat(sq2, Rat(9)));
}

TEST_CASE("pi to twelve digits") {
    RealInterval pi = RealInterval::pi(128);
    CHECK(pi.lo_rat() > Rat(314159265358, 100000000000));
    CHECK(pi.hi_rat() < Rat(314159265360, 100000000000));
    CHECK(pi.to_string(12) == "3.14159265359");
}

TEST_CASE("gamma at integers and half-integers") {
    mpfr_prec_t p = 192;
    CHECK(contains_rat(RealInterval::from_long(2, p).gamma(), Rat(1)));
    CHECK(contains_rat(RealInterval::from_long(3, p).gamma(), Rat(2)));
    CHECK(contains_rat(RealInterval::from_long(4, p).gamma(), Rat(6)));
    CHECK(contains_rat(RealInterval::from_long(7, p).gamma(), Rat(720)));

    // cross-check against the closed forms Gamma(5/2) = 3 sqrt(pi) / 4 and
    // Gamma(7/2) = 15 sqrt(pi) / 8
    RealInterval rootpi = RealInterval::pi(p).sqrt();
    RealInterval g52 = RealInterval(Rat(5, 2), p).gamma();
    RealInterval c52 = rootpi * RealInterval(Rat(3, 4), p);
    CHECK(g52.lo_rat() <= c52.hi_rat());
    CHECK(c52.lo_rat() <= g52.hi_rat());
    CHECK(g52.width_double() < 1e-45);
    RealInterval g72 = RealInterval(Rat(7, 2), p).gamma();
    RealInterval c72 = rootpi * RealInterval(Rat(15, 8), p);
    CHECK(g72.lo_rat() <= c72.hi_rat());
    CHECK(c72.lo_rat() <= g72.hi_rat());
}

TEST_CASE("max_with clamps from below") {
    mpfr_prec_t p = 96;
    RealInterval a(Rat(-2), Rat(3), p);
    RealInterval c = a.max_with(Rat(0));
    CHECK(c.lo_rat() == 0);
    CHECK(c.hi_rat() >= 3);
    RealInterval b(Rat(2), Rat(3), p);
    RealInterval cb = b.max_with(Rat(0));
    CHECK(cb.lo_rat() == b.lo_rat());
    CHECK(cb.hi_rat() == b.hi_rat());
    RealInterval all(Rat(-5), Rat(-4), p);
    RealInterval ca = all.max_with(Rat(1));
    CHECK(ca.lo_rat() == 1);
    CHECK(ca.hi_rat() == 1);
}

TEST_CASE("comparisons") {
    mpfr_prec_t p = 64;
    RealInterval a(Rat(1), Rat(2), p), b(Rat(3), Rat(4), p);
    CHECK(a.certainly_less(b));
    CHECK(b.certainly_greater(a));
    CHECK(!a.certainly_less(a));
    CHECK(a < Rat(5, 2));
    CHECK(!(a < Rat(2)));
    CHECK(a > Rat(1, 2));
    CHECK(!(a > Rat(1)));
}

TEST_CASE("to_string formats the midpoint") {
    CHECK(RealInterval::from_long(1, 64).to_string(3) == "1");
    CHECK(RealInterval(Rat(1, 2), 64).to_string(3) == "0.5");
    CHECK(RealInterval(Rat(3, 2), 64).to_string(2) == "1.5");
}

TEST_CASE("enclosure under composition stays tight") {
    // ((sqrt(2) + sqrt(3))^2 - 5) / 2 = sqrt(6)
    mpfr_prec_t p = 160;
    RealInterval s2 = RealInterval::from_long(2, p).sqrt();
    RealInterval s3 = RealInterval::from_long(3, p).sqrt();
    RealInterval sum = s2 + s3;
    RealInterval lhs = (sum * sum - RealInterval::from_long(5, p)) / RealInterval::from_long(2, p);
    RealInterval s6 = RealInterval::from_long(6, p).sqrt();
    CHECK(lhs.lo_rat() <= s6.hi_rat());
    CHECK(s6.lo_rat() <= lhs.hi_rat());
    CHECK(lhs.width_double() < 1e-40);
}
