#include <doctest.h>

#include "punar/errors.hpp"
#include "punar/rational.hpp"

#include "oracles.hpp"

#include <random>

using namespace punar;
using namespace punar_test;

TEST_CASE("parse_rational accepts canonical and non-canonical literals") {
    CHECK(parse_rational("3/4") == Rat(3, 4));
    CHECK(parse_rational("-7") == Rat(-7));
    CHECK(parse_rational("0") == Rat(0));
    CHECK(parse_rational("-3/6") == Rat(-1, 2));
    CHECK(parse_rational("10/4") == Rat(5, 2));
    CHECK(parse_rational("+5") == Rat(5));
}

TEST_CASE("parse_rational rejects malformed input") {
    CHECK_THROWS_AS(parse_rational(""), InputError);
    CHECK_THROWS_AS(parse_rational("1/0"), InputError);
    CHECK_THROWS_AS(parse_rational("0/0"), InputError);
    CHECK_THROWS_AS(parse_rational("x"), InputError);
    CHECK_THROWS_AS(parse_rational("1.5"), InputError);
    CHECK_THROWS_AS(parse_rational("2/-3"), InputError);
    CHECK_THROWS_AS(parse_rational("1 / 2"), InputError);
}

TEST_CASE("format_rational round trips") {
    CHECK(format_rational(Rat(3, 4)) == "3/4");
    CHECK(format_rational(Rat(-5)) == "-5");
    CHECK(format_rational(Rat(0)) == "0");
    CHECK(format_rational(Rat(-1, 2)) == "-1/2");
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        Rat q = random_rat(rng, 1000000, 999);
        CHECK(parse_rational(format_rational(q)) == q);
    }
}

TEST_CASE("floor and ceil") {
    CHECK(floor_rat(Rat(7, 2)) == 3);
    CHECK(ceil_rat(Rat(7, 2)) == 4);
    CHECK(floor_rat(Rat(-7, 2)) == -4);
    CHECK(ceil_rat(Rat(-7, 2)) == -3);
    CHECK(floor_rat(Rat(4)) == 4);
    CHECK(ceil_rat(Rat(4)) == 4);
    CHECK(floor_rat(Rat(0)) == 0);
}

TEST_CASE("floor_add_sqrt on pinned cases") {
    CHECK(floor_add_sqrt(Int(0), Int(2), Int(1)) == 1);
    CHECK(floor_add_sqrt(Int(0), Int(4), Int(1)) == 2);
    CHECK(floor_add_sqrt(Int(3), Int(2), Int(2)) == 2);
    CHECK(floor_add_sqrt(Int(-5), Int(2), Int(3)) == -2);
    CHECK(floor_add_sqrt(Int(0), Int(0), Int(5)) == 0);
    // exactness around a huge perfect square
    Int big = Int(10);
    mpz_pow_ui(big.get_mpz_t(), big.get_mpz_t(), 18);
    CHECK(floor_add_sqrt(big, big * big, Int(1)) == 2 * big);
    CHECK(floor_add_sqrt(Int(0), big * big - 1, Int(1)) == big - 1);
}

TEST_CASE("floor_add_sqrt is the exact floor on random input") {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 500; ++i) {
        Int num(rand_range(rng, -1000000, 1000000));
        Int m(rand_range(rng, 0, 1000000));
        m *= Int(rand_range(rng, 0, 1000000));
        Int den(rand_range(rng, 1, 1000));
        Int t = floor_add_sqrt(num, m, den);
        // t*den <= num + sqrt(m) < (t+1)*den, checked without radicals
        Int l = t * den - num;
        CHECK((l <= 0 || l * l <= m));
        Int u = (t + 1) * den - num;
        CHECK(u > 0);
        CHECK(u * u > m);
    }
}

TEST_CASE("quadratic_int_range pinned windows") {
    Int lo, hi;
    quadratic_int_range(Rat(0), Rat(2), lo, hi);
    CHECK(lo == -1);
    CHECK(hi == 1);
    quadratic_int_range(Rat(1, 2), Rat(9, 4), lo, hi); // boundary hit exactly
    CHECK(lo == -2);
    CHECK(hi == 1);
    quadratic_int_range(Rat(-3), Rat(0), lo, hi);
    CHECK(lo == 3);
    CHECK(hi == 3);
    quadratic_int_range(Rat(0), Rat(-1, 7), lo, hi);
    CHECK(lo > hi);
}

TEST_CASE("quadratic_int_range matches the defining inequality") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 300; ++i) {
        Rat c = random_rat(rng, 50, 9);
        Rat r = random_rat(rng, 400, 9); // mixed sign radii
        Int lo, hi;
        quadratic_int_range(c, r, lo, hi);
        if (r < 0) {
            CHECK(lo > hi);
            continue;
        }
        for (Int t = lo; t <= hi; ++t) CHECK((Rat(t) + c) * (Rat(t) + c) <= r);
        CHECK((Rat(lo - 1) + c) * (Rat(lo - 1) + c) > r);
        CHECK((Rat(hi + 1) + c) * (Rat(hi + 1) + c) > r);
    }
}

TEST_CASE("primitive_scale") {
    RatVec v{Rat(1, 2), Rat(3, 4)};
    CHECK(primitive_scale(v) == RatVec{Rat(2), Rat(3)});
    CHECK(primitive_scale(RatVec{Rat(2), Rat(4), Rat(6)}) == RatVec{Rat(1), Rat(2), Rat(3)});
    CHECK(primitive_scale(RatVec{Rat(-2, 3), Rat(4, 3)}) == RatVec{Rat(-1), Rat(2)});
    CHECK(primitive_scale(RatVec{Rat(0), Rat(-5)}) == RatVec{Rat(0), Rat(-1)});
    RatVec z{Rat(0), Rat(0)};
    CHECK(primitive_scale(z) == z);
}

TEST_CASE("primitive_scale output is primitive and parallel to the input") {
    std::mt19937_64 rng(14);
    for (int i = 0; i < 100; ++i) {
        RatVec v(3);
        for (Rat& x : v) x = random_rat(rng, 30, 12);
        RatVec p = primitive_scale(v);
        CHECK(is_integer_vec(p));
        Int content = 0;
        for (const Rat& x : p) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_num().get_mpz_t());
        bool all_zero = true;
        for (const Rat& x : v)
            if (x != 0) all_zero = false;
        if (all_zero) continue;
        CHECK(content == 1);
        // parallel with positive ratio: cross products vanish, some ratio > 0
        for (size_t a = 0; a < 3; ++a)
            for (size_t b = 0; b < 3; ++b) CHECK(v[a] * p[b] == v[b] * p[a]);
        for (size_t a = 0; a < 3; ++a)
            if (v[a] != 0) CHECK(v[a] * p[a] > 0);
    }
}

TEST_CASE("vector helpers") {
    CHECK(is_integer_vec(RatVec{Rat(1), Rat(-3)}));
    CHECK(!is_integer_vec(RatVec{Rat(1), Rat(1, 2)}));
    CHECK(format_rat_vec(RatVec{Rat(1, 2), Rat(3)}) == "1/2,3");
    CHECK(format_rat_vec(RatVec{Rat(-1)}, ' ') == "-1");
    CHECK(format_rat_vec(RatVec{}) == "");
}

TEST_CASE("RatInterval arithmetic is exact and sign-correct") {
    RatInterval a(Rat(-1), Rat(2)), b(Rat(-3), Rat(4));
    RatInterval p = a * b;
    CHECK(p.lo == Rat(-6));
    CHECK(p.hi == Rat(8));
    CHECK((a + b).lo == Rat(-4));
    CHECK((a - b).hi == Rat(5));
    CHECK((-a).lo == Rat(-2));
    CHECK(a.contains_zero());
    CHECK(a.sign() == 0);
    CHECK(RatInterval(Rat(1), Rat(2)).sign() == 1);
    CHECK(RatInterval(Rat(-2), Rat(-1)).sign() == -1);
    CHECK(a.width() == Rat(3));
    CHECK(a.mid() == Rat(1, 2));
    CHECK((a * Rat(-2)).lo == Rat(-4));
    CHECK((a * Rat(-2)).hi == Rat(2));
    RatInterval q = RatInterval(Rat(1), Rat(2)) / RatInterval(Rat(2), Rat(4));
    CHECK(q.lo == Rat(1, 4));
    CHECK(q.hi == Rat(1));
    CHECK_THROWS_AS(a / b, SingularMatrix);
}

TEST_CASE("RatInterval multiplication encloses all products") {
    std::mt19937_64 rng(15);
    for (int i = 0; i < 200; ++i) {
        Rat a1 = random_rat(rng, 20, 7), a2 = random_rat(rng, 20, 7);
        Rat b1 = random_rat(rng, 20, 7), b2 = random_rat(rng, 20, 7);
        RatInterval a(std::min(a1, a2), std::max(a1, a2));
        RatInterval b(std::min(b1, b2), std::max(b1, b2));
        RatInterval p = a * b;
        for (const Rat& x : {a.lo, a.hi, a.mid()})
            for (const Rat& y : {b.lo, b.hi, b.mid()}) {
                CHECK(p.lo <= x * y);
                CHECK(x * y <= p.hi);
            }
    }
}
