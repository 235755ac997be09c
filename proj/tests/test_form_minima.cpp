#include <doctest.h>

#include "punar/errors.hpp"
#include "punar/form_minima.hpp"
#include "punar/unit_lattice.hpp"
#include "punar/verify.hpp"

#include "oracles.hpp"

#include <random>

using namespace punar;
using namespace punar_test;

TEST_CASE("trace_gram pinned matrices") {
    FieldPtr f = make_quadratic_field(2);
    TraceGram one = trace_gram(f->one());
    CHECK(one.gram == QMatrix::from_rows({{Rat(2), Rat(0)}, {Rat(0), Rat(4)}}));

    FieldElement a = f->element({Rat(2), Rat(-1)}); // 2 - sqrt(2)
    TraceGram ga = trace_gram(a);
    CHECK(ga.gram == QMatrix::from_rows({{Rat(4), Rat(-4)}, {Rat(-4), Rat(8)}}));

    CHECK_THROWS_AS(trace_gram(f->element({Rat(0), Rat(1)})), NotTotallyPositive);
    CHECK_THROWS_AS(trace_gram(f->integer(-2)), NotTotallyPositive);
    CHECK_THROWS_AS(trace_gram(f->element({Rat(1), Rat(1)})), NotTotallyPositive);
}

TEST_CASE("gram determinant equals norm times discriminant") {
    std::mt19937_64 rng(51);
    for (FieldPtr f : {make_quadratic_field(2), make_quadratic_field(5), cubic_field()}) {
        for (int i = 0; i < 15; ++i) {
            FieldElement a = random_totally_positive(f, rng);
            TraceGram g = trace_gram(a);
            CHECK(determinant(g.gram) == norm(a) * Rat(f->discriminant()));
        }
    }
}

TEST_CASE("minimum_and_vectors pinned cases") {
    FieldPtr f = make_quadratic_field(2);
    MinimaRecord m1 = minimum_and_vectors(f->one());
    CHECK(m1.minimum == 2);
    CHECK(m1.vectors == std::vector<IntVec>{IntVec{Int(1), Int(0)}});

    MinimaRecord m2 = minimum_and_vectors(f->element({Rat(2), Rat(-1)}));
    CHECK(m2.minimum == 4);
    CHECK(m2.vectors == std::vector<IntVec>{IntVec{Int(1), Int(0)}, IntVec{Int(1), Int(1)}});

    FieldPtr c = cubic_field();
    MinimaRecord m3 = minimum_and_vectors(c->one());
    CHECK(m3.minimum == 3);
    CHECK(m3.vectors == std::vector<IntVec>{IntVec{Int(1), Int(0), Int(0)}});
}

TEST_CASE("minimum matches exhaustive search on random forms") {
    std::mt19937_64 rng(52);
    for (FieldPtr f : {make_quadratic_field(2), make_quadratic_field(5), cubic_field()}) {
        for (int i = 0; i < 25; ++i) {
            FieldElement a = random_totally_positive(f, rng);
            TraceGram g = trace_gram(a);
            MinimaRecord fast = minimum_and_vectors(g);
            for (const IntVec& v : fast.vectors)
                for (const Int& x : v) REQUIRE(abs(x) <= 10);
            MinimaRecord slow = brute_force_minima(g.gram, 10);
            CHECK(fast.minimum == slow.minimum);
            CHECK(fast.vectors == slow.vectors);
        }
    }
}

TEST_CASE("minimum survives skewed unit scaling") {
    // (1 + sqrt(2))^8 stretches the gram matrix badly; reduction keeps the
    // enumeration exact and the scaled minimum invariant
    FieldPtr f = make_quadratic_field(2);
    auto lat = build_log_lattice(f, 128);
    FieldElement a = f->element({Rat(2), Rat(-1)});
    FieldElement u = unit_power_product(lat, IntVec{Int(4)});
    FieldElement skew = a * u * u;
    MinimaRecord m = minimum_and_vectors(skew);
    CHECK(scaled_minimum(skew, m.minimum) == scaled_minimum(a));
    CHECK(m.vectors.size() == minimum_and_vectors(a).vectors.size());
}

TEST_CASE("scaled_minimum invariants") {
    FieldPtr f = make_quadratic_field(2);
    FieldElement a = f->element({Rat(2), Rat(-1)});
    CHECK(scaled_minimum(a) == 8); // 4^2 / Nm(2 - sqrt(2))
    CHECK(scaled_minimum(f->one()) == 4);

    std::mt19937_64 rng(53);
    auto lat = build_log_lattice(f, 128);
    for (int i = 0; i < 10; ++i) {
        FieldElement x = random_totally_positive(f, rng);
        Rat base = scaled_minimum(x);
        CHECK(base > 0);
        CHECK(scaled_minimum(x.scaled(Rat(3, 7))) == base);
        FieldElement u = unit_power_product(lat, IntVec{Int(rand_range(rng, -2, 2))});
        CHECK(scaled_minimum(x * u * u) == base);
    }
}

TEST_CASE("scaled minimum lies between n^n and the Hermite-style ceiling") {
    std::mt19937_64 rng(54);
    for (FieldPtr f : {make_quadratic_field(2), make_quadratic_field(5), cubic_field()}) {
        unsigned n = static_cast<unsigned>(f->degree());
        Rat nn = 1;
        for (unsigned k = 0; k < n; ++k) nn *= n;
        RealInterval gam = gamma_blichfeldt(n, 160);
        RealInterval ceiling = gam;
        for (unsigned k = 1; k < n; ++k) ceiling = ceiling * gam;
        Rat cap = ceiling.hi_rat() * Rat(abs(f->discriminant()));
        for (int i = 0; i < 10; ++i) {
            Rat s = scaled_minimum(random_totally_positive(f, rng));
            CHECK(s >= nn);
            CHECK(s <= cap);
        }
    }
}
