#include <doctest.h>

#include "punar/errors.hpp"
#include "punar/number_field.hpp"

#include "oracles.hpp"

#include <cstdio>
#include <fstream>
#include <random>
#include <string>

using namespace punar;
using namespace punar_test;

namespace {

FieldElement sqrt2(const FieldPtr& f) { return f->element({Rat(0), Rat(1)}); }

std::string write_temp(const std::string& name, const std::string& body) {
    std::string path = "nf_test_" + name + ".json";
    std::ofstream out(path);
    out << body;
    return path;
}

} // namespace

TEST_CASE("quadratic field construction") {
    FieldPtr f = make_quadratic_field(2);
    CHECK(f->degree() == 2);
    CHECK(f->discriminant() == 8);
    CHECK(f->maximal_basis_known());
    CHECK(f->basis() == QMatrix::identity(2));
    CHECK(f->trace_form() == QMatrix::from_rows({{Rat(2), Rat(0)}, {Rat(0), Rat(4)}}));
    CHECK(f->root_boxes().size() == 2);
    CHECK(f->root_boxes()[0].hi < f->root_boxes()[1].lo);

    FieldPtr f5 = make_quadratic_field(5);
    CHECK(f5->discriminant() == 5);
    // working basis 1, (1 + sqrt(5))/2
    CHECK(f5->basis() == QMatrix::from_rows({{Rat(1), Rat(0)}, {Rat(1, 2), Rat(1, 2)}}));
    CHECK(trace(f5->element({Rat(0), Rat(1)})) == 1);
    CHECK(norm(f5->element({Rat(0), Rat(1)})) == -1);

    CHECK(make_quadratic_field(13)->discriminant() == 13);
    CHECK(make_quadratic_field(6)->discriminant() == 24);

    CHECK_THROWS_AS(make_quadratic_field(4), InputError);
    CHECK_THROWS_AS(make_quadratic_field(12), InputError);
    CHECK_THROWS_AS(make_quadratic_field(1), InputError);
    CHECK_THROWS_AS(make_quadratic_field(-3), InputError);
}

TEST_CASE("make_field validation") {
    CHECK_THROWS_AS(make_field(ZPoly{Int(1), Int(0), Int(1)}), NotTotallyReal);  // x^2 + 1
    CHECK_THROWS_AS(make_field(ZPoly{Int(-1), Int(0), Int(1), Int(0), Int(1)}), NotTotallyReal);
    CHECK_THROWS_AS(make_field(ZPoly{Int(-1), Int(0), Int(1)}), ReduciblePolynomial);
    CHECK_THROWS_AS(make_field(ZPoly{Int(-4), Int(0), Int(1)}), ReduciblePolynomial);
    CHECK_THROWS_AS(make_field(ZPoly{Int(-1), Int(2)}), InputError); // not monic
    CHECK_THROWS_AS(make_field(ZPoly{Int(5)}), InputError);          // constant
    CHECK_THROWS_AS(make_field(ZPoly{}), InputError);

    // basis must contain 1 over Z and be multiplicatively closed
    QMatrix doubled = QMatrix::from_rows({{Rat(2), Rat(0)}, {Rat(0), Rat(1)}});
    CHECK_THROWS_AS(make_field(ZPoly{Int(-2), Int(0), Int(1)}, doubled), BasisNotUnimodular);
    QMatrix halves = QMatrix::from_rows({{Rat(1), Rat(0)}, {Rat(1, 2), Rat(1, 2)}});
    CHECK_THROWS_AS(make_field(ZPoly{Int(-2), Int(0), Int(1)}, halves), BasisNotUnimodular);
    QMatrix dependent = QMatrix::from_rows({{Rat(1), Rat(0)}, {Rat(2), Rat(0)}});
    CHECK_THROWS_AS(make_field(ZPoly{Int(-2), Int(0), Int(1)}, dependent), BasisNotUnimodular);
    // the d = 5 maximal basis, passed explicitly, is accepted
    FieldPtr f5 = make_field(ZPoly{Int(-5), Int(0), Int(1)}, halves);
    CHECK(f5->discriminant() == 5);
    CHECK(f5->maximal_basis_known());

    CHECK_THROWS_AS(make_field(ZPoly{Int(-2), Int(0), Int(1)}, std::nullopt,
                               std::vector<RatVec>{{Rat(1)}}),
                    InputError); // unit row of wrong length
}

TEST_CASE("degree one field") {
    FieldPtr f = make_field(ZPoly{Int(-1), Int(1)});
    CHECK(f->degree() == 1);
    CHECK(f->discriminant() == 1);
    CHECK(trace(f->one()) == 1);
    CHECK(norm(f->integer(7)) == 7);
    CHECK(is_totally_positive(f->integer(3)));
    CHECK(!is_totally_positive(f->integer(-3)));
}

TEST_CASE("trace and norm pinned values") {
    FieldPtr f = make_quadratic_field(2);
    CHECK(trace(f->one()) == 2);
    CHECK(trace(sqrt2(f)) == 0);
    CHECK(norm(f->element({Rat(1), Rat(1)})) == -1); // 1 + sqrt(2)
    CHECK(norm(f->element({Rat(3), Rat(1)})) == 7);
    CHECK(norm(f->zero()) == 0);

    FieldPtr c = cubic_field();
    CHECK(c->degree() == 3);
    CHECK(c->discriminant() == 49);
    FieldElement theta = c->element({Rat(0), Rat(1), Rat(0)});
    CHECK(trace(theta) == -1);
    CHECK(norm(theta) == 1);
    CHECK(trace(c->one()) == 3);
}

TEST_CASE("element arithmetic") {
    FieldPtr f = make_quadratic_field(2);
    FieldElement u = f->element({Rat(1), Rat(1)});
    FieldElement v = f->element({Rat(1), Rat(-1)});
    CHECK((u * v) == f->integer(-1));
    CHECK((u + v) == f->integer(2));
    CHECK((u - u).is_zero());
    CHECK((-u).coords() == RatVec{Rat(-1), Rat(-1)});
    CHECK(u.scaled(Rat(3, 2)).coords() == RatVec{Rat(3, 2), Rat(3, 2)});
    CHECK((u * u.inverse()) == f->one());
    CHECK_THROWS_AS(f->zero().inverse(), ZeroElement);
    CHECK((sqrt2(f) * sqrt2(f)) == f->integer(2));

    std::mt19937_64 rng(31);
    FieldPtr c = cubic_field();
    for (int i = 0; i < 20; ++i) {
        RatVec coords(3);
        for (Rat& x : coords) x = random_rat(rng, 5, 3);
        FieldElement x = c->element(coords);
        if (x.is_zero()) continue;
        CHECK((x * x.inverse()) == c->one());
        CHECK(norm(x) * norm(x.inverse()) == 1);
        CHECK(trace(x + x) == 2 * trace(x));
    }
}

TEST_CASE("power coordinates round trip through a non-trivial basis") {
    FieldPtr f5 = make_quadratic_field(5);
    FieldElement omega = f5->element({Rat(0), Rat(1)});
    CHECK(omega.power_coords() == RatVec{Rat(1, 2), Rat(1, 2)});
    std::mt19937_64 rng(32);
    for (int i = 0; i < 20; ++i) {
        RatVec coords(2);
        for (Rat& x : coords) x = random_rat(rng, 9, 4);
        FieldElement x = f5->element(coords);
        CHECK(f5->from_power_coords(x.power_coords()) == x);
    }
}

TEST_CASE("multiplication matrix agrees with element product") {
    std::mt19937_64 rng(33);
    FieldPtr c = cubic_field();
    for (int i = 0; i < 15; ++i) {
        RatVec xc(3), yc(3);
        for (Rat& v : xc) v = random_rat(rng, 6, 3);
        for (Rat& v : yc) v = random_rat(rng, 6, 3);
        FieldElement x = c->element(xc), y = c->element(yc);
        CHECK(c->mult_matrix(x).apply(y.coords()) == (x * y).coords());
    }
}

TEST_CASE("total positivity") {
    FieldPtr f = make_quadratic_field(2);
    CHECK(is_totally_positive(f->one()));
    CHECK(is_totally_positive(f->element({Rat(2), Rat(-1)}))); // 2 - sqrt(2)
    CHECK(is_totally_positive(f->element({Rat(2), Rat(1)})));
    CHECK(!is_totally_positive(sqrt2(f)));
    CHECK(!is_totally_positive(f->integer(-1)));
    CHECK(!is_totally_positive(f->element({Rat(1), Rat(1)}))); // norm -1
    CHECK_THROWS_AS(is_totally_positive(f->zero()), ZeroElement);
}

TEST_CASE("embeddings enclose conjugates, sum to trace, multiply to norm") {
    FieldPtr f = make_quadratic_field(2);
    auto em = embeddings(f->element({Rat(1), Rat(1)}), Rat(1, 1000000));
    REQUIRE(em.size() == 2);
    CHECK(em[0].width() <= Rat(1, 1000000));
    CHECK(std::abs(em[0].mid().get_d() + 0.41421356) < 1e-5);
    CHECK(std::abs(em[1].mid().get_d() - 2.41421356) < 1e-5);

    std::mt19937_64 rng(34);
    for (FieldPtr fld : {make_quadratic_field(5), cubic_field()}) {
        for (int i = 0; i < 30; ++i) {
            RatVec coords(static_cast<size_t>(fld->degree()));
            for (Rat& x : coords) x = random_rat(rng, 8, 5);
            FieldElement x = fld->element(coords);
            auto boxes = embeddings(x, Rat(1, 1 << 20));
            RatInterval sum(Rat(0)), prod(Rat(1));
            for (const RatInterval& bx : boxes) {
                sum = sum + bx;
                prod = prod * bx;
            }
            CHECK(sum.lo <= trace(x));
            CHECK(trace(x) <= sum.hi);
            CHECK(prod.lo <= norm(x));
            CHECK(norm(x) <= prod.hi);
        }
    }
}

TEST_CASE("is_squarefree_int") {
    CHECK(is_squarefree_int(2));
    CHECK(is_squarefree_int(30));
    CHECK(is_squarefree_int(1));
    CHECK(!is_squarefree_int(4));
    CHECK(!is_squarefree_int(8));
    CHECK(!is_squarefree_int(12));
    CHECK(!is_squarefree_int(49));
    CHECK(!is_squarefree_int(50));
}

TEST_CASE("field description loading") {
    std::string good = write_temp("good", R"({
        "min_poly": [-1, -2, 1, 1],
        "fundamental_units": [["0", "1", "0"], ["-2", "0", "1"]]
    })");
    FieldDescription d = load_field_description(good);
    CHECK(d.min_poly == ZPoly{Int(-1), Int(-2), Int(1), Int(1)});
    REQUIRE(d.units.has_value());
    CHECK(d.units->size() == 2);
    FieldPtr f = field_from_description(d);
    CHECK(f->degree() == 3);
    CHECK(f->discriminant() == 49);
    std::remove(good.c_str());

    std::string with_basis = write_temp("basis", R"({
        "min_poly": [-5, 0, 1],
        "integral_basis": [[1, 0], ["1/2", "1/2"]]
    })");
    FieldPtr f5 = field_from_description(load_field_description(with_basis));
    CHECK(f5->discriminant() == 5);
    std::remove(with_basis.c_str());

    CHECK_THROWS_AS(load_field_description("does_not_exist.json"), InputError);

    auto expect_bad = [](const std::string& name, const std::string& body) {
        std::string path = write_temp(name, body);
        CHECK_THROWS_AS(load_field_description(path), InputError);
        std::remove(path.c_str());
    };
    expect_bad("notjson", "{ min_poly: oops");
    expect_bad("nopoly", R"({"integral_basis": [[1]]})");
    expect_bad("polytype", R"({"min_poly": "x^2-2"})");
    expect_bad("fracpoly", R"({"min_poly": ["1/2", 1]})");
    expect_bad("basisrows", R"({"min_poly": [-2, 0, 1], "integral_basis": [[1, 0], [1]]})");
    expect_bad("basistype", R"({"min_poly": [-2, 0, 1], "integral_basis": 3})");
    expect_bad("unittype", R"({"min_poly": [-2, 0, 1], "fundamental_units": [3]})");
}
