#include <doctest.h>

#include "punar/report.hpp"

#include "oracles.hpp"

#include <sstream>
#include <string>
#include <vector>

using namespace punar;
using namespace punar_test;

namespace {

VerifyResult quick_verify(const FieldPtr& f, const LogUnitLattice& lat) {
    VerifyOptions opt;
    opt.prec = 160;
    opt.seed = 5;
    opt.product_samples = 5;
    opt.unit_samples = 3;
    return run_verification(f, lat, opt);
}

size_t count_fields(const std::string& line) {
    return static_cast<size_t>(std::count(line.begin(), line.end(), ',')) + 1;
}

} // namespace

TEST_CASE("field_json carries the arithmetic data") {
    FieldPtr f = make_quadratic_field(2);
    auto lat = build_log_lattice(f, 160);
    nlohmann::ordered_json j = field_json(f, lat);
    CHECK(j["degree"] == 2);
    CHECK(j["discriminant"] == 8);
    CHECK(j["maximal_basis_known"] == true);
    CHECK(j["min_poly"].size() == 3);
    CHECK(j["units"].size() == 1);
    CHECK(j["regulator"].get<std::string>().substr(0, 13) == "0.88137358702");
    CHECK(j["embeddings"].size() == 2);
    CHECK(j["lambda_euclidean"].size() == 1);
    CHECK(j["lambda_frame"].size() == 1);
    CHECK(j.contains("covering_radius_upper"));
}

TEST_CASE("bounds_json tracks the report") {
    FieldPtr f = make_quadratic_field(2);
    auto lat = build_log_lattice(f, 160);
    BoundReport br = make_bound_report(2, f->discriminant(), lat.regulator, true,
                                       EtaVariant::Abstract, 160);
    nlohmann::ordered_json j = bounds_json(br);
    CHECK(j["n"] == 2);
    CHECK(j["abs_discriminant"] == 8);
    CHECK(j["unit_reducible"] == true);
    CHECK(j["eta_variant"] == "abstract");
    CHECK(j["exponent_variant"] == "proof");
    CHECK(j["eta_case"] == "unit-reducible");
    CHECK(j["thm1_stated"].get<std::string>().substr(0, 7) == "21.0247");
    CHECK(j["class_bound_display"] == j["thm2_proof"]);
    CHECK(j["lambda1_lower"].is_null()); // only defined for degree >= 3

    BoundReport big = make_bound_report(12, Int(1000000), RealInterval::from_long(1, 160), false,
                                        EtaVariant::Abstract, 160);
    CHECK(bounds_json(big)["lambda1_lower"].is_string());
}

TEST_CASE("enumeration and checks serialize faithfully") {
    FieldPtr f = make_quadratic_field(6);
    auto lat = build_log_lattice(f, 160);
    VerifyResult r = quick_verify(f, lat);
    nlohmann::ordered_json e = enumeration_json(r.enumeration);
    CHECK(e["complete"] == true);
    CHECK(e["class_count"] == 2);
    CHECK(e["classes"].size() == 2);
    for (const auto& c : e["classes"]) {
        CHECK(c.contains("key"));
        CHECK(c.contains("rep"));
        CHECK(c.contains("minimum"));
        CHECK(c.contains("scaled_minimum"));
        CHECK(c.contains("vector_count"));
        CHECK(c.contains("facet_count"));
    }
    nlohmann::ordered_json ch = checks_json(r.checks);
    CHECK(ch.size() == r.checks.size());
    bool saw_closure = false;
    for (const auto& c : ch) {
        if (c["name"] == "closure") {
            saw_closure = true;
            CHECK(c["status"] == "pass");
        }
    }
    CHECK(saw_closure);
}

TEST_CASE("report_json round trips through its own text form") {
    FieldPtr f = make_quadratic_field(2);
    auto lat = build_log_lattice(f, 160);
    VerifyResult r = quick_verify(f, lat);
    nlohmann::ordered_json top = report_json(f, lat, r);
    CHECK(top.contains("field"));
    CHECK(top.contains("bounds"));
    CHECK(top.contains("enumeration"));
    CHECK(top.contains("checks"));
    std::string text = top.dump(2);
    nlohmann::ordered_json back = nlohmann::ordered_json::parse(text);
    CHECK(back == top);
    // emission is deterministic
    CHECK(top.dump(2) == text);
}

TEST_CASE("sweep csv rows line up with the header") {
    size_t width = count_fields(kSweepCsvHeader);
    CHECK(width == 16);
    CHECK(std::string(kSweepCsvHeader).substr(0, 2) == "d,");

    FieldPtr f = make_quadratic_field(5);
    auto lat = build_log_lattice(f, 160);
    VerifyResult r = quick_verify(f, lat);
    std::string row = sweep_csv_row(5, lat, r);
    CHECK(count_fields(row) == width);
    CHECK(row.substr(0, 2) == "5,");
    CHECK(row.find("fail") == std::string::npos);
    // emitting twice gives identical bytes
    CHECK(sweep_csv_row(5, lat, r) == row);
}
