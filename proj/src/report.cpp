#include "punar/report.hpp"

#include <sstream>

namespace punar {

namespace {

using nlohmann::ordered_json;

ordered_json int_json(const Int& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

ordered_json rat_vec_json(const RatVec& v) {
    ordered_json a = ordered_json::array();
    for (const Rat& x : v) a.push_back(format_rational(x));
    return a;
}

ordered_json interval_vec_json(const std::vector<RealInterval>& v) {
    ordered_json a = ordered_json::array();
    for (const RealInterval& x : v) a.push_back(x.to_string());
    return a;
}

std::string status_of(const std::vector<CheckResult>& checks, const std::string& name) {
    for (const CheckResult& c : checks)
        if (c.name == name) return c.status;
    return "skip";
}

} // namespace

ordered_json field_json(const FieldPtr& field, const LogUnitLattice& lat) {
    ordered_json j;
    j["degree"] = field->degree();
    ordered_json poly = ordered_json::array();
    for (const Int& c : field->min_poly()) poly.push_back(int_json(c));
    j["min_poly"] = poly;
    j["discriminant"] = int_json(field->discriminant());
    j["maximal_basis_known"] = field->maximal_basis_known();
    ordered_json basis = ordered_json::array();
    for (size_t i = 0; i < field->degree(); ++i) basis.push_back(rat_vec_json(field->basis().row(i)));
    j["integral_basis"] = basis;
    ordered_json units = ordered_json::array();
    for (const FieldElement& u : lat.units) units.push_back(rat_vec_json(u.coords()));
    j["units"] = units;
    j["regulator"] = lat.regulator.to_string();
    ordered_json roots = ordered_json::array();
    for (const RatInterval& r : field->root_boxes())
        roots.push_back(RealInterval(r.lo, r.hi, 96).to_string());
    j["embeddings"] = roots;
    j["lambda_euclidean"] = interval_vec_json(lat.minima_euclidean);
    j["lambda_frame"] = interval_vec_json(lat.minima_frame);
    j["covering_radius_upper"] = covering_radius_upper(lat).to_string();
    return j;
}

ordered_json bounds_json(const BoundReport& b) {
    ordered_json j;
    j["n"] = b.n;
    j["abs_discriminant"] = int_json(b.abs_disc);
    j["regulator"] = b.regulator.to_string();
    j["unit_reducible"] = b.unit_reducible;
    j["eta_variant"] = b.eta_variant == EtaVariant::Abstract ? "abstract" : "theorem";
    j["exponent_variant"] = b.exponent_variant == ExponentVariant::Proof ? "proof" : "stated";
    j["gamma_upper"] = b.gamma_upper.to_string();
    if (b.lambda1)
        j["lambda1_lower"] = b.lambda1->to_string();
    else
        j["lambda1_lower"] = nullptr;
    j["a_bound"] = b.a_bound.to_string();
    j["a_used"] = b.a_used.to_string();
    j["eta"] = b.eta.to_string();
    j["eta_case"] = b.eta_case;
    j["theta"] = b.theta.to_string();
    j["rho"] = b.rho.to_string();
    j["lem2_trace_bound"] = b.lem2_trace.to_string();
    j["mu_product_bound"] = b.mu_product.to_string();
    j["thm1_stated"] = b.thm1_stated.to_string();
    j["thm1_proof"] = b.thm1_proof.to_string();
    j["thm2_stated"] = b.thm2_stated.to_string();
    j["thm2_proof"] = b.thm2_proof.to_string();
    j["class_bound_display"] = (b.exponent_variant == ExponentVariant::Proof
                                    ? b.thm2_proof
                                    : b.thm2_stated)
                                   .to_string();
    return j;
}

ordered_json enumeration_json(const EnumerationReport& rep) {
    ordered_json j;
    j["complete"] = rep.complete;
    j["class_count"] = rep.classes.size();
    j["edge_count"] = rep.edge_count;
    j["visited_forms"] = rep.visited_forms;
    j["unit_reducible_observed"] = rep.unit_reducible_observed;
    j["max_minimal_norm"] = int_json(rep.max_minimal_norm);
    ordered_json classes = ordered_json::array();
    for (const PerfectClass& c : rep.classes) {
        ordered_json e;
        e["key"] = c.key;
        e["rep"] = rat_vec_json(c.rep.coords());
        e["minimum"] = format_rational(c.minima.minimum);
        e["scaled_minimum"] = format_rational(c.scaled_min);
        e["vector_count"] = c.minima.vectors.size();
        e["facet_count"] = c.facet_count;
        e["max_trace_sq"] = format_rational(c.max_vector_trace_sq);
        e["max_norm"] = int_json(c.max_vector_norm);
        classes.push_back(e);
    }
    j["classes"] = classes;
    j["anomalies"] = rep.anomalies;
    return j;
}

ordered_json checks_json(const std::vector<CheckResult>& checks) {
    ordered_json a = ordered_json::array();
    for (const CheckResult& c : checks) {
        ordered_json e;
        e["name"] = c.name;
        e["status"] = c.status;
        e["detail"] = c.detail;
        a.push_back(e);
    }
    return a;
}

ordered_json report_json(const FieldPtr& field, const LogUnitLattice& lat,
                         const VerifyResult& r) {
    ordered_json j;
    j["field"] = field_json(field, lat);
    j["bounds"] = bounds_json(r.bounds);
    j["enumeration"] = enumeration_json(r.enumeration);
    j["checks"] = checks_json(r.checks);
    return j;
}

const char* const kSweepCsvHeader =
    "d,discriminant,regulator,class_count,thm1_stated,thm1_proof,thm2_stated,thm2_proof,"
    "empirical_a,closure,perfection,unit_invariance,mu_product,trace_bound,norm_bound,"
    "interior_disjointness";

std::string sweep_csv_row(long d, const LogUnitLattice& lat, const VerifyResult& r) {
    std::ostringstream s;
    s << d << ',' << lat.field->discriminant().get_str() << ',' << lat.regulator.to_string()
      << ',' << r.enumeration.classes.size() << ',' << r.bounds.thm1_stated.to_string() << ','
      << r.bounds.thm1_proof.to_string() << ',' << r.bounds.thm2_stated.to_string() << ','
      << r.bounds.thm2_proof.to_string() << ',' << r.empirical_a.get_str() << ','
      << status_of(r.checks, "closure") << ',' << status_of(r.checks, "perfection") << ','
      << status_of(r.checks, "unit-invariance") << ',' << status_of(r.checks, "mu-product")
      << ',' << status_of(r.checks, "trace-bound") << ',' << status_of(r.checks, "norm-bound")
      << ',' << status_of(r.checks, "interior-disjointness");
    return s.str();
}

} // namespace punar
