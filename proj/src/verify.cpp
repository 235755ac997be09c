#include "punar/verify.hpp"

#include "punar/form_minima.hpp"

#include <algorithm>
#include <sstream>

namespace punar {

namespace {

long rand_range(std::mt19937_64& rng, long lo, long hi) {
    // Modulo keeps the stream identical across standard library versions.
    return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

Rat small_rat(std::mt19937_64& rng) {
    Rat r(rand_range(rng, -4, 4), rand_range(rng, 1, 2));
    r.canonicalize();
    return r;
}

// value <= bound, decided from the certified enclosure of the bound.
std::string leq_status(const Rat& value, const RealInterval& bound) {
    if (bound.lo_rat() >= value) return "pass";
    if (bound.hi_rat() < value) return "fail";
    return "skip";
}

std::string leq_status(const RealInterval& value, const RealInterval& bound) {
    if (value.hi_rat() <= bound.lo_rat()) return "pass";
    if (value.lo_rat() > bound.hi_rat()) return "fail";
    return "skip";
}

IntVec normalized_ints(const RatVec& c) {
    IntVec v(c.size());
    for (size_t i = 0; i < c.size(); ++i) v[i] = Int(c[i].get_num());
    for (const Int& x : v) {
        if (x == 0) continue;
        if (x < 0)
            for (Int& y : v) y = -y;
        break;
    }
    return v;
}

} // namespace

FieldElement random_totally_positive(const FieldPtr& field, std::mt19937_64& rng) {
    size_t n = field->degree();
    for (int attempt = 0; attempt < 64; ++attempt) {
        RatVec c(n);
        bool zero = true;
        for (size_t i = 0; i < n; ++i) {
            c[i] = small_rat(rng);
            if (c[i] != 0) zero = false;
        }
        if (zero) continue;
        FieldElement x = field->element(c);
        if (is_totally_positive(x)) return x;
    }
    RatVec c(n);
    for (size_t i = 0; i < n; ++i) c[i] = Rat(rand_range(rng, -3, 3));
    FieldElement t = field->element(c);
    return t * t + field->one();
}

namespace {

CheckResult closure_check(const EnumerationReport& rep) {
    std::ostringstream d;
    d << rep.classes.size() << " classes, " << rep.edge_count << " facet crossings";
    if (!rep.anomalies.empty()) d << "; " << rep.anomalies.size() << " anomaly note(s)";
    return {"closure", rep.complete ? "pass" : "fail",
            rep.complete ? d.str() : "stopped at the class cap; " + d.str()};
}

CheckResult perfection_check(const EnumerationReport& rep) {
    for (const PerfectClass& c : rep.classes)
        if (!is_perfect(c.rep, c.minima))
            return {"perfection", "fail", "class " + c.key + " is not perfect"};
    return {"perfection", "pass", "exact rank certificate for every class"};
}

CheckResult class_count_check(const std::string& name, size_t count, const RealInterval& bound) {
    Rat k(static_cast<long>(count));
    std::ostringstream d;
    d << count << " <= " << bound.to_string();
    return {name, leq_status(k, bound), d.str()};
}

CheckResult trace_bound_check(const FieldPtr& field, const LogUnitLattice& lat,
                              const EnumerationReport& rep, const RealInterval& bound) {
    for (const PerfectClass& c : rep.classes) {
        if (leq_status(c.max_vector_trace_sq, bound) == "pass") continue;
        // The bound holds for some representative of the class; retry with
        // the one whose inverse has unit-reduced trace.
        UnitReduction red = reduce_by_units(lat, c.rep.inverse());
        FieldElement winv = red.unit.inverse();
        FieldElement alt = c.rep * winv * winv;
        MinimaRecord m = minimum_and_vectors(alt);
        Rat worst(0);
        for (const IntVec& x : m.vectors) {
            RatVec xc(x.size());
            for (size_t i = 0; i < x.size(); ++i) xc[i] = Rat(x[i]);
            FieldElement xe = field->element(xc);
            Rat t = trace(xe * xe);
            if (t > worst) worst = t;
        }
        std::string s = leq_status(worst, bound);
        if (s != "pass")
            return {"trace-bound", s,
                    "class " + c.key + ": max Tr(x^2) = " + format_rational(worst) +
                        " vs " + bound.to_string()};
    }
    return {"trace-bound", "pass",
            "max Tr(x^2) over minimal vectors <= " + bound.to_string() + " for every class"};
}

CheckResult norm_bound_check(const Int& empirical_a, const RealInterval& a_bound) {
    std::ostringstream d;
    d << "max |Nm(x)| = " << empirical_a.get_str() << " <= " << a_bound.to_string();
    return {"norm-bound", leq_status(Rat(empirical_a), a_bound), d.str()};
}

CheckResult mu_product_check(const FieldPtr& field, const RealInterval& bound,
                             std::mt19937_64& rng, size_t samples) {
    size_t indeterminate = 0;
    for (size_t i = 0; i < samples; ++i) {
        FieldElement a = random_totally_positive(field, rng);
        Rat product = minimum_and_vectors(a).minimum * minimum_and_vectors(a.inverse()).minimum;
        std::string s = leq_status(product, bound);
        if (s == "fail")
            return {"mu-product", "fail",
                    "sample " + std::to_string(i) + ": mu(a)mu(a^-1) = " +
                        format_rational(product) + " > " + bound.to_string()};
        if (s == "skip") ++indeterminate;
    }
    std::ostringstream d;
    d << samples << " samples <= " << bound.to_string();
    if (indeterminate) d << " (" << indeterminate << " indeterminate)";
    return {"mu-product", "pass", d.str()};
}

CheckResult unit_invariance_check(const FieldPtr& field, const LogUnitLattice& lat,
                                  const EnumerationReport& rep, std::mt19937_64& rng,
                                  size_t samples) {
    size_t rank = lat.units.size();
    if (rank == 0) return {"unit-invariance", "skip", "unit group has rank 0"};
    for (size_t i = 0; i < samples; ++i) {
        const FieldElement& a = rep.classes[i % rep.classes.size()].rep;
        MinimaRecord ma = minimum_and_vectors(a);
        IntVec e(rank);
        for (size_t k = 0; k < rank; ++k) e[k] = Int(rand_range(rng, -3, 3));
        FieldElement u = unit_power_product(lat, e);
        FieldElement uinv = u.inverse();
        MinimaRecord mb = minimum_and_vectors(a * u * u);
        if (mb.minimum != ma.minimum)
            return {"unit-invariance", "fail",
                    "sample " + std::to_string(i) + ": minimum changed under a unit square"};
        std::vector<IntVec> mapped;
        for (const IntVec& x : ma.vectors) {
            RatVec xc(x.size());
            for (size_t k = 0; k < x.size(); ++k) xc[k] = Rat(x[k]);
            RatVec yc = (field->element(xc) * uinv).coords();
            if (!is_integer_vec(yc))
                return {"unit-invariance", "fail",
                        "sample " + std::to_string(i) + ": transported vector not integral"};
            mapped.push_back(normalized_ints(yc));
        }
        std::sort(mapped.begin(), mapped.end());
        if (mapped != mb.vectors)
            return {"unit-invariance", "fail",
                    "sample " + std::to_string(i) + ": minimal vectors do not transport"};
    }
    return {"unit-invariance", "pass",
            std::to_string(samples) + " unit squares preserve (mu, M) exactly"};
}

CheckResult disjointness_check(EnumerationReport& rep) {
    if (rep.classes.size() < 2)
        return {"interior-disjointness", "skip", "fewer than two classes"};
    size_t before = rep.anomalies.size();
    bool ok = interior_disjointness_check(rep);
    if (ok) return {"interior-disjointness", "pass", "all cone interiors pairwise disjoint"};
    return {"interior-disjointness", "fail", rep.anomalies.back().substr(0, 200) +
                                                 (rep.anomalies.size() - before > 1
                                                      ? " (and more)"
                                                      : "")};
}

CheckResult minkowski_check(const LogUnitLattice& lat, mpfr_prec_t prec) {
    size_t r = lat.minima_frame.size();
    if (r == 0) return {"minkowski-product", "skip", "unit lattice has rank 0"};
    RealInterval product = lat.minima_frame[0];
    for (size_t i = 1; i < r; ++i) product = product * lat.minima_frame[i];
    RealInterval g = gamma_blichfeldt(static_cast<unsigned>(r), prec);
    RealInterval stated = g.pow(RealInterval::from_long(static_cast<long>(r), prec)) * lat.regulator;
    Rat half(static_cast<long>(r), 2);
    half.canonicalize();
    RealInterval sharp = g.pow(RealInterval(half, prec)) * lat.regulator;
    std::ostringstream d;
    d << "prod lambda_i = " << product.to_string() << " vs stated " << stated.to_string()
      << "; sharper exponent form gives " << sharp.to_string() << " ("
      << leq_status(product, sharp) << ")";
    return {"minkowski-product", leq_status(product, stated), d.str()};
}

CheckResult lambda1_check(const LogUnitLattice& lat, mpfr_prec_t prec) {
    unsigned n = static_cast<unsigned>(lat.field->degree());
    if (n < 12) return {"lambda1-lower", "skip", "degree below 12"};
    RealInterval lower = lambda1_lower(n, prec);
    std::string s = leq_status(lower, lat.minima_euclidean[0]);
    return {"lambda1-lower", s,
            "lambda_1 = " + lat.minima_euclidean[0].to_string() + " >= " + lower.to_string()};
}

} // namespace

VerifyResult run_verification(const FieldPtr& field, const LogUnitLattice& lat,
                              const VerifyOptions& opt) {
    VerifyResult r;
    r.enumeration = enumerate_perfect_classes(field, lat, opt.max_classes);
    r.bounds = make_bound_report(static_cast<unsigned>(field->degree()), field->discriminant(),
                                 lat.regulator, opt.assume_unit_reducible, opt.eta_variant,
                                 opt.prec, opt.exponent_variant);
    r.empirical_a = r.enumeration.max_minimal_norm;

    std::mt19937_64 rng(opt.seed);
    unsigned n = static_cast<unsigned>(field->degree());

    r.checks.push_back(closure_check(r.enumeration));
    r.checks.push_back(perfection_check(r.enumeration));

    Reducibility red1, red2;
    if (opt.assume_unit_reducible) {
        red1.mode = ReducibilityMode::Unit;
        red2.mode = ReducibilityMode::Unit;
    } else {
        red1.mode = ReducibilityMode::SuppliedValue;
        red1.a = RealInterval(Rat(r.empirical_a), opt.prec).max_with(Rat(1));
        red2.mode = ReducibilityMode::FromDiscriminant;
    }
    const Int& disc = field->discriminant();
    size_t count = r.enumeration.classes.size();
    r.checks.push_back(class_count_check(
        "class-count-thm1-stated", count,
        class_count_bound(n, disc, lat.regulator, red1, 1, ExponentVariant::Stated,
                          opt.eta_variant, opt.prec)));
    r.checks.push_back(class_count_check(
        "class-count-thm1-proof", count,
        class_count_bound(n, disc, lat.regulator, red1, 1, ExponentVariant::Proof,
                          opt.eta_variant, opt.prec)));
    r.checks.push_back(class_count_check(
        "class-count-thm2-stated", count,
        class_count_bound(n, disc, lat.regulator, red2, 2, ExponentVariant::Stated,
                          opt.eta_variant, opt.prec)));
    r.checks.push_back(class_count_check(
        "class-count-thm2-proof", count,
        class_count_bound(n, disc, lat.regulator, red2, 2, ExponentVariant::Proof,
                          opt.eta_variant, opt.prec)));

    r.checks.push_back(unit_invariance_check(field, lat, r.enumeration, rng, opt.unit_samples));
    r.checks.push_back(mu_product_check(field, r.bounds.mu_product, rng, opt.product_samples));
    r.checks.push_back(trace_bound_check(field, lat, r.enumeration, r.bounds.lem2_trace));
    r.checks.push_back(norm_bound_check(r.empirical_a, r.bounds.a_bound));
    r.checks.push_back(disjointness_check(r.enumeration));
    r.checks.push_back(minkowski_check(lat, opt.prec));
    r.checks.push_back(lambda1_check(lat, opt.prec));
    return r;
}

int exit_code_for(const VerifyResult& r) {
    for (const CheckResult& c : r.checks)
        if (c.status == "fail" && c.name != "closure") return 4;
    return r.enumeration.complete ? 0 : 3;
}

} // namespace punar
