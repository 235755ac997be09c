#include "punar/bounds.hpp"

#include "punar/errors.hpp"

namespace punar {

namespace {

Rat frac(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

RealInterval ri(long x, mpfr_prec_t prec) { return RealInterval::from_long(x, prec); }

RealInterval two_over_pi(mpfr_prec_t prec) { return ri(2, prec) / RealInterval::pi(prec); }

RealInterval gamma_2_half(unsigned n, mpfr_prec_t prec) {
    // Gamma(2 + n/2), argument exactly (4 + n)/2.
    return RealInterval(frac(4 + (long)n, 2), prec).gamma();
}

RealInterval zero(mpfr_prec_t prec) { return RealInterval(Rat(0), prec); }

} // namespace

RealInterval gamma_blichfeldt(unsigned n, mpfr_prec_t prec) {
    if (n < 1) throw DomainTooSmall("gamma_blichfeldt requires n >= 1");
    RealInterval g = gamma_2_half(n, prec);
    return two_over_pi(prec) * g.pow(RealInterval(frac(2, (long)n), prec));
}

RealInterval lambda1_lower(unsigned n, mpfr_prec_t prec) {
    if (n < 3) throw DomainTooSmall("lambda1_lower requires n >= 3");
    RealInterval ln = ri((long)n, prec).log();
    RealInterval ratio = ln.log() / ln;
    RealInterval cube = ratio * ratio * ratio;
    RealInterval scale = RealInterval(frac(2, (long)n), prec).sqrt();
    return scale * RealInterval(frac(1, 1000), prec) * cube;
}

RealInterval a_reducibility_bound(unsigned n, const Int& disc, mpfr_prec_t prec) {
    if (n < 1) throw DomainTooSmall("a_reducibility_bound requires n >= 1");
    if (disc == 0) throw InputError("zero discriminant");
    RealInterval sqrt_disc = RealInterval(Rat(abs(disc)), prec).sqrt();
    RealInterval n_pow = ri((long)n, prec).pow(RealInterval(frac(-(long)n, 2), prec));
    RealInterval pi_pow = two_over_pi(prec).pow(RealInterval(frac((long)n, 2), prec));
    return n_pow * sqrt_disc * pi_pow * gamma_2_half(n, prec);
}

RealInterval theta_K(const RealInterval& a, unsigned n) {
    if (n < 2) throw DomainTooSmall("theta_K requires n >= 2");
    if (a < Rat(1)) throw DomainTooSmall("theta_K requires A >= 1");
    RealInterval l = a.max_with(Rat(1)).log();
    return l * l * RealInterval(frac(4, (long)n - 1), a.precision());
}

RealInterval rho_K(unsigned n, const Int& disc, bool unit_reducible, mpfr_prec_t prec) {
    if (unit_reducible) return zero(prec);
    if (n < 2) throw DomainTooSmall("rho_K requires n >= 2 unless unit reducible");
    return theta_K(a_reducibility_bound(n, disc, prec).max_with(Rat(1)), n);
}

RealInterval eta_K(unsigned n, const RealInterval& regulator, bool unit_reducible,
                   EtaVariant variant, mpfr_prec_t prec) {
    if (unit_reducible) return zero(prec);
    if (n < 2) throw DomainTooSmall("eta_K requires n >= 2 unless unit reducible");
    RealInterval coeff = ri((long)n - 1, prec).sqrt() * RealInterval(frac(1, 2), prec);
    if (n <= 11) {
        Rat e = variant == EtaVariant::Abstract ? frac(1, (long)n - 1) : frac(1, (long)n);
        return coeff * regulator.pow(RealInterval(e, prec));
    }
    RealInterval pi_pow = two_over_pi(prec).pow(ri((long)n - 1, prec));
    RealInterval g = gamma_2_half(n - 1, prec);
    RealInterval lam = lambda1_lower(n, prec);
    RealInterval lam_pow = lam.pow(ri(2 - (long)n, prec));
    return coeff * pi_pow * g * g * lam_pow * regulator;
}

RealInterval mu_product_bound(unsigned n, const Int& disc, mpfr_prec_t prec) {
    if (n < 1) throw DomainTooSmall("mu_product_bound requires n >= 1");
    if (disc == 0) throw InputError("zero discriminant");
    RealInterval pi = RealInterval::pi(prec);
    RealInterval g_pow = gamma_2_half(n, prec).pow(RealInterval(frac(4, (long)n), prec));
    RealInterval d_pow = RealInterval(Rat(abs(disc)), prec).pow(RealInterval(frac(2, (long)n), prec));
    return ri(4, prec) / (pi * pi) * g_pow * d_pow;
}

RealInterval lem2_trace_bound(unsigned n, const Int& disc, const RealInterval& eta,
                              const RealInterval& theta, mpfr_prec_t prec) {
    RealInterval s = (eta * eta + theta).sqrt();
    return s.exp() * mu_product_bound(n, disc, prec);
}

RealInterval class_count_bound(unsigned n, const Int& disc, const RealInterval& regulator,
                               const Reducibility& red, int theorem,
                               ExponentVariant exponent_variant, EtaVariant eta_variant,
                               mpfr_prec_t prec) {
    if (theorem != 1 && theorem != 2) throw InputError("theorem selector must be 1 or 2");
    bool unit_red = red.mode == ReducibilityMode::Unit || n == 1; // the rationals reduce by the unit 1
    RealInterval eta = eta_K(n, regulator, unit_red, eta_variant, prec);
    RealInterval t = zero(prec);
    if (unit_red) {
        // eta = theta = rho = 0, any supplied constant is ignored
    } else if (theorem == 1) {
        if (red.mode == ReducibilityMode::SuppliedValue) {
            if (!red.a) throw InputError("missing supplied reducibility constant");
            t = theta_K(*red.a, n);
        } else {
            t = rho_K(n, disc, false, prec);
        }
    } else {
        t = rho_K(n, disc, false, prec);
    }
    RealInterval s = (eta * eta + t).sqrt();
    if (exponent_variant == ExponentVariant::Proof) s = s * ri((long)n, prec);
    RealInterval base = RealInterval(Rat(abs(disc)), prec) *
                        two_over_pi(prec).pow(ri(2 * (long)n, prec));
    RealInterval g = gamma_2_half(n, prec);
    return s.exp() * base * g * g * g * g;
}

BoundReport make_bound_report(unsigned n, const Int& disc, const RealInterval& regulator,
                              bool unit_reducible, EtaVariant eta_variant, mpfr_prec_t prec,
                              ExponentVariant exponent_variant) {
    if (n < 1) throw DomainTooSmall("degree must be at least 1");
    if (n == 1) unit_reducible = true; // the rationals reduce by the unit 1
    BoundReport r;
    r.n = n;
    r.abs_disc = abs(disc);
    r.regulator = regulator;
    r.unit_reducible = unit_reducible;
    r.eta_variant = eta_variant;
    r.exponent_variant = exponent_variant;
    r.gamma_upper = gamma_blichfeldt(n, prec);
    if (n >= 3) r.lambda1 = lambda1_lower(n, prec);
    r.a_bound = a_reducibility_bound(n, disc, prec);
    r.a_used = unit_reducible ? RealInterval(Rat(1), prec) : r.a_bound.max_with(Rat(1));
    r.eta = eta_K(n, regulator, unit_reducible, eta_variant, prec);
    r.eta_case = unit_reducible ? "unit-reducible" : (n <= 11 ? "small-degree" : "large-degree");
    r.theta = unit_reducible ? zero(prec) : theta_K(r.a_used, n);
    r.rho = rho_K(n, disc, unit_reducible, prec);
    r.lem2_trace = lem2_trace_bound(n, disc, r.eta, r.theta, prec);
    r.mu_product = mu_product_bound(n, disc, prec);
    Reducibility red;
    red.mode = unit_reducible ? ReducibilityMode::Unit : ReducibilityMode::FromDiscriminant;
    r.thm1_stated = class_count_bound(n, disc, regulator, red, 1, ExponentVariant::Stated,
                                      eta_variant, prec);
    r.thm1_proof = class_count_bound(n, disc, regulator, red, 1, ExponentVariant::Proof,
                                     eta_variant, prec);
    r.thm2_stated = class_count_bound(n, disc, regulator, red, 2, ExponentVariant::Stated,
                                      eta_variant, prec);
    r.thm2_proof = class_count_bound(n, disc, regulator, red, 2, ExponentVariant::Proof,
                                     eta_variant, prec);
    return r;
}

} // namespace punar
