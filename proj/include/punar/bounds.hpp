#pragma once

#include "punar/real_interval.hpp"

#include <optional>
#include <string>

namespace punar {

// Which power of the regulator enters the small-degree eta case.
enum class EtaVariant {
    Abstract, // R^{1/(n-1)}
    Theorem,  // R^{1/n}
};

// Which exponential prefactor enters the class-count bound.
enum class ExponentVariant {
    Stated, // e^{sqrt(eta^2 + theta)}
    Proof,  // e^{n sqrt(eta^2 + theta)}
};

enum class ReducibilityMode {
    Unit,             // reducible by units alone (A = 1)
    SuppliedValue,    // caller provides A
    FromDiscriminant, // A from a_reducibility_bound(n, disc)
};

struct Reducibility {
    ReducibilityMode mode = ReducibilityMode::FromDiscriminant;
    std::optional<RealInterval> a; // required for SuppliedValue
};

// Blichfeldt's upper bound (2/pi) * Gamma(2 + n/2)^(2/n) on the rank-n
// Hermite constant.  n >= 1.
RealInterval gamma_blichfeldt(unsigned n, mpfr_prec_t prec);

// Lower bound sqrt(2/n) * (1/1000) * (loglog n / log n)^3 on the first
// minimum of a rank-(n-1) log-unit lattice.  Requires n >= 3.
RealInterval lambda1_lower(unsigned n, mpfr_prec_t prec);

// Every degree-n field with discriminant disc is A-reducible for
// A = n^{-n/2} * sqrt(|disc|) * (2/pi)^{n/2} * Gamma(2 + n/2).
RealInterval a_reducibility_bound(unsigned n, const Int& disc, mpfr_prec_t prec);

// 4 log(A)^2 / (n - 1).  Requires A >= 1 (intervals straddling 1 are
// clamped from below) and n >= 2.
RealInterval theta_K(const RealInterval& a, unsigned n);

// 0 for unit-reducible fields, otherwise theta_K at the discriminant
// reducibility bound.
RealInterval rho_K(unsigned n, const Int& disc, bool unit_reducible, mpfr_prec_t prec);

// Case-selected unit traversal bound.  n >= 2 unless unit_reducible.
RealInterval eta_K(unsigned n, const RealInterval& regulator, bool unit_reducible,
                   EtaVariant variant, mpfr_prec_t prec);

// e^{sqrt(eta^2 + theta)} * (4/pi^2) * Gamma(2 + n/2)^{4/n} * |disc|^{2/n},
// an upper bound on Tr(x^2) over minimal vectors of a reduced form.
RealInterval lem2_trace_bound(unsigned n, const Int& disc, const RealInterval& eta,
                              const RealInterval& theta, mpfr_prec_t prec);

// (4/pi^2) * Gamma(2 + n/2)^{4/n} * |disc|^{2/n}, an upper bound on
// mu(a) * mu(a^{-1}) for totally positive a.
RealInterval mu_product_bound(unsigned n, const Int& disc, mpfr_prec_t prec);

// Class-count bound e^{c sqrt(eta^2 + t)} * |disc| * (2/pi)^{2n} *
// Gamma(2 + n/2)^4 where c is 1 (Stated) or n (Proof) and t is theta
// (theorem 1) or rho (theorem 2).
RealInterval class_count_bound(unsigned n, const Int& disc, const RealInterval& regulator,
                               const Reducibility& red, int theorem,
                               ExponentVariant exponent_variant, EtaVariant eta_variant,
                               mpfr_prec_t prec);

struct BoundReport {
    unsigned n = 0;
    Int abs_disc;
    RealInterval regulator;
    bool unit_reducible = false;
    EtaVariant eta_variant = EtaVariant::Abstract;
    ExponentVariant exponent_variant = ExponentVariant::Proof; // display preference only

    RealInterval gamma_upper;
    std::optional<RealInterval> lambda1; // present for n >= 3
    RealInterval a_bound;
    RealInterval a_used; // 1 if unit reducible, else a_bound clamped to >= 1
    RealInterval eta;
    std::string eta_case; // "unit-reducible" | "small-degree" | "large-degree"
    RealInterval theta;
    RealInterval rho;
    RealInterval lem2_trace;
    RealInterval mu_product;
    RealInterval thm1_stated;
    RealInterval thm1_proof;
    RealInterval thm2_stated;
    RealInterval thm2_proof;
};

BoundReport make_bound_report(unsigned n, const Int& disc, const RealInterval& regulator,
                              bool unit_reducible, EtaVariant eta_variant, mpfr_prec_t prec,
                              ExponentVariant exponent_variant = ExponentVariant::Proof);

} // namespace punar
