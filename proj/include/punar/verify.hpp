#pragma once

#include "punar/bounds.hpp"
#include "punar/unit_lattice.hpp"
#include "punar/voronoi.hpp"

#include <random>
#include <string>
#include <vector>

namespace punar {

struct CheckResult {
    std::string name;
    std::string status; // "pass" | "fail" | "skip"
    std::string detail;
};

struct VerifyOptions {
    mpfr_prec_t prec = 192;
    EtaVariant eta_variant = EtaVariant::Abstract;
    ExponentVariant exponent_variant = ExponentVariant::Proof;
    bool assume_unit_reducible = false;
    size_t max_classes = 100000;
    unsigned long seed = 0;
    size_t product_samples = 100;
    size_t unit_samples = 20;
};

struct VerifyResult {
    EnumerationReport enumeration;
    BoundReport bounds;
    Int empirical_a = 1; // max |Nm(x)| over all enumerated minimal vectors
    std::vector<CheckResult> checks;
};

// Deterministic in the rng state; always returns a totally positive element.
FieldElement random_totally_positive(const FieldPtr& field, std::mt19937_64& rng);

// Enumerates the perfect classes and runs every property suite against the
// closed-form bounds.  The class-count comparisons derive theta from the
// empirical reducibility constant unless unit reducibility is assumed.
VerifyResult run_verification(const FieldPtr& field, const LogUnitLattice& lat,
                              const VerifyOptions& opt);

// 0 all checks pass and closure complete, 3 incomplete closure, 4 any
// property failure.
int exit_code_for(const VerifyResult& r);

} // namespace punar
