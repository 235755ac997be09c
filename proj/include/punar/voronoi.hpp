#pragma once

#include "punar/form_minima.hpp"
#include "punar/number_field.hpp"
#include "punar/unit_lattice.hpp"

#include <string>
#include <vector>

namespace punar {

// Rank of the Q-span of the squares of the minimal vectors.  The form is
// perfect exactly when this equals the field degree.
int perfection_rank(const FieldPtr& field, const MinimaRecord& m);
bool is_perfect(const FieldElement& a, const MinimaRecord& m);
bool is_perfect(const FieldElement& a);

// Walks from the form 1 to a perfect form, restoring one rank per step by
// moving along a direction that keeps all current minimal vectors minimal.
FieldElement initial_perfect_form(const FieldPtr& field);

// Facet of the cone spanned by the squares of the minimal vectors.
// functional is the trace-dual element c: Tr(c*x^2) >= 0 on all minimal
// vectors, with equality exactly on the facet's rays.  dual_vector is the
// primitive integer functional acting on square coordinates by dot product.
struct Facet {
    FieldElement functional;
    RatVec dual_vector;
    std::vector<size_t> rays; // indices into the minima representatives
};
// Facets of a perfect form's cone, sorted by dual_vector.  Throws
// NotFullDimensional when the squares do not span.
std::vector<Facet> compute_facets(const FieldElement& a, const MinimaRecord& m);

// The perfect form across the given facet: a + t*c for the exact smallest
// t > 0 at which a new minimal vector appears.  Shares the facet's rays.
FieldElement neighbor(const FieldElement& a, const MinimaRecord& m, const Facet& f);

// Canonical representative of the homothety class of a: unit-square
// reduction, positive rational rescale to primitive integer coordinates,
// then a deterministic exponent-box tie-break by (trace, coordinates).
struct CanonicalForm {
    FieldElement rep;
    std::string key;
};
CanonicalForm canonical_form(const LogUnitLattice& lat, const FieldElement& a);

struct PerfectClass {
    FieldElement rep;
    std::string key;
    MinimaRecord minima;
    Rat scaled_min;            // minimum^degree / norm
    std::vector<RatVec> facet_duals;
    size_t facet_count = 0;
    Rat max_vector_trace_sq;   // max Tr(x^2) over minimal vectors
    Int max_vector_norm;       // max |Nm(x)| over minimal vectors
};

struct EnumerationReport {
    FieldPtr field;
    std::vector<PerfectClass> classes;
    size_t edge_count = 0;
    size_t visited_forms = 0;
    bool complete = true;            // false when max_classes stopped the walk
    bool unit_reducible_observed = true;
    Int max_minimal_norm = 1;        // empirical reducibility constant
    std::vector<std::string> anomalies;
};

// Breadth-first closure of the Voronoi neighbor graph starting from
// initial_perfect_form.  Classes are keyed canonically with an exact
// unit-equivalence fallback; the traversal is deterministic.
EnumerationReport enumerate_perfect_classes(const FieldPtr& field, const LogUnitLattice& lat,
                                            size_t max_classes = 100000);

// True when all pairs of enumerated class cones have disjoint interiors
// (exact LP on the facet inequalities).  Appends an anomaly per violation.
bool interior_disjointness_check(EnumerationReport& report);

} // namespace punar
