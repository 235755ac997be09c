#pragma once

#include "punar/number_field.hpp"
#include "punar/real_interval.hpp"

#include <optional>
#include <vector>

namespace punar {

// Log-embedding lattice of the unit group modulo torsion.  Rank is
// degree - 1; the row vectors logs[i][j] = log|sigma_j(units[i])| sum to
// zero across j, and the regulator is |det| of any maximal minor.
struct LogUnitLattice {
    FieldPtr field;
    std::vector<FieldElement> units; // multiplicatively independent, degree-1 of them
    mpfr_prec_t prec = 0;
    std::vector<std::vector<RealInterval>> logs; // units x embeddings
    RealInterval regulator;
    // Successive minima of the lattice under the ambient Euclidean norm on
    // all degree coordinates, and under the frame obtained by deleting the
    // last coordinate (whose basis determinant is +-regulator).
    std::vector<RealInterval> minima_euclidean;
    std::vector<RealInterval> minima_frame;
};

// log|sigma_j(x)| for all real embeddings, enclosed at roughly the given
// precision.  Throws ZeroElement on 0.
std::vector<RealInterval> log_embedding(const FieldElement& x, mpfr_prec_t prec);

// Fundamental unit of the maximal order of Q(sqrt(d)) by the continued
// fraction of sqrt(d) (or (1+sqrt(d))/2 when d = 1 mod 4).  The field must
// have been built by make_quadratic_field.
FieldElement quadratic_fundamental_unit(const FieldPtr& field);

// Assembles the lattice from the field's supplied units, or computes the
// fundamental unit for quadratic fields.  Throws WrongCount when the number
// of units is not degree - 1, NotAUnit when a supplied element is not a
// unit of the order, DependentUnits when the log vectors are dependent.
LogUnitLattice build_log_lattice(const FieldPtr& field, mpfr_prec_t prec = 192);

// Upper bound for the covering radius of the frame lattice:
// min(sqrt(r)/2 * lambda_r, sqrt(r)/2 * regulator^(1/r)) for rank r >= 1,
// zero for rank 0.
RealInterval covering_radius_upper(const LogUnitLattice& lat);

// units[0]^e_0 * ... * units[r-1]^e_{r-1}, exponents may be negative.
FieldElement unit_power_product(const LogUnitLattice& lat, const IntVec& exponents);

struct UnitReduction {
    FieldElement reduced; // a * unit^2
    FieldElement unit;
    IntVec exponents;
};
// Picks the unit square that brings the log vector of a closest to the
// all-equal direction: Babai rounding plus an exact +-1 box search, ties
// broken by (trace, coordinates).  Requires a totally positive.
UnitReduction reduce_by_units(const LogUnitLattice& lat, const FieldElement& a);

struct EquivalenceWitness {
    FieldElement unit;
    Rat scale; // b = scale * a * unit^2, scale > 0 rational
};
// Decides homothety equivalence of totally positive a, b.  Every returned
// witness is verified by exact field arithmetic.
std::optional<EquivalenceWitness> unit_equivalence_witness(const LogUnitLattice& lat,
                                                           const FieldElement& a,
                                                           const FieldElement& b);

} // namespace punar
