#pragma once

#include "punar/number_field.hpp"
#include "punar/qmatrix.hpp"

namespace punar {

// Exact Gram matrix of the trace form x -> Tr(a*x^2) over the working
// basis: gram(i, j) = Tr(a * w_i * w_j).
struct TraceGram {
    FieldElement a;
    QMatrix gram;
};
// Throws NotTotallyPositive when the form is not positive definite.
TraceGram trace_gram(const FieldElement& a);

// Minimum of the trace form over nonzero lattice vectors and all vectors
// attaining it, one representative per +-pair (first nonzero coordinate
// positive), sorted by coordinates.
struct MinimaRecord {
    Rat minimum;
    std::vector<IntVec> vectors;
};
MinimaRecord minimum_and_vectors(const TraceGram& g);
MinimaRecord minimum_and_vectors(const FieldElement& a);

// Scale and unit invariant of the form: minimum^degree / norm(a).
Rat scaled_minimum(const FieldElement& a);
Rat scaled_minimum(const FieldElement& a, const Rat& minimum);

} // namespace punar
