#include "punar/form_minima.hpp"

#include "punar/errors.hpp"
#include "punar/quadform.hpp"

#include <cassert>

namespace punar {

TraceGram trace_gram(const FieldElement& a) {
    const NumberField& K = *a.field();
    // gram = X * T with X(i, .) = coordinates of a*w_i.
    QMatrix x = K.mult_matrix(a).transposed();
    QMatrix g = x * K.trace_form();
    if (!ldlt(g).positive_definite)
        throw NotTotallyPositive("trace form is not positive definite");
    return {a, std::move(g)};
}

MinimaRecord minimum_and_vectors(const TraceGram& g) {
    size_t n = g.gram.rows();
    // Enumerate in an LLL-reduced basis; a skewed form would otherwise
    // admit a huge search radius from its raw diagonal.
    LLLResult red = lll_gram(g.gram);
    Rat bound = red.gram(0, 0);
    for (size_t i = 1; i < n; ++i) bound = std::min(bound, red.gram(i, i));
    auto vecs = enumerate_quadratic(red.gram, bound);
    MinimaRecord rec;
    rec.minimum = vecs.front().second;
    for (const auto& [c, value] : vecs) {
        if (value != rec.minimum) break;
        RatVec rc(n);
        for (size_t i = 0; i < n; ++i) rc[i] = Rat(c[i]);
        RatVec oc = red.transform.apply_transposed(rc);
        IntVec v(n);
        for (size_t i = 0; i < n; ++i) {
            assert(oc[i].get_den() == 1);
            v[i] = Int(oc[i].get_num());
        }
        for (const Int& x : v) {
            if (x == 0) continue;
            if (x < 0)
                for (Int& y : v) y = -y;
            break;
        }
        rec.vectors.push_back(std::move(v));
    }
    std::sort(rec.vectors.begin(), rec.vectors.end());
    return rec;
}

MinimaRecord minimum_and_vectors(const FieldElement& a) { return minimum_and_vectors(trace_gram(a)); }

Rat scaled_minimum(const FieldElement& a, const Rat& minimum) {
    Rat p = 1;
    for (int i = 0; i < a.field()->degree(); ++i) p *= minimum;
    return p / norm(a);
}

Rat scaled_minimum(const FieldElement& a) {
    return scaled_minimum(a, minimum_and_vectors(a).minimum);
}

} // namespace punar
