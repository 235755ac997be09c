#include "punar/voronoi.hpp"

#include "punar/errors.hpp"
#include "punar/quadform.hpp"
#include "punar/simplex.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>

namespace punar {

namespace {

FieldElement element_from_int_vec(const FieldPtr& field, const IntVec& v) {
    RatVec c(v.size());
    for (size_t i = 0; i < v.size(); ++i) c[i] = Rat(v[i]);
    return field->element(c);
}

// Coordinates of x^2 for each minima representative (signs cancel).
std::vector<RatVec> square_coords(const FieldPtr& field, const MinimaRecord& m) {
    std::vector<RatVec> out;
    out.reserve(m.vectors.size());
    for (const IntVec& v : m.vectors) {
        FieldElement x = element_from_int_vec(field, v);
        out.push_back((x * x).coords());
    }
    return out;
}

QMatrix rows_matrix(const std::vector<RatVec>& rows, size_t cols) {
    QMatrix m(rows.size(), cols);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    return m;
}

Rat dot(const RatVec& a, const RatVec& b) {
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

} // namespace

int perfection_rank(const FieldPtr& field, const MinimaRecord& m) {
    auto sq = square_coords(field, m);
    return static_cast<int>(rank_profile(rows_matrix(sq, field->degree())).rank);
}

bool is_perfect(const FieldElement& a, const MinimaRecord& m) {
    return perfection_rank(a.field(), m) == a.field()->degree();
}

bool is_perfect(const FieldElement& a) { return is_perfect(a, minimum_and_vectors(a)); }

// ---- the Voronoi step -------------------------------------------------------

namespace {

// Exact smallest t > 0 with a new minimal vector for a + t*c, where c
// satisfies Tr(c*x^2) >= 0 for all x in M(a).  mu = mu(a).
FieldElement voronoi_step(const FieldElement& a, const Rat& mu, const FieldElement& c) {
    // Probe below the positivity boundary sup{ t : a + t*c totally
    // positive } until the minimum drops, then pull back exactly.
    const FieldPtr& field = a.field();
    Rat t_hat;
    bool found = false;
    for (int round = 1; round <= 24 && !found; ++round) {
        Rat width = Rat(1, Int(1) << static_cast<unsigned long>(16 * round));
        auto ea = embeddings(a, width);
        auto ec = embeddings(c, width);
        Rat t_lo;
        bool have_ratio = false, undecided = false;
        for (size_t i = 0; i < ec.size(); ++i) {
            if (ec[i].contains_zero()) {
                undecided = true;
                continue;
            }
            if (ec[i].sign() > 0) continue;
            Rat ratio = ea[i].lo / -ec[i].lo;
            if (!have_ratio || ratio < t_lo) {
                t_lo = ratio;
                have_ratio = true;
            }
        }
        if (!have_ratio) {
            if (undecided) continue;
            throw DegenerateDirection("walk direction has no negative embedding");
        }
        if (t_lo <= 0) continue;
        Rat shrink = Rat(1) - Rat(1, Int(1) << static_cast<unsigned long>(8 * round));
        t_hat = t_lo * shrink;
        if (t_hat <= 0) continue;
        try {
            MinimaRecord probe = minimum_and_vectors(a + c.scaled(t_hat));
            if (probe.minimum < mu) found = true;
            // Minimum still mu: a new facet-crossing vector at exactly
            // t_hat would also end the search.
            if (!found) {
                for (const IntVec& v : probe.vectors) {
                    FieldElement x = element_from_int_vec(field, v);
                    if (trace(c * x * x) < 0) return a + c.scaled(t_hat);
                }
            }
        } catch (const NotTotallyPositive&) {
            continue;
        }
    }
    if (!found) throw PrecisionExhausted("no contact point found along walk direction");

    Rat t = t_hat;
    for (size_t iter = 0;; ++iter) {
        if (iter > 50000) throw LimitExceeded("walk pull-back failed to terminate");
        MinimaRecord m = minimum_and_vectors(a + c.scaled(t));
        if (m.minimum == mu) return a + c.scaled(t);
        assert(m.minimum < mu);
        FieldElement z = element_from_int_vec(field, m.vectors.front());
        Rat num = trace(a * z * z);
        Rat den = trace(c * z * z);
        assert(den < 0 && num >= mu);
        Rat tz = (mu - num) / den;
        assert(tz >= 0 && tz < t);
        t = tz;
    }
}

} // namespace

FieldElement initial_perfect_form(const FieldPtr& field) {
    int n = field->degree();
    FieldElement a = field->one();
    for (int step = 0; step < n; ++step) {
        MinimaRecord m = minimum_and_vectors(a);
        auto sq = square_coords(field, m);
        QMatrix s = rows_matrix(sq, n);
        if (rank_profile(s).rank == static_cast<size_t>(n)) return a;
        std::vector<RatVec> kern = kernel_basis(s);
        assert(!kern.empty());
        RatVec v = primitive_scale(kern.front());
        // Trace-dual direction: Tr(c * x^2) = v . coords(x^2).
        FieldElement c = field->element(field->trace_form_inv().apply(v));
        a = voronoi_step(a, m.minimum, c);
    }
    MinimaRecord m = minimum_and_vectors(a);
    if (!is_perfect(a, m)) throw NotFullDimensional("initial walk did not reach a perfect form");
    return a;
}

// ---- facets (double description) -------------------------------------------

std::vector<Facet> compute_facets(const FieldElement& a, const MinimaRecord& m) {
    const FieldPtr& field = a.field();
    size_t n = static_cast<size_t>(field->degree());
    auto rays = square_coords(field, m);
    RankProfile prof = rank_profile(rows_matrix(rays, n));
    if (prof.rank != n) throw NotFullDimensional("cone of minimal vector squares does not span");

    // Start from the simplicial cone on the first independent rays; its
    // facet functionals are the rows of the inverse transpose.
    QMatrix base(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) base(i, j) = rays[prof.independent_rows[i]][j];
    QMatrix dual = inverse(base).transposed();
    std::vector<RatVec> facets;
    for (size_t i = 0; i < n; ++i) facets.push_back(primitive_scale(dual.row(i)));

    std::vector<size_t> inserted(prof.independent_rows.begin(), prof.independent_rows.end());
    for (size_t r = 0; r < rays.size(); ++r) {
        if (std::find(inserted.begin(), inserted.end(), r) != inserted.end()) continue;
        const RatVec& ray = rays[r];
        std::vector<RatVec> pos, neg, zero;
        for (const RatVec& f : facets) {
            Rat d = dot(f, ray);
            if (d > 0)
                pos.push_back(f);
            else if (d < 0)
                neg.push_back(f);
            else
                zero.push_back(f);
        }
        if (neg.empty()) {
            inserted.push_back(r);
            continue; // ray already inside
        }
        std::vector<RatVec> next = pos;
        next.insert(next.end(), zero.begin(), zero.end());
        // Combine adjacent positive/negative pairs into new facets through
        // the ray.  Adjacency: common zero rays (among those inserted) span
        // a face of dimension n-2.
        for (const RatVec& fp : pos)
            for (const RatVec& fn : neg) {
                std::vector<RatVec> common;
                for (size_t idx : inserted) {
                    if (dot(fp, rays[idx]) == 0 && dot(fn, rays[idx]) == 0)
                        common.push_back(rays[idx]);
                }
                if (common.size() < n - 2) continue;
                if (rank_profile(rows_matrix(common, n)).rank != n - 2) continue;
                RatVec nf(n);
                Rat wp = dot(fp, ray), wn = dot(fn, ray);
                for (size_t j = 0; j < n; ++j) nf[j] = wp * fn[j] - wn * fp[j];
                nf = primitive_scale(nf);
                if (std::find(next.begin(), next.end(), nf) == next.end()) next.push_back(nf);
            }
        facets = std::move(next);
        inserted.push_back(r);
    }

    std::sort(facets.begin(), facets.end());
    std::vector<Facet> out;
    for (RatVec& f : facets) {
        Facet fac;
        fac.dual_vector = std::move(f);
        fac.functional = field->element(field->trace_form_inv().apply(fac.dual_vector));
        for (size_t i = 0; i < rays.size(); ++i) {
            Rat d = dot(fac.dual_vector, rays[i]);
            assert(d >= 0);
            if (d == 0) fac.rays.push_back(i);
        }
        out.push_back(std::move(fac));
    }
    return out;
}

FieldElement neighbor(const FieldElement& a, const MinimaRecord& m, const Facet& f) {
    return voronoi_step(a, m.minimum, f.functional);
}

// ---- canonical representatives ----------------------------------------------

namespace {

FieldElement primitive_rescale(const FieldElement& a) {
    RatVec p = primitive_scale(a.coords());
    return a.field()->element(p);
}

} // namespace

CanonicalForm canonical_form(const LogUnitLattice& lat, const FieldElement& a) {
    UnitReduction red = reduce_by_units(lat, a);
    size_t r = lat.units.size();
    long spread = r <= 4 ? 2 : 1;
    FieldElement best = primitive_rescale(red.reduced);
    Rat best_trace = trace(best);
    if (r > 0) {
        IntVec off(r, -spread);
        while (true) {
            bool all_zero = true;
            for (const Int& o : off)
                if (o != 0) all_zero = false;
            if (!all_zero) {
                FieldElement u = unit_power_product(lat, off);
                FieldElement cand = primitive_rescale(red.reduced * u * u);
                Rat tr = trace(cand);
                if (tr < best_trace || (tr == best_trace && cand.coords() < best.coords())) {
                    best = cand;
                    best_trace = tr;
                }
            }
            size_t pos = 0;
            while (pos < r && off[pos] == spread) {
                off[pos] = -spread;
                ++pos;
            }
            if (pos == r) break;
            ++off[pos];
        }
    }
    return {best, format_rat_vec(best.coords())};
}

// ---- enumeration -------------------------------------------------------------

namespace {

PerfectClass build_class(const FieldPtr& field, const CanonicalForm& canon) {
    PerfectClass cl;
    cl.rep = canon.rep;
    cl.key = canon.key;
    cl.minima = minimum_and_vectors(canon.rep);
    cl.scaled_min = scaled_minimum(canon.rep, cl.minima.minimum);
    cl.max_vector_trace_sq = 0;
    cl.max_vector_norm = 0;
    for (const IntVec& v : cl.minima.vectors) {
        FieldElement x = element_from_int_vec(field, v);
        cl.max_vector_trace_sq = std::max(cl.max_vector_trace_sq, trace(x * x));
        Rat nm = norm(x);
        assert(nm.get_den() == 1);
        cl.max_vector_norm = std::max(cl.max_vector_norm, Int(abs(nm.get_num())));
    }
    auto facets = compute_facets(canon.rep, cl.minima);
    cl.facet_count = facets.size();
    for (const Facet& f : facets) cl.facet_duals.push_back(f.dual_vector);
    return cl;
}

} // namespace

EnumerationReport enumerate_perfect_classes(const FieldPtr& field, const LogUnitLattice& lat,
                                            size_t max_classes) {
    EnumerationReport rep;
    rep.field = field;
    int n = field->degree();

    FieldElement a0 = initial_perfect_form(field);
    rep.visited_forms = 1;
    if (n == 1) {
        // Q: the single class a = 1, no facets, nothing to walk.
        CanonicalForm canon{a0, format_rat_vec(a0.coords())};
        PerfectClass cl;
        cl.rep = canon.rep;
        cl.key = canon.key;
        cl.minima = minimum_and_vectors(canon.rep);
        cl.scaled_min = scaled_minimum(canon.rep, cl.minima.minimum);
        cl.max_vector_trace_sq = 1;
        cl.max_vector_norm = 1;
        rep.classes.push_back(std::move(cl));
        return rep;
    }

    CanonicalForm canon0 = canonical_form(lat, a0);
    std::map<std::string, size_t> index;
    std::deque<size_t> queue;
    rep.classes.push_back(build_class(field, canon0));
    index[canon0.key] = 0;
    queue.push_back(0);

    while (!queue.empty()) {
        size_t ci = queue.front();
        queue.pop_front();
        // Copy what the walk needs: growing rep.classes may reallocate.
        FieldElement a = rep.classes[ci].rep;
        MinimaRecord m = rep.classes[ci].minima;
        std::vector<RatVec> duals = rep.classes[ci].facet_duals;
        for (const RatVec& dv : duals) {
            Facet f;
            f.dual_vector = dv;
            f.functional = field->element(field->trace_form_inv().apply(dv));
            FieldElement nb = neighbor(a, m, f);
            ++rep.visited_forms;
            ++rep.edge_count;
            CanonicalForm canon = canonical_form(lat, nb);
            auto it = index.find(canon.key);
            if (it != index.end()) continue;
            // The canonical key can in principle miss a unit translate;
            // fall back to exact equivalence against classes with the same
            // invariant before accepting a new class.
            bool merged = false;
            Rat sm = scaled_minimum(canon.rep);
            for (size_t k = 0; k < rep.classes.size() && !merged; ++k) {
                if (rep.classes[k].scaled_min != sm) continue;
                if (unit_equivalence_witness(lat, rep.classes[k].rep, canon.rep)) {
                    rep.anomalies.push_back("canonical key mismatch for equivalent forms: " +
                                            rep.classes[k].key + " vs " + canon.key);
                    index[canon.key] = k;
                    merged = true;
                }
            }
            if (merged) continue;
            if (rep.classes.size() >= max_classes) {
                rep.complete = false;
                queue.clear();
                break;
            }
            rep.classes.push_back(build_class(field, canon));
            index[canon.key] = rep.classes.size() - 1;
            queue.push_back(rep.classes.size() - 1);
        }
    }

    for (const PerfectClass& cl : rep.classes) {
        rep.max_minimal_norm = std::max(rep.max_minimal_norm, cl.max_vector_norm);
        if (cl.max_vector_norm > 1) rep.unit_reducible_observed = false;
    }
    return rep;
}

bool interior_disjointness_check(EnumerationReport& report) {
    bool ok = true;
    size_t n = static_cast<size_t>(report.field->degree());
    for (size_t i = 0; i < report.classes.size(); ++i)
        for (size_t j = i + 1; j < report.classes.size(); ++j) {
            const auto& fi = report.classes[i].facet_duals;
            const auto& fj = report.classes[j].facet_duals;
            QMatrix a(fi.size() + fj.size(), n);
            RatVec b(fi.size() + fj.size(), Rat(1));
            for (size_t k = 0; k < fi.size(); ++k)
                for (size_t c = 0; c < n; ++c) a(k, c) = fi[k][c];
            for (size_t k = 0; k < fj.size(); ++k)
                for (size_t c = 0; c < n; ++c) a(fi.size() + k, c) = fj[k][c];
            if (lp_feasible_point(a, b)) {
                ok = false;
                report.anomalies.push_back("cone interiors overlap for classes " +
                                           report.classes[i].key + " and " +
                                           report.classes[j].key);
            }
        }
    return ok;
}

} // namespace punar
