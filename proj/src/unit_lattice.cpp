#include "punar/unit_lattice.hpp"

#include "punar/errors.hpp"
#include "punar/quadform.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace punar {

namespace {

void halve_box(const QPoly& mp, RatInterval& r) {
    Rat mid = r.mid();
    Rat vm = qpoly_eval(mp, mid);
    Rat vlo = qpoly_eval(mp, r.lo);
    if ((vlo > 0) == (vm > 0))
        r.lo = mid;
    else
        r.hi = mid;
}

Rat interval_mid_rat(const RealInterval& v) { return (v.lo_rat() + v.hi_rat()) / 2; }

RealInterval interval_min(const RealInterval& a, const RealInterval& b) {
    if (a.certainly_less(b)) return a;
    if (b.certainly_less(a)) return b;
    // Overlapping: enclose min pointwise.
    RealInterval r(a.precision());
    mpfr_min(r.lo().get(), a.lo().get(), b.lo().get(), MPFR_RNDD);
    mpfr_min(r.hi().get(), a.hi().get(), b.hi().get(), MPFR_RNDU);
    return r;
}

// Determinant of a small interval matrix by cofactor expansion
// (division-free, fine for rank <= 7).
RealInterval interval_det(const std::vector<std::vector<RealInterval>>& m,
                          std::vector<size_t> cols, size_t row, mpfr_prec_t prec) {
    if (cols.empty()) return RealInterval(Rat(1), prec);
    RealInterval acc(prec);
    for (size_t k = 0; k < cols.size(); ++k) {
        std::vector<size_t> rest;
        for (size_t t = 0; t < cols.size(); ++t)
            if (t != k) rest.push_back(cols[t]);
        RealInterval sub = interval_det(m, rest, row + 1, prec);
        RealInterval term = m[row][cols[k]] * sub;
        acc = (k % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

std::optional<Rat> nth_root_exact(const Rat& q, int n) {
    if (q <= 0) return std::nullopt;
    Int rn, rd;
    int en = mpz_root(rn.get_mpz_t(), q.get_num().get_mpz_t(), static_cast<unsigned long>(n));
    int ed = mpz_root(rd.get_mpz_t(), q.get_den().get_mpz_t(), static_cast<unsigned long>(n));
    if (!en || !ed) return std::nullopt;
    Rat r(rn, rd);
    r.canonicalize();
    return r;
}

bool is_unit_of_order(const FieldElement& u) {
    if (u.is_zero()) return false;
    RatVec cp = characteristic_polynomial(u.field()->mult_matrix(u));
    for (const Rat& c : cp)
        if (c.get_den() != 1) return false;
    return abs(cp[0]) == 1;
}

} // namespace

std::vector<RealInterval> log_embedding(const FieldElement& x, mpfr_prec_t prec) {
    if (x.is_zero()) throw ZeroElement("log embedding of zero");
    const NumberField& K = *x.field();
    QPoly px(x.power_coords());
    qpoly_normalize(px);
    QPoly mp = qpoly_from(K.min_poly());
    Int scale = Int(1) << static_cast<unsigned long>(prec + 8);
    std::vector<RealInterval> out;
    out.reserve(K.root_boxes().size());
    for (const RatInterval& box : K.root_boxes()) {
        RatInterval r = box;
        RatInterval v = qpoly_eval(px, r);
        long guard = 0;
        while (r.width() > 0) {
            if (!v.contains_zero()) {
                Rat alo = v.lo > 0 ? v.lo : -v.hi;
                if (v.width() * scale <= alo) break;
            }
            halve_box(mp, r);
            v = qpoly_eval(px, r);
            if (++guard > 100000) throw PrecisionExhausted("log embedding refinement stalled");
        }
        if (v.contains_zero()) throw PrecisionExhausted("embedding not separated from zero");
        RatInterval av = v.lo > 0 ? v : RatInterval(-v.hi, -v.lo);
        out.push_back(RealInterval(av.lo, av.hi, prec + 32).log());
    }
    return out;
}

// ---- quadratic fundamental unit via the continued fraction of omega -------

FieldElement quadratic_fundamental_unit(const FieldPtr& field) {
    const ZPoly& mp = field->min_poly();
    if (field->degree() != 2 || mp[1] != 0)
        throw InputError("continued fraction units require a field given as x^2 - d");
    Int d = -mp[0];
    assert(d >= 2);

    // omega = sqrt(d) or (1 + sqrt(d))/2, matching the working basis.
    Int P = 0, Q = 1;
    if (d % 4 == 1) {
        P = 1;
        Q = 2;
    }
    struct M2 {
        Int a, b, c, d;
    };
    std::vector<M2> ms; // ms[k] encloses the product of the first k partial quotients
    ms.push_back({1, 0, 0, 1});
    std::map<std::pair<Int, Int>, size_t> seen;
    seen[{P, Q}] = 0;
    M2 cur = ms[0];
    for (size_t k = 0;; ++k) {
        if (k > 200000) throw LimitExceeded("continued fraction period search too long");
        if (Q <= 0) throw PrecisionExhausted("continued fraction state degenerated");
        Int a = floor_add_sqrt(P, d, Q);
        cur = M2{cur.a * a + cur.b, cur.a, cur.c * a + cur.d, cur.c};
        ms.push_back(cur);
        Int P1 = a * Q - P;
        Int Q1 = (d - P1 * P1) / Q;
        P = P1;
        Q = Q1;
        auto it = seen.find({P, Q});
        if (it != seen.end()) {
            const M2& mj = ms[it->second];
            Int det = mj.a * mj.d - mj.b * mj.c; // +-1
            M2 inv{mj.d * det, -mj.b * det, -mj.c * det, mj.a * det};
            M2 nmat{cur.a * inv.a + cur.b * inv.c, cur.a * inv.b + cur.b * inv.d,
                    cur.c * inv.a + cur.d * inv.c, cur.c * inv.b + cur.d * inv.d};
            // nmat fixes omega; the unit is c*omega + d over the basis {1, omega}.
            FieldElement eps = field->element({Rat(nmat.d), Rat(nmat.c)});
            if (!is_unit_of_order(eps))
                throw NotAUnit("continued fraction produced a non-unit");
            return eps;
        }
        seen[{P, Q}] = k + 1;
    }
}

// ---- lattice assembly -------------------------------------------------------

namespace {

std::vector<RealInterval> successive_minima(const LogUnitLattice& lat, bool frame) {
    size_t r = lat.units.size();
    size_t cols = frame ? r : lat.logs[0].size();
    QMatrix proxy(r, cols);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < cols; ++j) proxy(i, j) = interval_mid_rat(lat.logs[i][j]);
    QMatrix gram = proxy * proxy.transposed();
    LLLResult red = lll_gram(gram);
    Rat radius = 0;
    for (size_t i = 0; i < r; ++i) radius = std::max(radius, red.gram(i, i));
    auto vecs = enumerate_quadratic(red.gram, radius);

    std::vector<IntVec> picked;
    std::vector<RealInterval> out;
    for (const auto& [c, value] : vecs) {
        IntVec e(r);
        for (size_t k = 0; k < r; ++k) {
            Rat acc = 0;
            for (size_t i = 0; i < r; ++i) acc += Rat(c[i]) * red.transform(i, k);
            assert(acc.get_den() == 1);
            e[k] = acc.get_num();
        }
        QMatrix trial(picked.size() + 1, r);
        for (size_t i = 0; i < picked.size(); ++i)
            for (size_t k = 0; k < r; ++k) trial(i, k) = Rat(picked[i][k]);
        for (size_t k = 0; k < r; ++k) trial(picked.size(), k) = Rat(e[k]);
        if (rank_profile(trial).rank != picked.size() + 1) continue;
        picked.push_back(e);
        // Certified norm from the interval log matrix.
        RealInterval n2(lat.prec);
        for (size_t j = 0; j < cols; ++j) {
            RealInterval coord(lat.prec);
            for (size_t i = 0; i < r; ++i)
                if (e[i] != 0) coord = coord + lat.logs[i][j] * RealInterval(Rat(e[i]), lat.prec);
            n2 = n2 + coord * coord;
        }
        out.push_back(n2.sqrt());
        if (picked.size() == r) break;
    }
    if (out.size() != r) throw DependentUnits("could not realize all successive minima");
    return out;
}

} // namespace

LogUnitLattice build_log_lattice(const FieldPtr& field, mpfr_prec_t prec) {
    LogUnitLattice lat;
    lat.field = field;
    int n = field->degree();
    int r = n - 1;
    if (r == 0) {
        lat.prec = prec;
        lat.regulator = RealInterval(Rat(1), prec);
        return lat;
    }

    if (field->supplied_units()) {
        const auto& rows = *field->supplied_units();
        if (rows.size() != static_cast<size_t>(r))
            throw WrongCount("need exactly degree - 1 fundamental units, got " +
                             std::to_string(rows.size()));
        for (const RatVec& u : rows) lat.units.push_back(field->element(u));
    } else if (n == 2) {
        lat.units.push_back(quadratic_fundamental_unit(field));
    } else {
        throw WrongCount("fields of degree >= 3 need fundamental_units in the description");
    }

    for (const FieldElement& u : lat.units)
        if (!is_unit_of_order(u)) throw NotAUnit("supplied element has non-unit norm or is not integral");

    Rat target(1, 10000000000000L); // regulator enclosure width, 1e-13
    mpfr_prec_t p = std::max<mpfr_prec_t>(prec, 128);
    while (true) {
        lat.prec = p;
        lat.logs.clear();
        for (const FieldElement& u : lat.units) lat.logs.push_back(log_embedding(u, p));
        for (const auto& row : lat.logs) {
            RealInterval sum(p);
            for (const RealInterval& v : row) sum = sum + v;
            if (!sum.contains_zero()) throw NotAUnit("log embedding rows must sum to zero");
        }
        std::vector<size_t> cols;
        for (int j = 0; j < r; ++j) cols.push_back(static_cast<size_t>(j));
        RealInterval det = interval_det(lat.logs, cols, 0, p).abs();
        if (!det.contains_zero() && det.hi_rat() - det.lo_rat() < target) {
            lat.regulator = det;
            break;
        }
        if (p >= 8192) {
            if (det.hi_rat() < Rat(1, 1000000)) throw DependentUnits("regulator vanishes");
            throw PrecisionExhausted("regulator enclosure failed to converge");
        }
        p *= 2;
    }

    lat.minima_euclidean = successive_minima(lat, false);
    lat.minima_frame = successive_minima(lat, true);
    return lat;
}

RealInterval covering_radius_upper(const LogUnitLattice& lat) {
    size_t r = lat.units.size();
    if (r == 0) return RealInterval(Rat(0), lat.prec);
    RealInterval half_sqrt_r =
        RealInterval(Rat(static_cast<long>(r)), lat.prec).sqrt() * RealInterval(Rat(1, 2), lat.prec);
    RealInterval by_minimum = half_sqrt_r * lat.minima_frame.back();
    RealInterval by_det =
        half_sqrt_r * lat.regulator.pow(RealInterval(Rat(1, static_cast<long>(r)), lat.prec));
    return interval_min(by_minimum, by_det);
}

FieldElement unit_power_product(const LogUnitLattice& lat, const IntVec& exponents) {
    assert(exponents.size() == lat.units.size());
    FieldElement acc = lat.field->one();
    for (size_t i = 0; i < lat.units.size(); ++i) {
        Int e = exponents[i];
        if (e == 0) continue;
        FieldElement base = e > 0 ? lat.units[i] : lat.units[i].inverse();
        Int k = abs(e);
        FieldElement pw = lat.field->one();
        while (k > 0) {
            if (mpz_odd_p(k.get_mpz_t())) pw = pw * base;
            k >>= 1;
            if (k > 0) base = base * base;
        }
        acc = acc * pw;
    }
    return acc;
}

UnitReduction reduce_by_units(const LogUnitLattice& lat, const FieldElement& a) {
    if (!is_totally_positive(a)) throw NotTotallyPositive("unit reduction needs a totally positive element");
    size_t r = lat.units.size();
    if (r == 0) return {a, lat.field->one(), {}};
    size_t n = static_cast<size_t>(lat.field->degree());

    std::vector<RealInterval> la = log_embedding(a, lat.prec);
    QMatrix b(r, n);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < n; ++j) b(i, j) = interval_mid_rat(lat.logs[i][j]);
    RatVec t(n);
    for (size_t j = 0; j < n; ++j) t[j] = -interval_mid_rat(la[j]) / 2;
    RatVec bt = b.apply(t);
    RatVec x = solve(b * b.transposed(), bt);
    IntVec k0(r);
    for (size_t i = 0; i < r; ++i) k0[i] = floor_rat(x[i] + Rat(1, 2));

    bool have = false;
    UnitReduction best;
    Rat best_trace;
    IntVec off(r, -1);
    while (true) {
        IntVec k(r);
        for (size_t i = 0; i < r; ++i) k[i] = k0[i] + off[i];
        FieldElement u = unit_power_product(lat, k);
        FieldElement cand = a * u * u;
        Rat tr = trace(cand);
        if (!have || tr < best_trace ||
            (tr == best_trace && cand.coords() < best.reduced.coords())) {
            have = true;
            best = {cand, u, k};
            best_trace = tr;
        }
        size_t pos = 0;
        while (pos < r && off[pos] == 1) {
            off[pos] = -1;
            ++pos;
        }
        if (pos == r) break;
        ++off[pos];
    }
    return best;
}

std::optional<EquivalenceWitness> unit_equivalence_witness(const LogUnitLattice& lat,
                                                           const FieldElement& a,
                                                           const FieldElement& b) {
    int n = lat.field->degree();
    size_t r = lat.units.size();
    Rat na = norm(a), nb = norm(b);
    if (na <= 0 || nb <= 0) throw NotTotallyPositive("equivalence test needs totally positive elements");
    std::optional<Rat> scale = nth_root_exact(nb / na, n);
    if (!scale) return std::nullopt;

    FieldElement c = b * a.scaled(*scale).inverse();
    if (r == 0) {
        if (c == lat.field->one()) return EquivalenceWitness{lat.field->one(), *scale};
        return std::nullopt;
    }

    std::vector<RealInterval> lc = log_embedding(c, lat.prec);
    QMatrix frame(r, r);
    RatVec rhs(r);
    for (size_t j = 0; j < r; ++j) {
        rhs[j] = interval_mid_rat(lc[j]);
        for (size_t i = 0; i < r; ++i) frame(j, i) = interval_mid_rat(lat.logs[i][j]);
    }
    RatVec m = solve(frame, rhs);
    IntVec k0(r);
    for (size_t i = 0; i < r; ++i) k0[i] = floor_rat(m[i] / 2 + Rat(1, 2));

    IntVec off(r, -1);
    while (true) {
        IntVec k(r);
        for (size_t i = 0; i < r; ++i) k[i] = k0[i] + off[i];
        FieldElement u = unit_power_product(lat, k);
        if (a.scaled(*scale) * u * u == b) return EquivalenceWitness{u, *scale};
        size_t pos = 0;
        while (pos < r && off[pos] == 1) {
            off[pos] = -1;
            ++pos;
        }
        if (pos == r) break;
        ++off[pos];
    }
    return std::nullopt;
}

} // namespace punar
