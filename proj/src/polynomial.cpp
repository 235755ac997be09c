#include "punar/polynomial.hpp"

#include "punar/errors.hpp"
#include "punar/qmatrix.hpp"

#include <algorithm>
#include <cassert>

namespace punar {

QPoly qpoly_from(const ZPoly& p) {
    QPoly q(p.size());
    for (size_t i = 0; i < p.size(); ++i) q[i] = Rat(p[i]);
    qpoly_normalize(q);
    return q;
}

void qpoly_normalize(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int qpoly_degree(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

Rat qpoly_eval(const QPoly& p, const Rat& x) {
    Rat r = 0;
    for (size_t i = p.size(); i-- > 0;) r = r * x + p[i];
    return r;
}

RatInterval qpoly_eval(const QPoly& p, const RatInterval& x) {
    RatInterval r(Rat(0));
    for (size_t i = p.size(); i-- > 0;) r = r * x + p[i];
    return r;
}

QPoly qpoly_derivative(const QPoly& p) {
    if (p.size() <= 1) return {};
    QPoly d(p.size() - 1);
    for (size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * Rat(static_cast<long>(i));
    return d;
}

QPoly qpoly_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

QPoly qpoly_rem(QPoly a, const QPoly& b) {
    assert(!b.empty());
    while (a.size() >= b.size()) {
        Rat f = a.back() / b.back();
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        qpoly_normalize(a);
    }
    return a;
}

QPoly qpoly_monic_gcd(QPoly a, QPoly b) {
    qpoly_normalize(a);
    qpoly_normalize(b);
    while (!b.empty()) {
        QPoly r = qpoly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rat lead = a.back();
        for (Rat& c : a) c /= lead;
    }
    return a;
}

namespace {

int sign_of(const Rat& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

long variations(const std::vector<int>& signs) {
    long v = 0;
    int prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

} // namespace

SturmChain sturm_chain(const QPoly& p) {
    SturmChain c;
    QPoly p0 = p;
    qpoly_normalize(p0);
    if (p0.empty()) return c;
    c.seq.push_back(p0);
    QPoly p1 = qpoly_derivative(p0);
    while (!p1.empty()) {
        c.seq.push_back(p1);
        QPoly r = qpoly_rem(c.seq[c.seq.size() - 2], p1);
        for (Rat& x : r) x = -x;
        p1 = std::move(r);
    }
    return c;
}

long SturmChain::variations_at(const Rat& x) const {
    std::vector<int> signs;
    signs.reserve(seq.size());
    for (const QPoly& p : seq) signs.push_back(sign_of(qpoly_eval(p, x)));
    return variations(signs);
}

long SturmChain::variations_at_neg_inf() const {
    std::vector<int> signs;
    for (const QPoly& p : seq) {
        int s = sign_of(p.back());
        if (qpoly_degree(p) % 2 != 0) s = -s;
        signs.push_back(s);
    }
    return variations(signs);
}

long SturmChain::variations_at_pos_inf() const {
    std::vector<int> signs;
    for (const QPoly& p : seq) signs.push_back(sign_of(p.back()));
    return variations(signs);
}

long SturmChain::count_roots(const Rat& a, const Rat& b) const {
    return variations_at(a) - variations_at(b);
}

long SturmChain::count_roots_below(const Rat& b) const {
    return variations_at_neg_inf() - variations_at(b);
}

long SturmChain::count_real_roots() const {
    return variations_at_neg_inf() - variations_at_pos_inf();
}

Rat cauchy_root_bound(const QPoly& p) {
    assert(!p.empty());
    Rat lead = abs(p.back());
    Rat mx = 0;
    for (size_t i = 0; i + 1 < p.size(); ++i) mx = std::max(mx, Rat(abs(p[i])));
    return 1 + mx / lead;
}

std::vector<RatInterval> isolate_real_roots(const QPoly& p) {
    SturmChain chain = sturm_chain(p);
    Rat b = cauchy_root_bound(p);
    std::vector<RatInterval> done;
    std::vector<RatInterval> work{RatInterval(-b, b)};
    while (!work.empty()) {
        RatInterval iv = work.back();
        work.pop_back();
        long n = chain.count_roots(iv.lo, iv.hi);
        if (n == 0) continue;
        if (n == 1) {
            done.push_back(iv);
            continue;
        }
        Rat mid = iv.mid();
        if (qpoly_eval(p, mid) == 0)
            throw ReduciblePolynomial("rational root at " + format_rational(mid));
        work.push_back(RatInterval(iv.lo, mid));
        work.push_back(RatInterval(mid, iv.hi));
    }
    std::sort(done.begin(), done.end(),
              [](const RatInterval& a, const RatInterval& b2) { return a.lo < b2.lo; });
    return done;
}

RatInterval refine_root(const QPoly& p, RatInterval iv, const Rat& target_width) {
    int slo = sign_of(qpoly_eval(p, iv.lo));
    int shi = sign_of(qpoly_eval(p, iv.hi));
    assert(slo != 0 && shi != 0 && slo != shi);
    while (iv.width() > target_width) {
        Rat mid = iv.mid();
        int sm = sign_of(qpoly_eval(p, mid));
        if (sm == 0) throw ReduciblePolynomial("rational root hit during refinement");
        if (sm == slo)
            iv.lo = mid;
        else
            iv.hi = mid;
    }
    return iv;
}

namespace {

// ---- irreducibility over Q ----------------------------------------------

std::vector<Int> divisors_signed(const Int& v) {
    Int a = abs(v);
    std::vector<Int> divs;
    for (Int d = 1; d * d <= a; ++d) {
        if (a % d == 0) {
            divs.push_back(d);
            Int q = a / d;
            if (q != d) divs.push_back(q);
        }
    }
    size_t n = divs.size();
    for (size_t i = 0; i < n; ++i) divs.push_back(-divs[i]);
    std::sort(divs.begin(), divs.end());
    return divs;
}

bool has_integer_root(const ZPoly& p) {
    if (p[0] == 0) return true;
    for (const Int& r : divisors_signed(p[0])) {
        Int v = 0;
        for (size_t i = p.size(); i-- > 0;) v = v * r + p[i];
        if (v == 0) return true;
    }
    return false;
}

// Polynomials over F_p as integer vectors with entries in [0, p).
using PPoly = std::vector<long>;

PPoly ppoly_trim(PPoly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

PPoly ppoly_rem(PPoly a, const PPoly& b, long p) {
    long inv_lead = 1;
    {
        // Fermat inverse of b's leading coefficient.
        long base = b.back() % p, e = p - 2, acc = 1;
        while (e) {
            if (e & 1) acc = (acc * base) % p;
            base = (base * base) % p;
            e >>= 1;
        }
        inv_lead = acc;
    }
    while (a.size() >= b.size()) {
        long f = (a.back() * inv_lead) % p;
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[off + i] = ((a[off + i] - f * b[i]) % p + p) % p;
        a = ppoly_trim(std::move(a));
        if (a.empty()) break;
    }
    return a;
}

// True iff p mod q is certified irreducible over F_q by brute-force
// search over monic factors of degree <= deg/2.  Degree must be preserved
// modulo q (leading coefficient 1 always is).
bool irreducible_mod_p(const ZPoly& poly, long q) {
    size_t n = poly.size() - 1;
    PPoly f(poly.size());
    for (size_t i = 0; i < poly.size(); ++i) {
        Int r = poly[i] % q;
        long v = r.get_si();
        f[i] = ((v % q) + q) % q;
    }
    if (ppoly_trim(f).size() != poly.size()) return false; // cannot happen for monic
    for (size_t d = 1; d <= n / 2; ++d) {
        // All monic degree-d candidates, counting in base q.
        std::vector<long> cand(d + 1, 0);
        cand[d] = 1;
        long total = 1;
        for (size_t i = 0; i < d; ++i) {
            if (total > 4000000) return false; // too many to certify cheaply
            total *= q;
        }
        for (long idx = 0; idx < total; ++idx) {
            long t = idx;
            for (size_t i = 0; i < d; ++i) {
                cand[i] = t % q;
                t /= q;
            }
            if (ppoly_rem(f, cand, q).empty()) return false; // factor found: reducible mod q
        }
    }
    return true;
}

// Complete Kronecker search for a monic factor of degree d.
bool has_factor_of_degree(const ZPoly& p, size_t d) {
    // Evaluation points 0, 1, -1, 2, -2, ...
    std::vector<Int> points;
    for (long k = 0; points.size() < d + 1; ++k) {
        if (k == 0)
            points.push_back(0);
        else {
            points.push_back(k);
            if (points.size() < d + 1) points.push_back(-k);
        }
    }
    std::vector<std::vector<Int>> choices;
    for (const Int& a : points) {
        Int v = 0;
        for (size_t i = p.size(); i-- > 0;) v = v * a + p[i];
        assert(v != 0); // integer roots already excluded
        choices.push_back(divisors_signed(v));
    }
    // Enumerate divisor tuples; interpolate a candidate through
    // (points[i], w[i]); accept when it is a monic integer factor.
    std::vector<size_t> idx(d + 1, 0);
    QPoly pq = qpoly_from(p);
    while (true) {
        // Lagrange interpolation through the chosen values.
        QMatrix vand(d + 1, d + 1);
        RatVec rhs(d + 1);
        for (size_t i = 0; i <= d; ++i) {
            Rat x(points[i]);
            Rat pw = 1;
            for (size_t j = 0; j <= d; ++j) {
                vand(i, j) = pw;
                pw *= x;
            }
            rhs[i] = Rat(choices[i][idx[i]]);
        }
        RatVec g = solve(vand, rhs);
        bool monic_int = g[d] == 1;
        if (monic_int)
            for (const Rat& c : g)
                if (c.get_den() != 1) {
                    monic_int = false;
                    break;
                }
        if (monic_int) {
            QPoly gq = g;
            qpoly_normalize(gq);
            if (qpoly_degree(gq) == static_cast<int>(d) && qpoly_rem(pq, gq).empty()) return true;
        }
        // Next tuple.
        size_t pos = 0;
        while (pos <= d) {
            if (++idx[pos] < choices[pos].size()) break;
            idx[pos] = 0;
            ++pos;
        }
        if (pos > d) return false;
    }
}

} // namespace

bool is_irreducible_monic(const ZPoly& p) {
    assert(!p.empty() && p.back() == 1);
    size_t n = p.size() - 1;
    if (n <= 1) return n == 1;
    if (has_integer_root(p)) return false;
    if (n <= 3) return true; // no linear factor and degree <= 3
    // Squarefree test: gcd(p, p') must be constant.
    QPoly pq = qpoly_from(p);
    if (qpoly_degree(qpoly_monic_gcd(pq, qpoly_derivative(pq))) > 0) return false;
    for (long q : {2L, 3L, 5L, 7L, 11L, 13L})
        if (irreducible_mod_p(p, q)) return true;
    for (size_t d = 2; d <= n / 2; ++d)
        if (has_factor_of_degree(p, d)) return false;
    return true;
}

} // namespace punar
