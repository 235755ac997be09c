#include "punar/number_field.hpp"

#include "punar/errors.hpp"

#include "json.hpp"

#include <cassert>
#include <fstream>

namespace punar {

// ---- FieldElement ---------------------------------------------------------

FieldElement::FieldElement(FieldPtr field, RatVec coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
    assert(field_ && coords_.size() == static_cast<size_t>(field_->degree()));
}

bool FieldElement::is_zero() const {
    for (const Rat& c : coords_)
        if (c != 0) return false;
    return true;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    RatVec r = coords_;
    for (size_t i = 0; i < r.size(); ++i) r[i] += o.coords_[i];
    return FieldElement(field_, std::move(r));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    RatVec r = coords_;
    for (size_t i = 0; i < r.size(); ++i) r[i] -= o.coords_[i];
    return FieldElement(field_, std::move(r));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    int n = field_->degree();
    RatVec r(n);
    for (int i = 0; i < n; ++i) {
        if (coords_[i] == 0) continue;
        for (int j = 0; j < n; ++j) {
            if (o.coords_[j] == 0) continue;
            Rat f = coords_[i] * o.coords_[j];
            const RatVec& m = field_->mult(i, j);
            for (int k = 0; k < n; ++k) r[k] += f * m[k];
        }
    }
    return FieldElement(field_, std::move(r));
}

FieldElement FieldElement::operator-() const {
    RatVec r = coords_;
    for (Rat& c : r) c = -c;
    return FieldElement(field_, std::move(r));
}

FieldElement FieldElement::scaled(const Rat& s) const {
    RatVec r = coords_;
    for (Rat& c : r) c *= s;
    return FieldElement(field_, std::move(r));
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw ZeroElement("inverse of zero");
    return FieldElement(field_, solve(field_->mult_matrix(*this), field_->one().coords()));
}

bool FieldElement::operator==(const FieldElement& o) const { return coords_ == o.coords_; }

RatVec FieldElement::power_coords() const { return field_->basis().apply_transposed(coords_); }

// ---- NumberField ----------------------------------------------------------

FieldElement NumberField::element(RatVec coords) const {
    return FieldElement(shared_from_this(), std::move(coords));
}

FieldElement NumberField::from_power_coords(const RatVec& power) const {
    return element(basis_inv_.apply_transposed(power));
}

FieldElement NumberField::zero() const { return element(RatVec(n_)); }

FieldElement NumberField::one() const {
    RatVec e(n_);
    e[0] = 1;
    return from_power_coords(e);
}

FieldElement NumberField::integer(long v) const { return one().scaled(Rat(v)); }

QMatrix NumberField::mult_matrix(const FieldElement& x) const {
    QMatrix m(n_, n_);
    for (int j = 0; j < n_; ++j)
        for (int i = 0; i < n_; ++i) {
            if (x.coords()[i] == 0) continue;
            const RatVec& mij = mult(i, j);
            for (int k = 0; k < n_; ++k) m(k, j) += x.coords()[i] * mij[k];
        }
    return m;
}

// ---- construction ---------------------------------------------------------

namespace {

// Power sums s_k = sum over roots of theta^k, k = 0 .. count-1, from the
// monic minimal polynomial via Newton's identities.
RatVec power_sums(const ZPoly& p, int count) {
    int n = static_cast<int>(p.size()) - 1;
    RatVec s(count);
    s[0] = n;
    for (int k = 1; k < count; ++k) {
        Rat acc = 0;
        for (int i = 1; i < k && i <= n; ++i) acc += Rat(p[n - i]) * s[k - i];
        if (k <= n) acc += Rat(k) * Rat(p[n - k]);
        s[k] = -acc;
    }
    return s;
}

// One bisection step on an isolating interval with a sign change.
void halve_root_box(const QPoly& mp, RatInterval& r) {
    if (r.width() == 0) return;
    Rat mid = r.mid();
    Rat vm = qpoly_eval(mp, mid);
    assert(vm != 0); // irrational root for degree >= 2
    Rat vlo = qpoly_eval(mp, r.lo);
    if ((vlo > 0) == (vm > 0))
        r.lo = mid;
    else
        r.hi = mid;
}

} // namespace

FieldPtr make_field(const ZPoly& min_poly, const std::optional<QMatrix>& basis,
                    const std::optional<std::vector<RatVec>>& units) {
    if (min_poly.size() < 2) throw InputError("min_poly must have degree >= 1");
    if (min_poly.back() != 1) throw InputError("min_poly must be monic");
    int n = static_cast<int>(min_poly.size()) - 1;
    if (!is_irreducible_monic(min_poly)) throw ReduciblePolynomial("min_poly factors over Q");

    auto f = std::shared_ptr<NumberField>(new NumberField());
    f->n_ = n;
    f->min_poly_ = min_poly;

    QPoly mp = qpoly_from(min_poly);
    if (n == 1) {
        Rat root = -Rat(min_poly[0]);
        f->root_boxes_.push_back(RatInterval(root, root));
    } else {
        if (sturm_chain(mp).count_real_roots() != n)
            throw NotTotallyReal("min_poly has non-real roots");
        f->root_boxes_ = isolate_real_roots(mp);
        Rat target(1, 1);
        target /= Int(1) << 32;
        for (RatInterval& b : f->root_boxes_) b = refine_root(mp, b, target);
    }

    if (basis) {
        if (basis->rows() != n || basis->cols() != n)
            throw InputError("integral_basis must be a square matrix of the field degree");
        f->basis_ = *basis;
        if (determinant(f->basis_) == 0)
            throw BasisNotUnimodular("integral_basis rows are linearly dependent");
        f->maximal_ = true;
    } else {
        f->basis_ = QMatrix::identity(n);
        f->maximal_ = (n == 1);
    }
    f->basis_inv_ = inverse(f->basis_);

    // Structure constants over the working basis.
    f->mult_.assign(static_cast<size_t>(n) * n, RatVec());
    for (int i = 0; i < n; ++i) {
        QPoly pi(f->basis_.row(i));
        qpoly_normalize(pi);
        for (int j = i; j < n; ++j) {
            QPoly pj(f->basis_.row(j));
            qpoly_normalize(pj);
            QPoly prod = qpoly_rem(qpoly_mul(pi, pj), mp);
            prod.resize(n);
            RatVec c = f->basis_inv_.apply_transposed(prod);
            f->mult_[static_cast<size_t>(i) * n + j] = c;
            f->mult_[static_cast<size_t>(j) * n + i] = std::move(c);
        }
    }

    if (basis) {
        // The Z-span must be an order: a ring containing 1.
        RatVec e0(n);
        e0[0] = 1;
        if (!is_integer_vec(f->basis_inv_.apply_transposed(e0)))
            throw BasisNotUnimodular("integral_basis does not contain 1 over Z");
        for (const RatVec& m : f->mult_)
            if (!is_integer_vec(m))
                throw BasisNotUnimodular("integral_basis is not multiplicatively closed over Z");
    }

    // Trace pairing: T = B * S * B^T with S(k, l) = Tr(theta^(k+l)).
    RatVec s = power_sums(min_poly, 2 * n - 1);
    QMatrix S(n, n);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) S(k, l) = s[k + l];
    f->trace_form_ = f->basis_ * S * f->basis_.transposed();
    f->trace_form_inv_ = inverse(f->trace_form_);
    f->basis_traces_.assign(n, Rat(0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) f->basis_traces_[i] += f->basis_(i, k) * s[k];

    Rat disc = determinant(f->trace_form_);
    if (disc.get_den() != 1 || disc <= 0)
        throw NotTotallyReal("trace pairing is not a positive integer determinant");
    f->disc_ = disc.get_num();

    if (units) {
        for (const RatVec& u : *units)
            if (u.size() != static_cast<size_t>(n))
                throw InputError("fundamental_units rows must have the field degree");
        f->units_ = *units;
    }
    return f;
}

bool is_squarefree_int(long d) {
    if (d < 1) return false;
    for (long p = 2; p * p <= d; ++p)
        if (d % (p * p) == 0) return false;
    return true;
}

FieldPtr make_quadratic_field(long d) {
    if (d < 2 || !is_squarefree_int(d))
        throw InputError("quadratic parameter must be a squarefree integer >= 2");
    ZPoly mp = {Int(-d), Int(0), Int(1)};
    QMatrix b(2, 2);
    if (d % 4 == 1) {
        b(0, 0) = 1;
        b(1, 0) = Rat(1, 2);
        b(1, 1) = Rat(1, 2);
    } else {
        b = QMatrix::identity(2);
    }
    return make_field(mp, b);
}

// ---- element predicates ---------------------------------------------------

Rat trace(const FieldElement& x) {
    Rat t = 0;
    const RatVec& tr = x.field()->basis_traces();
    for (size_t i = 0; i < tr.size(); ++i) t += x.coords()[i] * tr[i];
    return t;
}

Rat norm(const FieldElement& x) { return determinant(x.field()->mult_matrix(x)); }

std::vector<RatInterval> embeddings(const FieldElement& x, const Rat& max_width) {
    const NumberField& K = *x.field();
    QPoly px(x.power_coords());
    qpoly_normalize(px);
    QPoly mp = qpoly_from(K.min_poly());
    std::vector<RatInterval> out;
    out.reserve(K.root_boxes().size());
    for (const RatInterval& box : K.root_boxes()) {
        RatInterval r = box;
        RatInterval v = qpoly_eval(px, r);
        while (v.width() > max_width && r.width() > 0) {
            halve_root_box(mp, r);
            v = qpoly_eval(px, r);
        }
        out.push_back(v);
    }
    return out;
}

bool is_totally_positive(const FieldElement& x) {
    if (x.is_zero()) throw ZeroElement("totally-positive test on zero");
    const NumberField& K = *x.field();
    QPoly px(x.power_coords());
    qpoly_normalize(px);
    QPoly mp = qpoly_from(K.min_poly());
    bool ambiguous = false;
    for (const RatInterval& box : K.root_boxes()) {
        RatInterval r = box;
        RatInterval v = qpoly_eval(px, r);
        int tries = 0;
        while (v.contains_zero() && r.width() > 0 && tries < 40) {
            halve_root_box(mp, r);
            v = qpoly_eval(px, r);
            ++tries;
        }
        if (v.sign() < 0) return false;
        if (v.sign() == 0) ambiguous = true;
    }
    if (!ambiguous) return true;
    // Exact fallback.  The multiplication matrix of x has characteristic
    // polynomial with all roots real (the embeddings of x, with
    // multiplicity); all roots are positive iff the coefficient signs
    // alternate strictly.
    QPoly cp = characteristic_polynomial(K.mult_matrix(x));
    int n = K.degree();
    for (int k = 0; k <= n; ++k) {
        int want = ((n - k) % 2 == 0) ? 1 : -1;
        int got = cp[k] > 0 ? 1 : (cp[k] < 0 ? -1 : 0);
        if (got != want) return false;
    }
    return true;
}

// ---- field description files ----------------------------------------------

namespace {

using nlohmann::json;

Int int_from_json(const json& v, const char* what) {
    if (v.is_number_integer()) return Int(static_cast<long>(v.get<long long>()));
    if (v.is_number_unsigned()) return Int(static_cast<unsigned long>(v.get<unsigned long long>()));
    if (v.is_string()) {
        try {
            return Int(v.get<std::string>());
        } catch (const std::invalid_argument&) {
            throw InputError(std::string(what) + ": malformed integer string");
        }
    }
    throw InputError(std::string(what) + " entries must be integers or integer strings");
}

Rat rat_from_json(const json& v, const char* what) {
    if (v.is_number_integer()) return Rat(static_cast<long>(v.get<long long>()));
    if (v.is_number_unsigned()) return Rat(static_cast<unsigned long>(v.get<unsigned long long>()));
    if (v.is_string()) return parse_rational(v.get<std::string>());
    throw InputError(std::string(what) + " entries must be integers or \"p/q\" strings");
}

} // namespace

FieldDescription load_field_description(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open field file: " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw InputError(std::string("field file is not valid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("min_poly") || !j["min_poly"].is_array())
        throw InputError("field file must be a JSON object with a min_poly array");

    FieldDescription d;
    for (const json& c : j["min_poly"]) d.min_poly.push_back(int_from_json(c, "min_poly"));

    if (j.contains("integral_basis")) {
        const json& rows = j["integral_basis"];
        if (!rows.is_array() || rows.empty() || !rows[0].is_array())
            throw InputError("integral_basis must be an array of rows");
        size_t n = rows.size();
        QMatrix b(static_cast<int>(n), static_cast<int>(rows[0].size()));
        for (size_t i = 0; i < n; ++i) {
            if (rows[i].size() != rows[0].size())
                throw InputError("integral_basis rows must have equal length");
            for (size_t k = 0; k < rows[i].size(); ++k)
                b(static_cast<int>(i), static_cast<int>(k)) =
                    rat_from_json(rows[i][k], "integral_basis");
        }
        d.basis = std::move(b);
    }

    if (j.contains("fundamental_units")) {
        const json& rows = j["fundamental_units"];
        if (!rows.is_array()) throw InputError("fundamental_units must be an array of rows");
        std::vector<RatVec> units;
        for (const json& row : rows) {
            if (!row.is_array()) throw InputError("fundamental_units rows must be arrays");
            RatVec u;
            for (const json& c : row) u.push_back(rat_from_json(c, "fundamental_units"));
            units.push_back(std::move(u));
        }
        d.units = std::move(units);
    }
    return d;
}

FieldPtr field_from_description(const FieldDescription& d) {
    return make_field(d.min_poly, d.basis, d.units);
}

} // namespace punar
