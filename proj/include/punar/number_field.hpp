#pragma once

#include "punar/polynomial.hpp"
#include "punar/qmatrix.hpp"
#include "punar/rational.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace punar {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

// Element of a totally real number field, stored as rational coordinates
// over the field's working integral basis.
class FieldElement {
  public:
    FieldElement() = default;
    FieldElement(FieldPtr field, RatVec coords);

    const FieldPtr& field() const { return field_; }
    const RatVec& coords() const { return coords_; }
    bool is_zero() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement scaled(const Rat& s) const;
    FieldElement inverse() const; // throws ZeroElement on 0
    bool operator==(const FieldElement& o) const;

    // Coordinates over the power basis 1, theta, ..., theta^(n-1).
    RatVec power_coords() const;

  private:
    FieldPtr field_;
    RatVec coords_;
};

// Totally real number field Q(theta), theta a root of a monic irreducible
// integer polynomial whose roots are all real.  Immutable; share via FieldPtr.
class NumberField : public std::enable_shared_from_this<NumberField> {
  public:
    int degree() const { return n_; }
    const ZPoly& min_poly() const { return min_poly_; }
    // Rows are the working basis elements in power-basis coordinates.
    const QMatrix& basis() const { return basis_; }
    // True when the working basis is known to generate the maximal order.
    bool maximal_basis_known() const { return maximal_; }
    const Int& discriminant() const { return disc_; }
    // T(i, j) = Tr(w_i * w_j).
    const QMatrix& trace_form() const { return trace_form_; }
    const QMatrix& trace_form_inv() const { return trace_form_inv_; }
    const RatVec& basis_traces() const { return basis_traces_; }
    // Isolating intervals for the real embeddings of theta, ascending.
    const std::vector<RatInterval>& root_boxes() const { return root_boxes_; }
    // Coordinates of w_i * w_j over the working basis.
    const RatVec& mult(int i, int j) const { return mult_[static_cast<size_t>(i) * n_ + j]; }
    const std::optional<std::vector<RatVec>>& supplied_units() const { return units_; }

    FieldElement element(RatVec coords) const;
    FieldElement from_power_coords(const RatVec& power) const;
    FieldElement zero() const;
    FieldElement one() const;
    FieldElement integer(long v) const;
    // Matrix of multiplication by x over the working basis (columns are
    // the images of the basis elements).
    QMatrix mult_matrix(const FieldElement& x) const;

  private:
    friend FieldPtr make_field(const ZPoly&, const std::optional<QMatrix>&,
                               const std::optional<std::vector<RatVec>>&);
    NumberField() = default;

    int n_ = 0;
    ZPoly min_poly_;
    QMatrix basis_, basis_inv_;
    bool maximal_ = false;
    Int disc_;
    QMatrix trace_form_, trace_form_inv_;
    RatVec basis_traces_;
    std::vector<RatInterval> root_boxes_;
    std::vector<RatVec> mult_;
    std::optional<std::vector<RatVec>> units_;
};

FieldPtr make_field(const ZPoly& min_poly, const std::optional<QMatrix>& basis = std::nullopt,
                    const std::optional<std::vector<RatVec>>& units = std::nullopt);

// Real quadratic field Q(sqrt(d)) with its maximal order basis.
// Requires d >= 2 squarefree.
FieldPtr make_quadratic_field(long d);

Rat trace(const FieldElement& x);
Rat norm(const FieldElement& x);
// Exact test: every real embedding of x is > 0.  Throws ZeroElement on 0.
bool is_totally_positive(const FieldElement& x);
// Enclosures of the real embeddings of x (ordered by the root boxes),
// each of width <= max_width.
std::vector<RatInterval> embeddings(const FieldElement& x, const Rat& max_width);

bool is_squarefree_int(long d);

struct FieldDescription {
    ZPoly min_poly;
    std::optional<QMatrix> basis;
    std::optional<std::vector<RatVec>> units;
};

// Parses a field description file: JSON object with "min_poly" (integer
// coefficients, constant first, monic with the leading 1 included) and
// optional "integral_basis" / "fundamental_units" entries given as numbers
// or "p/q" strings.  Throws InputError on malformed input.
FieldDescription load_field_description(const std::string& path);
FieldPtr field_from_description(const FieldDescription& d);

} // namespace punar
