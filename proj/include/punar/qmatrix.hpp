#pragma once

#include "punar/rational.hpp"

#include <cstddef>
#include <vector>

namespace punar {

// Dense exact rational matrix.  Row-major; sized at construction.
class QMatrix {
public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static QMatrix identity(size_t n);
    static QMatrix from_rows(const std::vector<RatVec>& rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Rat& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Rat& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    RatVec row(size_t i) const;

    QMatrix transposed() const;
    QMatrix operator*(const QMatrix& o) const;
    RatVec apply(const RatVec& v) const;         // this * v
    RatVec apply_transposed(const RatVec& v) const; // this^T * v

    bool operator==(const QMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

private:
    size_t rows_, cols_;
    std::vector<Rat> a_;
};

Rat determinant(QMatrix m); // by value: eliminates in place

// Rank plus the first maximal independent subset of row indices, in order.
struct RankProfile {
    size_t rank = 0;
    std::vector<size_t> independent_rows;
};
RankProfile rank_profile(const QMatrix& m);

// Solves a*x = b for square a; throws SingularMatrix.
RatVec solve(QMatrix a, RatVec b);
QMatrix inverse(const QMatrix& a);

// Basis of { x : m*x = 0 }, deterministic (free columns in index order).
std::vector<RatVec> kernel_basis(const QMatrix& m);

// G = L*D*L^T for symmetric G.  positive_definite is false iff some pivot
// is <= 0, in which case factorization stops early.
struct LDLT {
    QMatrix l;     // unit lower triangular
    RatVec d;      // pivots
    bool positive_definite = false;
};
LDLT ldlt(const QMatrix& g);

// Characteristic polynomial det(xI - m), coefficients low to high,
// by Faddeev-LeVerrier.
RatVec characteristic_polynomial(const QMatrix& m);

} // namespace punar
