#include "punar/qmatrix.hpp"

#include "punar/errors.hpp"

#include <cassert>
#include <utility>

namespace punar {

QMatrix QMatrix::identity(size_t n) {
    QMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

QMatrix QMatrix::from_rows(const std::vector<RatVec>& rows) {
    if (rows.empty()) return QMatrix(0, 0);
    QMatrix m(rows.size(), rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i) {
        assert(rows[i].size() == m.cols());
        for (size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
    }
    return m;
}

RatVec QMatrix::row(size_t i) const {
    RatVec r(cols_);
    for (size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
}

QMatrix QMatrix::transposed() const {
    QMatrix t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
    assert(cols_ == o.rows_);
    QMatrix r(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const Rat& x = (*this)(i, k);
            if (x == 0) continue;
            for (size_t j = 0; j < o.cols_; ++j) r(i, j) += x * o(k, j);
        }
    return r;
}

RatVec QMatrix::apply(const RatVec& v) const {
    assert(v.size() == cols_);
    RatVec r(rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
}

RatVec QMatrix::apply_transposed(const RatVec& v) const {
    assert(v.size() == rows_);
    RatVec r(cols_);
    for (size_t i = 0; i < rows_; ++i) {
        if (v[i] == 0) continue;
        for (size_t j = 0; j < cols_; ++j) r[j] += (*this)(i, j) * v[i];
    }
    return r;
}

Rat determinant(QMatrix m) {
    assert(m.rows() == m.cols());
    size_t n = m.rows();
    Rat det = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m(piv, col) == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != col) {
            for (size_t j = col; j < n; ++j) std::swap(m(piv, j), m(col, j));
            det = -det;
        }
        det *= m(col, col);
        for (size_t i = col + 1; i < n; ++i) {
            if (m(i, col) == 0) continue;
            Rat f = m(i, col) / m(col, col);
            for (size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
        }
    }
    return det;
}

RankProfile rank_profile(const QMatrix& m) {
    RankProfile rp;
    size_t cols = m.cols();
    // Reduced rows of the basis found so far, with their pivot columns.
    std::vector<RatVec> basis;
    std::vector<size_t> pivot_col;
    for (size_t i = 0; i < m.rows(); ++i) {
        RatVec r = m.row(i);
        for (size_t b = 0; b < basis.size(); ++b) {
            size_t pc = pivot_col[b];
            if (r[pc] == 0) continue;
            Rat f = r[pc] / basis[b][pc];
            for (size_t j = 0; j < cols; ++j) r[j] -= f * basis[b][j];
        }
        size_t pc = 0;
        while (pc < cols && r[pc] == 0) ++pc;
        if (pc == cols) continue;
        basis.push_back(std::move(r));
        pivot_col.push_back(pc);
        rp.independent_rows.push_back(i);
        ++rp.rank;
        if (rp.rank == cols) {
            // Remaining rows cannot add rank.
            break;
        }
    }
    return rp;
}

RatVec solve(QMatrix a, RatVec b) {
    assert(a.rows() == a.cols() && b.size() == a.rows());
    size_t n = a.rows();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a(piv, col) == 0) ++piv;
        if (piv == n) throw SingularMatrix("solve: singular matrix");
        if (piv != col) {
            for (size_t j = col; j < n; ++j) std::swap(a(piv, j), a(col, j));
            std::swap(b[piv], b[col]);
        }
        for (size_t i = col + 1; i < n; ++i) {
            if (a(i, col) == 0) continue;
            Rat f = a(i, col) / a(col, col);
            for (size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
            b[i] -= f * b[col];
        }
    }
    RatVec x(n);
    for (size_t i = n; i-- > 0;) {
        Rat s = b[i];
        for (size_t j = i + 1; j < n; ++j) s -= a(i, j) * x[j];
        x[i] = s / a(i, i);
    }
    return x;
}

QMatrix inverse(const QMatrix& a) {
    assert(a.rows() == a.cols());
    size_t n = a.rows();
    QMatrix inv(n, n);
    for (size_t k = 0; k < n; ++k) {
        RatVec e(n);
        e[k] = 1;
        RatVec col = solve(a, e);
        for (size_t i = 0; i < n; ++i) inv(i, k) = col[i];
    }
    return inv;
}

std::vector<RatVec> kernel_basis(const QMatrix& m) {
    size_t rows = m.rows(), cols = m.cols();
    // Row-reduce a working copy to reduced echelon form.
    QMatrix w = m;
    std::vector<size_t> pivot_of_row;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && w(piv, c) == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            for (size_t j = 0; j < cols; ++j) std::swap(w(piv, j), w(r, j));
        Rat p = w(r, c);
        for (size_t j = 0; j < cols; ++j) w(r, j) /= p;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || w(i, c) == 0) continue;
            Rat f = w(i, c);
            for (size_t j = 0; j < cols; ++j) w(i, j) -= f * w(r, j);
        }
        pivot_of_row.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivot_of_row) is_pivot[c] = true;
    std::vector<RatVec> basis;
    for (size_t free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[free_c]) continue;
        RatVec v(cols);
        v[free_c] = 1;
        for (size_t i = 0; i < pivot_of_row.size(); ++i) v[pivot_of_row[i]] = -w(i, free_c);
        basis.push_back(std::move(v));
    }
    return basis;
}

LDLT ldlt(const QMatrix& g) {
    assert(g.rows() == g.cols());
    size_t n = g.rows();
    LDLT f;
    f.l = QMatrix::identity(n);
    f.d.assign(n, Rat(0));
    f.positive_definite = true;
    for (size_t j = 0; j < n; ++j) {
        Rat dj = g(j, j);
        for (size_t k = 0; k < j; ++k) dj -= f.l(j, k) * f.l(j, k) * f.d[k];
        f.d[j] = dj;
        if (dj <= 0) {
            f.positive_definite = false;
            return f;
        }
        for (size_t i = j + 1; i < n; ++i) {
            Rat v = g(i, j);
            for (size_t k = 0; k < j; ++k) v -= f.l(i, k) * f.l(j, k) * f.d[k];
            f.l(i, j) = v / dj;
        }
    }
    return f;
}

RatVec characteristic_polynomial(const QMatrix& m) {
    assert(m.rows() == m.cols());
    size_t n = m.rows();
    // Faddeev-LeVerrier: M_0 = I, c_n = 1;
    // M_k = m*M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(m*M_{k-1})/k.
    RatVec coeffs(n + 1);
    coeffs[n] = 1;
    QMatrix mk = QMatrix::identity(n);
    for (size_t k = 1; k <= n; ++k) {
        QMatrix prod = m * mk;
        Rat tr = 0;
        for (size_t i = 0; i < n; ++i) tr += prod(i, i);
        Rat ck = -tr / Rat(static_cast<long>(k));
        coeffs[n - k] = ck;
        if (k < n) {
            mk = prod;
            for (size_t i = 0; i < n; ++i) mk(i, i) += ck;
        }
    }
    return coeffs;
}

} // namespace punar
