#include "punar/quadform.hpp"

#include "punar/errors.hpp"

#include <algorithm>

namespace punar {

namespace {

struct FpState {
    const QMatrix* l;
    const RatVec* d;
    size_t n;
    Rat bound;
    size_t max_results;
    std::vector<std::pair<IntVec, Rat>>* out;
    IntVec c;
};

// Level i contributes d_i * (c_i + t_i)^2 with t_i = sum_{j>i} L(j,i) c_j.
void fp_descend(FpState& s, size_t i, const Rat& remaining) {
    Rat t = 0;
    for (size_t j = i + 1; j < s.n; ++j)
        if (s.c[j] != 0) t += (*s.l)(j, i) * Rat(s.c[j]);
    Int lo, hi;
    quadratic_int_range(t, remaining / (*s.d)[i], lo, hi);
    for (Int v = lo; v <= hi; ++v) {
        s.c[i] = v;
        Rat y = Rat(v) + t;
        Rat used = (*s.d)[i] * y * y;
        if (i == 0) {
            bool zero = true;
            for (const Int& x : s.c)
                if (x != 0) {
                    zero = false;
                    break;
                }
            if (zero) continue;
            // Keep one vector per +-pair: first nonzero coordinate positive.
            size_t first = 0;
            while (s.c[first] == 0) ++first;
            if (s.c[first] < 0) continue;
            if (s.out->size() >= s.max_results)
                throw LimitExceeded("quadratic form enumeration exceeded result cap");
            s.out->emplace_back(s.c, s.bound - remaining + used);
        } else {
            fp_descend(s, i - 1, remaining - used);
        }
    }
    s.c[i] = 0;
}

} // namespace

std::vector<std::pair<IntVec, Rat>> enumerate_quadratic(const QMatrix& g, const Rat& bound,
                                                        size_t max_results) {
    LDLT f = ldlt(g);
    if (!f.positive_definite) throw NotTotallyPositive("enumeration Gram is not positive definite");
    std::vector<std::pair<IntVec, Rat>> out;
    if (bound < 0 || g.rows() == 0) return out;
    FpState s{&f.l, &f.d, g.rows(), bound, max_results, &out, IntVec(g.rows())};
    fp_descend(s, g.rows() - 1, bound);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second < b.second;
        return a.first < b.first;
    });
    return out;
}

LLLResult lll_gram(QMatrix g) {
    size_t n = g.rows();
    QMatrix u = QMatrix::identity(n);
    if (n <= 1) return {g, u};

    // Gram-Schmidt data recomputed incrementally: B[i] = |b_i*|^2,
    // mu(i, j) for j < i.
    std::vector<RatVec> mu(n, RatVec(n));
    RatVec B(n);
    auto gso = [&]() {
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = 0; j < i; ++j) {
                Rat acc = g(i, j);
                for (size_t k = 0; k < j; ++k) acc -= mu[j][k] * mu[i][k] * B[k];
                mu[i][j] = acc / B[j];
            }
            Rat b = g(i, i);
            for (size_t k = 0; k < i; ++k) b -= mu[i][k] * mu[i][k] * B[k];
            B[i] = b;
            if (B[i] <= 0) throw NotTotallyPositive("LLL Gram is not positive definite");
        }
    };
    // b_i -= q b_j, applied symmetrically to the Gram and to the transform.
    auto sub_row = [&](size_t i, size_t j, const Int& q) {
        Rat qr(q);
        // g'(i, i) = g(i,i) - 2q g(i,j) + q^2 g(j,j)
        Rat gii = g(i, i) - 2 * qr * g(i, j) + qr * qr * g(j, j);
        for (size_t k = 0; k < n; ++k) {
            g(i, k) -= qr * g(j, k);
            u(i, k) -= qr * u(j, k);
        }
        for (size_t k = 0; k < n; ++k) g(k, i) = g(i, k);
        g(i, i) = gii;
    };
    auto swap_rows = [&](size_t i, size_t j) {
        for (size_t k = 0; k < n; ++k) {
            std::swap(g(i, k), g(j, k));
            std::swap(u(i, k), u(j, k));
        }
        for (size_t k = 0; k < n; ++k) {
            std::swap(g(k, i), g(k, j));
        }
    };

    gso();
    const Rat delta(3, 4);
    size_t k = 1;
    size_t guard = 0;
    while (k < n) {
        if (++guard > 100000) throw LimitExceeded("LLL failed to terminate");
        // Size-reduce b_k against b_{k-1} .. b_0.
        for (size_t j = k; j-- > 0;) {
            Rat m = mu[k][j];
            if (m > Rat(1, 2) || m < Rat(-1, 2)) {
                Rat shifted = m + Rat(1, 2);
                Int q = floor_rat(shifted);
                sub_row(k, j, q);
                gso();
            }
        }
        if (B[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1]) {
            ++k;
        } else {
            swap_rows(k, k - 1);
            gso();
            k = k > 1 ? k - 1 : 1;
        }
    }
    return {g, u};
}

} // namespace punar
