#pragma once

// Exact dense linear algebra over the rationals: reduced row echelon form,
// null spaces, determinants, subspace intersection. Everything here is
// exact; no rounding anywhere.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "algkit/error.hpp"
#include "algkit/rational.hpp"

namespace algkit {

using QVec = std::vector<Rat>;

class QMatrix {
   public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

    static QMatrix identity(std::size_t n) {
        QMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static QMatrix from_rows(const std::vector<QVec>& rows) {
        if (rows.empty()) return QMatrix();
        QMatrix m(rows.size(), rows.front().size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_) throw DimensionMismatch("ragged row list");
            for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    static QMatrix from_columns(const std::vector<QVec>& cols) {
        QMatrix m = from_rows(cols);
        return m.transpose();
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    QVec row(std::size_t i) const { return QVec(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_); }

    QVec column(std::size_t j) const {
        QVec c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    QMatrix transpose() const {
        QMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    QMatrix operator*(const QMatrix& o) const {
        if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape mismatch");
        QMatrix p(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Rat& x = (*this)(i, k);
                if (is_zero(x)) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) p(i, j) += x * o(k, j);
            }
        return p;
    }

    QVec apply(const QVec& v) const {
        if (v.size() != cols_) throw DimensionMismatch("matrix-vector shape mismatch");
        QVec out(rows_, Rat(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!is_zero((*this)(i, j))) out[i] += (*this)(i, j) * v[j];
        return out;
    }

    bool operator==(const QMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

   private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

struct RrefResult {
    QMatrix matrix;
    std::vector<std::size_t> pivot_cols;
};

inline RrefResult rref(QMatrix m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && is_zero(m(p, c))) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        Rat inv = 1 / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || is_zero(m(i, c))) continue;
            Rat f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const QMatrix& m) { return rref(m).pivot_cols.size(); }

// Scales so the first nonzero coordinate is 1; deterministic output.
inline QVec normalize_leading(QVec v) {
    for (const Rat& x : v) {
        if (!is_zero(x)) {
            Rat inv = 1 / x;
            for (Rat& y : v) y = y * inv;
            break;
        }
    }
    return v;
}

// Basis of the right null space {x : m x = 0}, one vector per free column.
inline std::vector<QVec> kernel_basis(const QMatrix& m) {
    RrefResult rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : rr.pivot_cols) is_pivot[c] = true;
    std::vector<QVec> out;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        QVec x(m.cols(), Rat(0));
        x[f] = 1;
        for (std::size_t p = 0; p < rr.pivot_cols.size(); ++p) x[rr.pivot_cols[p]] = -rr.matrix(p, f);
        out.push_back(normalize_leading(std::move(x)));
    }
    return out;
}

inline Rat det(QMatrix m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    Rat d(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && is_zero(m(p, c))) ++p;
        if (p == n) return Rat(0);
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            d = -d;
        }
        d *= m(c, c);
        Rat inv = 1 / m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (is_zero(m(i, c))) continue;
            Rat f = m(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return d;
}

// Canonical basis of span(vectors): nonzero rows of the rref of the stack.
inline std::vector<QVec> canonical_span(const std::vector<QVec>& vectors) {
    if (vectors.empty()) return {};
    RrefResult rr = rref(QMatrix::from_rows(vectors));
    std::vector<QVec> out;
    for (std::size_t i = 0; i < rr.pivot_cols.size(); ++i) out.push_back(rr.matrix.row(i));
    return out;
}

// Exact solution of a x = b, if one exists.
inline std::optional<QVec> solve(const QMatrix& a, const QVec& b) {
    if (b.size() != a.rows()) throw DimensionMismatch("solve: rhs length mismatch");
    QMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    RrefResult rr = rref(std::move(aug));
    QVec x(a.cols(), Rat(0));
    for (std::size_t p = 0; p < rr.pivot_cols.size(); ++p) {
        if (rr.pivot_cols[p] == a.cols()) return std::nullopt;  // row [0 ... 0 | 1]
        x[rr.pivot_cols[p]] = rr.matrix(p, a.cols());
    }
    return x;
}

inline std::optional<QMatrix> inverse(const QMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    QMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    RrefResult rr = rref(std::move(aug));
    if (rr.pivot_cols.size() != n || rr.pivot_cols.back() != n - 1) return std::nullopt;
    QMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = rr.matrix(i, n + j);
    return inv;
}

inline bool span_contains(const std::vector<QVec>& basis, const QVec& v) {
    bool all_zero = true;
    for (const Rat& x : v)
        if (!is_zero(x)) all_zero = false;
    if (all_zero) return true;
    if (basis.empty()) return false;
    return solve(QMatrix::from_columns(basis), v).has_value();
}

namespace detail {

inline std::vector<QVec> intersect_two(const std::vector<QVec>& u, const std::vector<QVec>& w, std::size_t dim) {
    if (u.empty() || w.empty()) return {};
    // Kernel stacking: x in span(u) n span(w)  <=>  x = U s = W t for some s, t.
    QMatrix c(dim, u.size() + w.size());
    for (std::size_t j = 0; j < u.size(); ++j)
        for (std::size_t i = 0; i < dim; ++i) c(i, j) = u[j][i];
    for (std::size_t j = 0; j < w.size(); ++j)
        for (std::size_t i = 0; i < dim; ++i) c(i, u.size() + j) = -w[j][i];
    std::vector<QVec> vecs;
    for (const QVec& k : kernel_basis(c)) {
        QVec x(dim, Rat(0));
        for (std::size_t j = 0; j < u.size(); ++j)
            for (std::size_t i = 0; i < dim; ++i) x[i] += k[j] * u[j][i];
        vecs.push_back(std::move(x));
    }
    return canonical_span(vecs);
}

}  // namespace detail

// Basis of the intersection of the spans; empty list for the trivial
// intersection. All vectors must share one ambient dimension.
inline std::vector<QVec> intersect_subspaces(const std::vector<std::vector<QVec>>& bases) {
    if (bases.empty()) throw DimensionMismatch("intersect_subspaces: no subspaces given");
    std::size_t dim = 0;
    bool have_dim = false;
    for (const auto& basis : bases)
        for (const QVec& v : basis) {
            if (!have_dim) {
                dim = v.size();
                have_dim = true;
            } else if (v.size() != dim) {
                throw DimensionMismatch("intersect_subspaces: mixed vector dimensions");
            }
        }
    if (!have_dim) return {};  // all inputs trivial
    std::vector<QVec> acc = canonical_span(bases.front());
    for (std::size_t i = 1; i < bases.size(); ++i) {
        acc = detail::intersect_two(acc, bases[i], dim);
        if (acc.empty()) break;
    }
    return acc;
}

}  // namespace algkit
