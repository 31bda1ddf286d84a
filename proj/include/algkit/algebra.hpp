#pragma once

// Finite-dimensional unital associative algebras over the rationals, given
// by a structure-constant table c[i][j][k] with v_i * v_j = sum_k c_ijk v_k.
// make_algebra validates the unit law and associativity exhaustively, so an
// Algebra in hand is always a genuine algebra. Everything is immutable after
// construction and safe to share across threads.

#include <cstddef>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "algkit/error.hpp"
#include "algkit/linalg.hpp"
#include "algkit/rational.hpp"

namespace algkit {

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;
class Element;

class Algebra : public std::enable_shared_from_this<Algebra> {
   public:
    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t i) const { return labels_[i]; }
    std::size_t unit_index() const { return unit_index_; }
    bool commutative() const { return commutative_; }

    const Rat& c(std::size_t i, std::size_t j, std::size_t k) const { return table_[(i * dim_ + j) * dim_ + k]; }

    // Coordinates of v_i * v_j.
    QVec basis_product(std::size_t i, std::size_t j) const {
        QVec out(dim_);
        for (std::size_t k = 0; k < dim_; ++k) out[k] = c(i, j, k);
        return out;
    }

    // Coordinates of x * y for coordinate vectors x, y.
    QVec multiply(const QVec& x, const QVec& y) const {
        QVec out(dim_, Rat(0));
        for (std::size_t i = 0; i < dim_; ++i) {
            if (is_zero(x[i])) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (is_zero(y[j])) continue;
                Rat f = x[i] * y[j];
                for (std::size_t k = 0; k < dim_; ++k)
                    if (!is_zero(c(i, j, k))) out[k] += f * c(i, j, k);
            }
        }
        return out;
    }

    Element element(QVec coords) const;
    Element basis_element(std::size_t i) const;
    Element unit() const;
    Element zero() const;

    bool same_table(const Algebra& o) const {
        return dim_ == o.dim_ && unit_index_ == o.unit_index_ && table_ == o.table_;
    }

    friend AlgebraPtr make_algebra(std::size_t dim, std::vector<std::string> labels, std::size_t unit_index,
                                   std::vector<Rat> table);

   private:
    Algebra() = default;
    std::size_t dim_ = 0;
    std::vector<std::string> labels_;
    std::size_t unit_index_ = 0;
    std::vector<Rat> table_;  // (i * dim + j) * dim + k
    bool commutative_ = false;
};

class Element {
   public:
    Element() = default;
    Element(AlgebraPtr parent, QVec coords) : parent_(std::move(parent)), coords_(std::move(coords)) {
        if (coords_.size() != parent_->dim()) throw DimensionMismatch("element coordinate length mismatch");
    }

    const AlgebraPtr& parent() const { return parent_; }
    const QVec& coords() const { return coords_; }
    const Rat& coord(std::size_t i) const { return coords_[i]; }

    bool is_zero() const {
        for (const Rat& x : coords_)
            if (!algkit::is_zero(x)) return false;
        return true;
    }

    Element operator+(const Element& o) const {
        check_parent(o);
        QVec out = coords_;
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += o.coords_[i];
        return Element(parent_, std::move(out));
    }

    Element operator-(const Element& o) const {
        check_parent(o);
        QVec out = coords_;
        for (std::size_t i = 0; i < out.size(); ++i) out[i] -= o.coords_[i];
        return Element(parent_, std::move(out));
    }

    Element operator-() const {
        QVec out = coords_;
        for (Rat& x : out) x = -x;
        return Element(parent_, std::move(out));
    }

    Element operator*(const Element& o) const {
        check_parent(o);
        return Element(parent_, parent_->multiply(coords_, o.coords_));
    }

    friend Element operator*(const Rat& c, const Element& e) {
        QVec out = e.coords_;
        for (Rat& x : out) x *= c;
        return Element(e.parent_, std::move(out));
    }

    bool operator==(const Element& o) const { return parent_.get() == o.parent_.get() && coords_ == o.coords_; }

    Element pow(unsigned long n) const;

   private:
    void check_parent(const Element& o) const {
        if (parent_.get() != o.parent_.get()) throw ParentMismatch();
    }
    AlgebraPtr parent_;
    QVec coords_;
};

inline Element mul(const Element& a, const Element& b) { return a * b; }

inline Element Algebra::element(QVec coords) const {
    return Element(shared_from_this(), std::move(coords));
}

inline Element Algebra::basis_element(std::size_t i) const {
    QVec v(dim_, Rat(0));
    v[i] = 1;
    return element(std::move(v));
}

inline Element Algebra::unit() const { return basis_element(unit_index_); }

inline Element Algebra::zero() const { return element(QVec(dim_, Rat(0))); }

inline Element Element::pow(unsigned long n) const {
    Element acc = parent_->unit();
    for (unsigned long i = 0; i < n; ++i) acc = acc * *this;
    return acc;
}

// Validates the table: the unit row/column must act as the identity and all
// basis triples must associate. Throws UnitViolation or NonAssociative.
inline AlgebraPtr make_algebra(std::size_t dim, std::vector<std::string> labels, std::size_t unit_index,
                               std::vector<Rat> table) {
    if (dim == 0) throw Error("algebra dimension must be positive");
    if (labels.size() != dim) throw DimensionMismatch("label count does not match dimension");
    if (unit_index >= dim) throw Error("unit index out of range");
    if (table.size() != dim * dim * dim) throw DimensionMismatch("structure-constant table has the wrong size");
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j)
            if (labels[i] == labels[j]) throw Error("duplicate basis label '" + labels[i] + "'");

    auto a = std::shared_ptr<Algebra>(new Algebra());
    a->dim_ = dim;
    a->labels_ = std::move(labels);
    a->unit_index_ = unit_index;
    a->table_ = std::move(table);

    for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t k = 0; k < dim; ++k) {
            Rat expect = (j == k) ? Rat(1) : Rat(0);
            if (a->c(unit_index, j, k) != expect)
                throw UnitViolation("unit law fails: 1 * v_" + std::to_string(j) + " != v_" + std::to_string(j));
            if (a->c(j, unit_index, k) != expect)
                throw UnitViolation("unit law fails: v_" + std::to_string(j) + " * 1 != v_" + std::to_string(j));
        }

    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            QVec ij = a->basis_product(i, j);
            for (std::size_t k = 0; k < dim; ++k) {
                QVec jk = a->basis_product(j, k);
                for (std::size_t m = 0; m < dim; ++m) {
                    Rat left(0), right(0);
                    for (std::size_t l = 0; l < dim; ++l) {
                        if (!is_zero(ij[l])) left += ij[l] * a->c(l, k, m);
                        if (!is_zero(jk[l])) right += jk[l] * a->c(i, l, m);
                    }
                    if (left != right) throw NonAssociative(i, j, k);
                }
            }
        }

    a->commutative_ = true;
    for (std::size_t i = 0; i < dim && a->commutative_; ++i)
        for (std::size_t j = i + 1; j < dim && a->commutative_; ++j)
            for (std::size_t k = 0; k < dim; ++k)
                if (a->c(i, j, k) != a->c(j, i, k)) {
                    a->commutative_ = false;
                    break;
                }

    return a;
}

// Matrix of left multiplication by a in the algebra basis: column k holds
// the coordinates of a * v_k.
inline QMatrix regular_matrix(const Element& a) {
    const Algebra& alg = *a.parent();
    QMatrix m(alg.dim(), alg.dim());
    for (std::size_t k = 0; k < alg.dim(); ++k) {
        QVec col(alg.dim(), Rat(0));
        for (std::size_t i = 0; i < alg.dim(); ++i) {
            if (is_zero(a.coord(i))) continue;
            for (std::size_t t = 0; t < alg.dim(); ++t)
                if (!is_zero(alg.c(i, k, t))) col[t] += a.coord(i) * alg.c(i, k, t);
        }
        for (std::size_t t = 0; t < alg.dim(); ++t) m(t, k) = col[t];
    }
    return m;
}

class Subspace {
   public:
    Subspace(AlgebraPtr parent, std::vector<Element> basis) : parent_(std::move(parent)), basis_(std::move(basis)) {
        std::vector<QVec> vecs;
        for (const Element& e : basis_) {
            if (e.parent().get() != parent_.get()) throw ParentMismatch();
            vecs.push_back(e.coords());
        }
        if (!vecs.empty() && rank(QMatrix::from_rows(vecs)) != vecs.size())
            throw Error("subspace basis is linearly dependent");
    }

    static Subspace from_coords(const AlgebraPtr& parent, const std::vector<QVec>& vecs) {
        std::vector<Element> basis;
        for (const QVec& v : vecs) basis.push_back(parent->element(v));
        return Subspace(parent, std::move(basis));
    }

    static Subspace trivial(const AlgebraPtr& parent) { return Subspace(parent, {}); }

    const AlgebraPtr& parent() const { return parent_; }
    const std::vector<Element>& basis() const { return basis_; }
    std::size_t dim() const { return basis_.size(); }
    bool is_trivial() const { return basis_.empty(); }

    std::vector<QVec> coord_basis() const {
        std::vector<QVec> out;
        for (const Element& e : basis_) out.push_back(e.coords());
        return out;
    }

    bool contains(const Element& e) const {
        if (e.parent().get() != parent_.get()) throw ParentMismatch();
        return span_contains(coord_basis(), e.coords());
    }

    bool same_span(const Subspace& o) const {
        return canonical_span(coord_basis()) == canonical_span(o.coord_basis());
    }

   private:
    AlgebraPtr parent_;
    std::vector<Element> basis_;
};

namespace detail {
inline void require_commutative(const Algebra& a, const char* op) {
    if (!a.commutative()) throw NotCommutative(op);
}
}  // namespace detail

// a is a zero divisor iff det M(a) = 0; the zero element counts as one.
inline bool is_zero_divisor(const Element& a) {
    detail::require_commutative(*a.parent(), "is_zero_divisor");
    return is_zero(det(regular_matrix(a)));
}

inline bool is_nontrivial_zero_divisor(const Element& a) { return !a.is_zero() && is_zero_divisor(a); }

inline bool is_unit(const Element& a) {
    detail::require_commutative(*a.parent(), "is_unit");
    return !is_zero(det(regular_matrix(a)));
}

// Multiplicative inverse; requires is_unit(a).
inline Element inverse(const Element& a) {
    auto sol = solve(regular_matrix(a), a.parent()->unit().coords());
    if (!sol) throw Error("element is not invertible");
    return a.parent()->element(*sol);
}

// Ann(a) = {x : x * a = 0}, the null space of M(a) in the commutative case.
inline Subspace annihilator(const Element& a) {
    detail::require_commutative(*a.parent(), "annihilator");
    return Subspace::from_coords(a.parent(), kernel_basis(regular_matrix(a)));
}

inline std::size_t nildegree(const Element& a) { return annihilator(a).dim(); }

// Nilradical as the radical of the trace form T(x, y) = trace M(x * y);
// over characteristic zero this kernel is exactly the ideal of nilpotents.
inline Subspace nilradical(const AlgebraPtr& a) {
    detail::require_commutative(*a, "nilradical");
    const std::size_t n = a->dim();
    QVec basis_trace(n, Rat(0));  // trace of M(v_l)
    for (std::size_t l = 0; l < n; ++l)
        for (std::size_t k = 0; k < n; ++k) basis_trace[l] += a->c(l, k, k);
    QMatrix gram(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rat t(0);
            for (std::size_t l = 0; l < n; ++l)
                if (!is_zero(a->c(i, j, l))) t += a->c(i, j, l) * basis_trace[l];
            gram(i, j) = t;
        }
    return Subspace::from_coords(a, kernel_basis(gram));
}

inline bool is_semisimple(const AlgebraPtr& a) { return nilradical(a).is_trivial(); }

// Span of the unit together with the nilradical; the smallest unital
// subalgebra containing every nilpotent element.
inline Subspace nil_star(const AlgebraPtr& a) {
    Subspace nil = nilradical(a);
    std::vector<QVec> vecs = nil.coord_basis();
    vecs.push_back(a->unit().coords());
    return Subspace::from_coords(a, canonical_span(vecs));
}

inline bool is_unital_nil(const AlgebraPtr& a) { return nil_star(a).dim() == a->dim(); }

// Rebuilds the algebra on a new basis (given by coordinate vectors in the
// old basis). The vector at new_unit_index must be the unit element.
inline AlgebraPtr with_basis(const AlgebraPtr& a, const std::vector<QVec>& new_basis,
                             std::vector<std::string> labels, std::size_t new_unit_index) {
    const std::size_t n = a->dim();
    if (new_basis.size() != n) throw DimensionMismatch("basis change needs dim(A) vectors");
    QMatrix p = QMatrix::from_columns(new_basis);
    auto pinv = inverse(p);
    if (!pinv) throw Error("new basis vectors are linearly dependent");
    std::vector<Rat> table;
    table.reserve(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            QVec prod = a->multiply(new_basis[i], new_basis[j]);
            QVec coords = pinv->apply(prod);
            for (std::size_t k = 0; k < n; ++k) table.push_back(coords[k]);
        }
    return make_algebra(n, std::move(labels), new_unit_index, std::move(table));
}

// Renders an element against its basis labels, e.g. "1-j" or "1/2+1/2*j".
inline std::string format_element(const Element& e) {
    const Algebra& a = *e.parent();
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const Rat& c = e.coord(i);
        if (is_zero(c)) continue;
        Rat mag = abs(c);
        bool negative = sgn(c) < 0;
        if (first) {
            if (negative) out << "-";
        } else {
            out << (negative ? "-" : "+");
        }
        bool is_unit_label = (i == a.unit_index());
        if (is_unit_label) {
            out << to_string(mag);
        } else if (mag == 1) {
            out << a.label(i);
        } else {
            out << to_string(mag) << "*" << a.label(i);
        }
        first = false;
    }
    if (first) return "0";
    return out.str();
}

}  // namespace algkit
