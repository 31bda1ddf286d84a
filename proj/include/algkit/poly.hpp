#pragma once

// Polynomials in one variable z with coefficients in a commutative algebra:
// ring arithmetic (degree can drop under multiplication once the algebra has
// zero divisors), the division algorithm for unit leading coefficients, the
// factor theorem via synthetic division, the common-annihilator test for
// polynomial zero divisors, Armendariz probes, nilfactor decompositions and
// monic quadratic splitting.

#include <cmath>
#include <optional>
#include <random>
#include <vector>

#include "algkit/algebra.hpp"
#include "algkit/error.hpp"
#include "algkit/linalg.hpp"
#include "algkit/parse.hpp"
#include "algkit/qpoly.hpp"
#include "algkit/rational.hpp"
#include "algkit/structure.hpp"

namespace algkit {

class Poly {
   public:
    explicit Poly(AlgebraPtr parent) : parent_(std::move(parent)) {}

    Poly(AlgebraPtr parent, std::vector<Element> coeffs) : parent_(std::move(parent)), coeffs_(std::move(coeffs)) {
        for (const Element& c : coeffs_)
            if (c.parent().get() != parent_.get()) throw ParentMismatch();
        normalize();
    }

    static Poly constant(const Element& c) { return Poly(c.parent(), {c}); }

    static Poly monomial(const Element& c, std::size_t k) {
        std::vector<Element> v(k + 1, c.parent()->zero());
        v[k] = c;
        return Poly(c.parent(), std::move(v));
    }

    const AlgebraPtr& parent() const { return parent_; }
    const std::vector<Element>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for the zero polynomial

    Element coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : parent_->zero(); }

    Element leading() const {
        if (coeffs_.empty()) throw Error("zero polynomial has no leading coefficient");
        return coeffs_.back();
    }

    Poly operator+(const Poly& o) const {
        check_parent(o);
        std::vector<Element> out;
        std::size_t n = std::max(coeffs_.size(), o.coeffs_.size());
        for (std::size_t i = 0; i < n; ++i) out.push_back(coeff(i) + o.coeff(i));
        return Poly(parent_, std::move(out));
    }

    Poly operator-(const Poly& o) const {
        check_parent(o);
        std::vector<Element> out;
        std::size_t n = std::max(coeffs_.size(), o.coeffs_.size());
        for (std::size_t i = 0; i < n; ++i) out.push_back(coeff(i) - o.coeff(i));
        return Poly(parent_, std::move(out));
    }

    Poly operator*(const Poly& o) const {
        check_parent(o);
        if (is_zero() || o.is_zero()) return Poly(parent_);
        std::vector<Element> out(coeffs_.size() + o.coeffs_.size() - 1, parent_->zero());
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] = out[i + j] + coeffs_[i] * o.coeffs_[j];
        return Poly(parent_, std::move(out));
    }

    friend Poly operator*(const Element& c, const Poly& p) {
        std::vector<Element> out;
        for (const Element& a : p.coeffs_) out.push_back(c * a);
        return Poly(p.parent_, std::move(out));
    }

    bool operator==(const Poly& o) const { return parent_.get() == o.parent_.get() && coeffs_ == o.coeffs_; }

   private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
    void check_parent(const Poly& o) const {
        if (parent_.get() != o.parent_.get()) throw ParentMismatch();
    }
    AlgebraPtr parent_;
    std::vector<Element> coeffs_;  // low to high, trailing coefficient nonzero
};

inline Poly padd(const Poly& f, const Poly& g) { return f + g; }
inline Poly pmul(const Poly& f, const Poly& g) { return f * g; }

// f = q g + r with r = 0 or deg r < deg g; needs a unit leading coefficient.
// In the commutative setting the left and right divisions coincide and the
// pair (q, r) is unique.
inline std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g) {
    if (g.is_zero()) throw DivisionByZeroPoly();
    detail::require_commutative(*f.parent(), "divmod");
    if (!is_unit(g.leading())) throw NonUnitLeadingCoefficient();
    Element inv_lead = inverse(g.leading());
    Poly q(f.parent());
    Poly r = f;
    while (!r.is_zero() && r.degree() >= g.degree()) {
        std::size_t shift = static_cast<std::size_t>(r.degree() - g.degree());
        Element c = r.leading() * inv_lead;
        Poly term = Poly::monomial(c, shift);
        q = q + term;
        r = r - term * g;
    }
    return {std::move(q), std::move(r)};
}

inline Element peval(const Poly& f, const Element& alpha) {
    if (alpha.parent().get() != f.parent().get()) throw ParentMismatch();
    Element acc = f.parent()->zero();
    for (std::size_t i = f.coeffs().size(); i-- > 0;) {
        acc = acc * alpha + f.coeffs()[i];
        if (i == 0) break;
    }
    return acc;
}

// Synthetic division by the monic linear factor (z - alpha); exact, valid in
// any algebra. Throws NotARoot unless f(alpha) = 0.
inline Poly root_quotient(const Poly& f, const Element& alpha) {
    if (alpha.parent().get() != f.parent().get()) throw ParentMismatch();
    if (f.is_zero()) return Poly(f.parent());
    std::size_t n = f.coeffs().size();
    if (n == 1) throw NotARoot();
    std::vector<Element> g(n - 1, f.parent()->zero());
    g[n - 2] = f.coeffs()[n - 1];
    for (std::size_t k = n - 2; k >= 1; --k) g[k - 1] = f.coeffs()[k] + alpha * g[k];
    Element rem = f.coeffs()[0] + alpha * g[0];
    if (!rem.is_zero()) throw NotARoot();
    return Poly(f.parent(), std::move(g));
}

// Intersection of the coefficient annihilators: nontrivial iff f is a zero
// divisor in A[z]. The zero polynomial returns the whole algebra.
inline Subspace common_annihilator(const Poly& f) {
    detail::require_commutative(*f.parent(), "common_annihilator");
    const AlgebraPtr& a = f.parent();
    if (f.is_zero()) {
        std::vector<QVec> all;
        for (std::size_t i = 0; i < a->dim(); ++i) all.push_back(a->basis_element(i).coords());
        return Subspace::from_coords(a, all);
    }
    std::vector<std::vector<QVec>> bases;
    for (const Element& c : f.coeffs()) bases.push_back(kernel_basis(regular_matrix(c)));
    return Subspace::from_coords(a, intersect_subspaces(bases));
}

inline bool poly_is_zero_divisor(const Poly& f) { return !common_annihilator(f).is_trivial(); }

// Does the Armendariz equivalence hold for this pair: p q = 0 iff every
// pairwise coefficient product vanishes? (The reverse implication always
// holds, so a pair with p q != 0 passes vacuously.)
inline bool armendariz_pair_check(const Poly& p, const Poly& q) {
    if (p.parent().get() != q.parent().get()) throw ParentMismatch();
    detail::require_commutative(*p.parent(), "armendariz_pair_check");
    if (!(p * q).is_zero()) return true;
    for (const Element& a : p.coeffs())
        for (const Element& c : q.coeffs())
            if (!(a * c).is_zero()) return false;
    return true;
}

// ---- supported algebra shapes for nilfactor / ann_of_poly / splitting ----

namespace detail {

// Looks for a nilpotent generator whose powers together with the unit form a
// basis (the shape of the nil-number chain algebras). Returns the generator
// and the power-basis change matrix.
struct NilChain {
    Element eps;
    QMatrix powers;          // columns: eps^0 .. eps^{n-1} in algebra coordinates
    QMatrix powers_inverse;  // coordinates relative to the power basis
};

inline std::optional<NilChain> nil_chain_form(const AlgebraPtr& a) {
    const std::size_t n = a->dim();
    for (std::size_t cand = 0; cand < n; ++cand) {
        if (cand == a->unit_index()) continue;
        Element eps = a->basis_element(cand);
        std::vector<QVec> pow_coords;
        Element p = a->unit();
        bool ok = true;
        for (std::size_t k = 0; k < n; ++k) {
            pow_coords.push_back(p.coords());
            p = p * eps;
        }
        if (!p.is_zero()) ok = false;  // eps^n must vanish
        if (!ok) continue;
        QMatrix pm = QMatrix::from_columns(pow_coords);
        auto inv = inverse(pm);
        if (!inv) continue;
        return NilChain{eps, pm, *inv};
    }
    return std::nullopt;
}

// eps-adic order of x: the least power index with a nonzero coordinate in
// the power basis. Requires x != 0.
inline std::size_t chain_order(const NilChain& ch, const Element& x) {
    QVec c = ch.powers_inverse.apply(x.coords());
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!is_zero(c[i])) return i;
    throw Error("chain order of zero");
}

// x / eps^t in the chain algebra (valid when the order of x is >= t).
inline Element chain_shift_down(const NilChain& ch, const Element& x, std::size_t t) {
    QVec c = ch.powers_inverse.apply(x.coords());
    for (std::size_t i = 0; i < t; ++i)
        if (!is_zero(c[i])) throw Error("element is not divisible by the requested nilpotent power");
    QVec shifted(c.size(), Rat(0));
    for (std::size_t i = t; i < c.size(); ++i) shifted[i - t] = c[i];
    return x.parent()->element(ch.powers.apply(shifted));
}

// Complete rational splitting of a commutative semisimple algebra into
// one-dimensional components: a generating element whose minimal polynomial
// has dim(A) distinct rational roots yields Lagrange idempotents.
struct RationalSplit {
    std::vector<Element> idempotents;  // orthogonal, sum to 1, each component 1-dimensional

    // Component value of x in component i (x * e_i = lambda e_i).
    Rat component(const Element& x, std::size_t i) const {
        const Element& e = idempotents[i];
        Element prod = x * e;
        for (std::size_t t = 0; t < e.coords().size(); ++t)
            if (!is_zero(e.coord(t))) return prod.coord(t) / e.coord(t);
        throw Error("zero idempotent");
    }
};

inline QPoly minimal_polynomial(const Element& a) {
    const std::size_t n = a.parent()->dim();
    std::vector<QVec> pows;
    Element p = a.parent()->unit();
    for (std::size_t k = 0; k <= n; ++k) {
        pows.push_back(p.coords());
        QMatrix m = QMatrix::from_columns(pows);
        auto ker = kernel_basis(m);
        if (!ker.empty()) {
            QPoly mp(ker.front().begin(), ker.front().end());
            qnormalize(mp);
            return qmonic(mp);
        }
        p = p * a;
    }
    throw Error("minimal polynomial not found");
}

inline std::optional<RationalSplit> rational_split(const AlgebraPtr& alg) {
    if (!alg->commutative()) return std::nullopt;
    const std::size_t n = alg->dim();
    std::vector<Element> candidates;
    for (std::size_t i = 0; i < n; ++i) candidates.push_back(alg->basis_element(i));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) candidates.push_back(alg->basis_element(i) + alg->basis_element(j));
    std::mt19937 rng(12345);
    for (int t = 0; t < 10; ++t) {
        QVec c(n);
        for (Rat& x : c) x = Rat(static_cast<long>(rng() % 7) - 3);
        candidates.push_back(alg->element(c));
    }
    for (const Element& cand : candidates) {
        QPoly mp = minimal_polynomial(cand);
        if (static_cast<std::size_t>(qdeg(mp)) != n) continue;
        bool complete = false;
        std::vector<Rat> roots = rational_roots(mp, &complete);
        if (!complete || roots.size() != n) continue;
        bool distinct = true;
        for (std::size_t i = 0; i < roots.size() && distinct; ++i)
            for (std::size_t j = i + 1; j < roots.size(); ++j)
                if (roots[i] == roots[j]) {
                    distinct = false;
                    break;
                }
        if (!distinct) continue;
        RationalSplit split;
        for (std::size_t i = 0; i < n; ++i) {
            Element e = alg->unit();
            for (std::size_t l = 0; l < n; ++l) {
                if (l == i) continue;
                Rat scale = 1 / (roots[i] - roots[l]);
                e = scale * (e * (cand - roots[l] * alg->unit()));
            }
            split.idempotents.push_back(e);
        }
        return split;
    }
    return std::nullopt;
}

}  // namespace detail

// ---- nilfactor: f = (product of algebra zero divisors) * g with g not a
// zero divisor ----

struct NilFactorization {
    std::vector<Element> factors;
    Poly reduced;
    NilFactorization(std::vector<Element> f, Poly g) : factors(std::move(f)), reduced(std::move(g)) {}
};

inline NilFactorization nilfactor(const Poly& f) {
    detail::require_commutative(*f.parent(), "nilfactor");
    if (f.is_zero()) throw NotAZeroDivisor();
    if (!poly_is_zero_divisor(f)) throw NotAZeroDivisor();
    const AlgebraPtr& a = f.parent();

    if (auto chain = detail::nil_chain_form(a)) {
        std::size_t t = a->dim();
        for (const Element& c : f.coeffs())
            if (!c.is_zero()) t = std::min(t, detail::chain_order(*chain, c));
        std::vector<Element> out_coeffs;
        for (const Element& c : f.coeffs())
            out_coeffs.push_back(c.is_zero() ? a->zero() : detail::chain_shift_down(*chain, c, t));
        Poly g(a, std::move(out_coeffs));
        std::vector<Element> factors(t, chain->eps);
        Poly check = g;
        for (std::size_t i = 0; i < t; ++i) check = chain->eps * check;
        if (!(check == f)) throw Error("internal: nilfactor content extraction failed");
        if (poly_is_zero_divisor(g)) throw Error("internal: nilfactor left a zero divisor");
        return NilFactorization(std::move(factors), std::move(g));
    }

    if (auto split = detail::rational_split(a)) {
        const std::size_t comps = split->idempotents.size();
        std::vector<bool> alive(comps, false);
        for (const Element& c : f.coeffs())
            for (std::size_t i = 0; i < comps; ++i)
                if (!is_zero(split->component(c, i))) alive[i] = true;
        Element eps = a->zero();
        for (std::size_t i = 0; i < comps; ++i)
            if (alive[i]) eps = eps + split->idempotents[i];
        if (eps == a->unit()) throw Error("internal: zero divisor with no dead component");
        // g: divide alive components, set the constant coefficient to 1 on
        // dead components so g has no vanishing component.
        std::vector<Element> gc;
        for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
            Element c = a->zero();
            for (std::size_t i = 0; i < comps; ++i) {
                if (alive[i])
                    c = c + split->component(f.coeffs()[k], i) * split->idempotents[i];
                else if (k == 0)
                    c = c + split->idempotents[i];
            }
            gc.push_back(c);
        }
        Poly g(a, std::move(gc));
        if (!(eps * g == f)) throw Error("internal: idempotent content extraction failed");
        if (poly_is_zero_divisor(g)) throw Error("internal: nilfactor left a zero divisor");
        return NilFactorization({eps}, std::move(g));
    }

    throw UnsupportedAlgebra("nilfactor supports nil-chain algebras and rationally split semisimple algebras");
}

// Generator description of Ann(f) = Ann(eps) A[z].
struct PolyAnnihilator {
    Element generator;  // eps with Ann(f) = Ann(eps) A[z]; the unit when f is not a zero divisor
    Subspace ann;       // Ann(generator) in the coefficient algebra
};

inline PolyAnnihilator ann_of_poly(const Poly& f) {
    detail::require_commutative(*f.parent(), "ann_of_poly");
    const AlgebraPtr& a = f.parent();
    if (!f.is_zero() && !poly_is_zero_divisor(f)) return {a->unit(), Subspace::trivial(a)};
    NilFactorization nf = nilfactor(f);
    Element eps = a->unit();
    for (const Element& e : nf.factors) eps = eps * e;
    return {eps, annihilator(eps)};
}

// ---- monic quadratic splitting: f = (z + alpha)(z + beta) ----

struct MonicSplit {
    bool exact;
    Element alpha, beta;                          // valid when exact
    std::vector<double> alpha_approx, beta_approx;  // always filled
};

namespace detail {

inline std::optional<MonicSplit> split_via_rational_components(const Poly& f, const RationalSplit& split) {
    const AlgebraPtr& a = f.parent();
    const std::size_t comps = split.idempotents.size();
    Element b = f.coeff(1), c = f.coeff(0);
    std::vector<Rat> alpha_c(comps), beta_c(comps);
    bool all_rational = true;
    std::vector<double> alpha_d(comps), beta_d(comps);
    for (std::size_t i = 0; i < comps; ++i) {
        Rat bi = split.component(b, i), ci = split.component(c, i);
        Rat disc = bi * bi - 4 * ci;
        if (sgn(disc) < 0) return std::nullopt;  // no real root in a real component
        auto sq = exact_sqrt(disc);
        if (sq) {
            Rat root = (-bi + *sq) / 2;
            alpha_c[i] = -root;
            beta_c[i] = bi + root;  // beta = b - alpha componentwise
            alpha_d[i] = alpha_c[i].get_d();
            beta_d[i] = beta_c[i].get_d();
        } else {
            all_rational = false;
            double root = (-bi.get_d() + std::sqrt(disc.get_d())) / 2.0;
            alpha_d[i] = -root;
            beta_d[i] = bi.get_d() + root;
        }
    }
    MonicSplit out;
    out.exact = all_rational;
    if (all_rational) {
        Element alpha = a->zero(), beta = a->zero();
        for (std::size_t i = 0; i < comps; ++i) {
            alpha = alpha + alpha_c[i] * split.idempotents[i];
            beta = beta + beta_c[i] * split.idempotents[i];
        }
        Poly prod = Poly::monomial(a->unit(), 1) + Poly::constant(alpha);
        prod = prod * (Poly::monomial(a->unit(), 1) + Poly::constant(beta));
        if (!(prod == f)) throw Error("internal: exact split does not multiply back");
        out.alpha = alpha;
        out.beta = beta;
    }
    // witnesses as approximate algebra coordinates
    out.alpha_approx.assign(a->dim(), 0.0);
    out.beta_approx.assign(a->dim(), 0.0);
    for (std::size_t i = 0; i < comps; ++i)
        for (std::size_t t = 0; t < a->dim(); ++t) {
            double e = split.idempotents[i].coord(t).get_d();
            out.alpha_approx[t] += alpha_d[i] * e;
            out.beta_approx[t] += beta_d[i] * e;
        }
    return out;
}

inline std::vector<double> dmultiply(const Algebra& a, const std::vector<double>& x, const std::vector<double>& y) {
    std::vector<double> out(a.dim(), 0.0);
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (x[i] == 0.0) continue;
        for (std::size_t j = 0; j < a.dim(); ++j) {
            if (y[j] == 0.0) continue;
            double f = x[i] * y[j];
            for (std::size_t k = 0; k < a.dim(); ++k) out[k] += f * a.c(i, j, k).get_d();
        }
    }
    return out;
}

// Exact Newton lifting in a nil-chain algebra: solve t^2 + b t + c = 0
// starting from a simple rational root of the residue quadratic mod Nil.
inline std::optional<MonicSplit> split_via_nil_chain(const Poly& f, const NilChain& chain) {
    const AlgebraPtr& a = f.parent();
    Element b = f.coeff(1), c = f.coeff(0);
    // the residue mod Nil is the constant coordinate in the power basis
    QVec bc = chain.powers_inverse.apply(b.coords());
    QVec cc = chain.powers_inverse.apply(c.coords());
    Rat b0 = bc[0], c0 = cc[0];
    Rat disc = b0 * b0 - 4 * c0;
    if (sgn(disc) < 0) return std::nullopt;
    if (sgn(disc) == 0) throw NonSimpleBaseRoot();
    auto sq = exact_sqrt(disc);
    if (!sq) {
        // simple real but irrational base root: double-precision Newton lift
        const std::size_t n = a->dim();
        double r = (-b0.get_d() + std::sqrt(disc.get_d())) / 2.0;
        std::vector<double> bd(n), cd(n), t(n, 0.0), unitv(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            bd[i] = b.coord(i).get_d();
            cd[i] = c.coord(i).get_d();
        }
        unitv[a->unit_index()] = 1.0;
        for (std::size_t i = 0; i < n; ++i) t[i] = r * unitv[i];
        for (std::size_t iter = 0; iter < n + 4; ++iter) {
            std::vector<double> val = dmultiply(*a, t, t);
            std::vector<double> bt = dmultiply(*a, bd, t);
            for (std::size_t i = 0; i < n; ++i) val[i] += bt[i] + cd[i];
            // deriv = 2t + b, inverted through its regular matrix
            std::vector<double> deriv(n);
            for (std::size_t i = 0; i < n; ++i) deriv[i] = 2.0 * t[i] + bd[i];
            DMatrix m(n, std::vector<double>(n, 0.0));
            for (std::size_t k = 0; k < n; ++k) {
                std::vector<double> ek(n, 0.0);
                ek[k] = 1.0;
                std::vector<double> col = dmultiply(*a, deriv, ek);
                for (std::size_t i = 0; i < n; ++i) m[i][k] = col[i];
            }
            std::vector<double> step = dmat_apply(dmat_inverse(m), val);
            for (std::size_t i = 0; i < n; ++i) t[i] -= step[i];
        }
        MonicSplit out;
        out.exact = false;
        out.alpha_approx.assign(n, 0.0);
        out.beta_approx.assign(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            out.alpha_approx[i] = -t[i];
            out.beta_approx[i] = bd[i] + t[i];
        }
        return out;
    }
    Rat r0 = (-b0 + *sq) / 2;
    Element t = r0 * a->unit();
    // Newton: t <- t - (t^2 + b t + c) / (2 t + b); the derivative is a unit
    // because its residue 2 r0 + b0 = sqrt(disc) != 0.
    for (std::size_t iter = 0; iter <= a->dim() + 2; ++iter) {
        Element val = t * t + b * t + c;
        if (val.is_zero()) break;
        Element deriv = Rat(2) * t + b;
        t = t - inverse(deriv) * val;
    }
    Element val = t * t + b * t + c;
    if (!val.is_zero()) throw Error("internal: Newton lifting did not converge");
    MonicSplit out;
    out.exact = true;
    out.alpha = -t;
    out.beta = b + t;
    Poly prod = Poly::monomial(a->unit(), 1) + Poly::constant(out.alpha);
    prod = prod * (Poly::monomial(a->unit(), 1) + Poly::constant(out.beta));
    if (!(prod == f)) throw Error("internal: lifted split does not multiply back");
    for (std::size_t i = 0; i < a->dim(); ++i) {
        out.alpha_approx.push_back(out.alpha.coord(i).get_d());
        out.beta_approx.push_back(out.beta.coord(i).get_d());
    }
    return out;
}

// Floating path through an explicit decomposition map (for the complex
// families). A complex component always splits; a real component needs a
// nonnegative discriminant up to the tolerance.
inline std::optional<MonicSplit> split_via_decomposition(const Poly& f, const DecompositionMap& dec, double tol) {
    std::vector<double> b = dec.to_components(f.coeff(1));
    std::vector<double> c = dec.to_components(f.coeff(0));
    int m = dec.signature.real_factors;
    std::vector<double> alpha(b.size(), 0.0), beta(b.size(), 0.0);
    for (int i = 0; i < m; ++i) {
        double disc = b[i] * b[i] - 4.0 * c[i];
        if (disc < -tol) return std::nullopt;
        double root = (-b[i] + std::sqrt(std::max(0.0, disc))) / 2.0;
        alpha[i] = -root;
        beta[i] = b[i] + root;
    }
    for (int k = 0; k < dec.signature.complex_factors; ++k) {
        std::size_t re = m + 2 * k, im = re + 1;
        std::complex<double> bz(b[re], b[im]), cz(c[re], c[im]);
        std::complex<double> root = (-bz + std::sqrt(bz * bz - 4.0 * cz)) / 2.0;
        alpha[re] = -root.real();
        alpha[im] = -root.imag();
        std::complex<double> bt = bz + root;
        beta[re] = bt.real();
        beta[im] = bt.imag();
    }
    MonicSplit out;
    out.exact = false;
    out.alpha_approx = dmat_apply(dec.inverse, alpha);
    out.beta_approx = dmat_apply(dec.inverse, beta);
    return out;
}

}  // namespace detail

// Returns witnesses (alpha, beta) with f = (z + alpha)(z + beta), exact when
// the component roots are rational, numeric otherwise; nullopt when no monic
// split exists. Supported parents: nil-chain algebras (exact Newton
// lifting), rationally split semisimple algebras, and any algebra with an
// explicit decomposition map.
inline std::optional<MonicSplit> monic_split_quadratic(const Poly& f, const DecompositionMap* dec = nullptr,
                                                       double tol = kMapTolerance) {
    detail::require_commutative(*f.parent(), "monic_split_quadratic");
    if (f.degree() != 2) throw Error("monic_split_quadratic needs a degree-2 polynomial");
    if (!(f.leading() == f.parent()->unit())) throw Error("monic_split_quadratic needs a monic polynomial");
    if (auto chain = detail::nil_chain_form(f.parent())) return detail::split_via_nil_chain(f, *chain);
    if (auto split = detail::rational_split(f.parent())) return detail::split_via_rational_components(f, *split);
    if (dec) return detail::split_via_decomposition(f, *dec, tol);
    throw UnsupportedAlgebra(
        "monic_split_quadratic needs a nil-chain algebra, a rationally split semisimple algebra, or a "
        "decomposition map");
}

// ---- text format: coefficients as parenthesized element expressions in
// basis labels, variable z, e.g. "(1+j)*z^2 + (2)*z + (j)" ----

inline Poly parse_poly_literal(const std::string& text, const AlgebraPtr& a) {
    detail::LabelIndex idx = detail::build_label_index(*a);
    if (idx.atoms.count("z"))
        throw Error("a basis label uses the reserved polynomial variable 'z'");
    Tokenizer tz(text);
    std::map<std::size_t, Element> acc;
    int sign = 1;
    if (tz.at_punct('+') || tz.at_punct('-')) {
        if (tz.next().text == "-") sign = -1;
    }
    while (true) {
        Rat scalar(1);
        Element factor = a->unit();
        bool any = false;
        std::size_t zexp = 0;
        bool pending_star = false;
        auto eat_star = [&] {
            if (tz.at_punct('*')) {
                tz.next();
                pending_star = true;
            } else {
                pending_star = false;
            }
        };
        if (tz.at_number()) {
            scalar = detail::parse_number(tz);
            any = true;
            eat_star();
        }
        if (tz.at_punct('(')) {
            tz.next();
            factor = detail::parse_element_sum(tz, idx, a);
            tz.expect_punct(')');
            any = true;
            eat_star();
        }
        // basis monomial factors, stopping before the variable
        Monomial mono(idx.width, 0);
        bool have_mono = false;
        while (tz.at_ident() && tz.peek().text != "z") {
            Token id = tz.next();
            auto it = idx.atoms.find(id.text);
            if (it == idx.atoms.end()) throw UnknownGenerator(id.text);
            unsigned exp = 1;
            if (tz.at_punct('^')) {
                tz.next();
                exp = static_cast<unsigned>(std::stoul(tz.expect_number().text));
            }
            mono[it->second] += exp;
            have_mono = true;
            eat_star();
            if (!pending_star) break;
        }
        if (have_mono) {
            auto it = idx.basis_lookup.find(mono);
            if (it == idx.basis_lookup.end()) tz.fail("monomial does not name a basis element of this algebra");
            factor = factor * a->basis_element(it->second);
            any = true;
        }
        if (tz.at_ident() && tz.peek().text == "z") {
            tz.next();
            zexp = 1;
            if (tz.at_punct('^')) {
                tz.next();
                zexp = std::stoul(tz.expect_number().text);
            }
            any = true;
        } else if (pending_star) {
            tz.fail("expected a factor after '*'");
        }
        if (!any) tz.fail("expected a term");
        Element coeff = (sign > 0 ? scalar : Rat(-scalar)) * factor;
        auto it = acc.find(zexp);
        if (it == acc.end())
            acc.emplace(zexp, coeff);
        else
            it->second = it->second + coeff;
        if (tz.at_punct('+') || tz.at_punct('-')) {
            sign = (tz.next().text == "-") ? -1 : 1;
            continue;
        }
        break;
    }
    tz.expect_end();
    std::size_t top = 0;
    for (const auto& [k, v] : acc) top = std::max(top, k);
    std::vector<Element> coeffs(top + 1, a->zero());
    for (const auto& [k, v] : acc) coeffs[k] = v;
    return Poly(a, std::move(coeffs));
}

inline std::string poly_to_string(const Poly& f) {
    if (f.is_zero()) return "(0)";
    std::string out;
    for (int d = f.degree(); d >= 0; --d) {
        Element c = f.coeff(static_cast<std::size_t>(d));
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + format_element(c) + ")";
        if (d >= 1) out += "*z";
        if (d >= 2) out += "^" + std::to_string(d);
    }
    return out;
}

}  // namespace algkit
