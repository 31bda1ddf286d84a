#pragma once

// Built-in end-to-end checks, each reproducing one of the worked identities
// the library is designed around. The CLI `examples` subcommand and the
// acceptance test binary both run these; every check prints one PASS/FAIL
// line. All randomized checks use fixed seeds and hand-rolled integer draws
// so results are identical across platforms.

#include <cmath>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "algkit/algebra.hpp"
#include "algkit/nilposet.hpp"
#include "algkit/parse.hpp"
#include "algkit/poly.hpp"
#include "algkit/presentation.hpp"
#include "algkit/structure.hpp"

namespace algkit {

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

namespace selftest_detail {

struct Rng {
    std::mt19937 gen;
    explicit Rng(unsigned seed) : gen(seed) {}
    long int_in(long lo, long hi) { return lo + static_cast<long>(gen() % static_cast<unsigned long>(hi - lo + 1)); }
    Rat small_int() { return Rat(int_in(-9, 9)); }
    Rat rational() {
        Rat r(int_in(-9, 9), int_in(1, 9));
        r.canonicalize();
        return r;
    }
};

inline Element random_element(const AlgebraPtr& a, Rng& rng) {
    QVec c(a->dim());
    for (Rat& x : c) x = rng.small_int();
    return a->element(c);
}

inline Element random_unit(const AlgebraPtr& a, Rng& rng) {
    for (int tries = 0; tries < 100; ++tries) {
        Element e = random_element(a, rng);
        if (is_unit(e)) return e;
    }
    throw Error("no unit found while sampling");
}

inline Poly random_poly(const AlgebraPtr& a, Rng& rng, int max_deg, bool unit_leading) {
    int deg = static_cast<int>(rng.int_in(0, max_deg));
    std::vector<Element> coeffs;
    for (int i = 0; i < deg; ++i) coeffs.push_back(random_element(a, rng));
    coeffs.push_back(unit_leading ? random_unit(a, rng) : random_element(a, rng));
    return Poly(a, std::move(coeffs));
}

inline CheckResult check(const std::string& name, const std::function<std::string()>& body) {
    try {
        std::string failure = body();
        return {name, failure.empty(), failure};
    } catch (const std::exception& e) {
        return {name, false, std::string("exception: ") + e.what()};
    }
}

}  // namespace selftest_detail

inline std::vector<CheckResult> run_selftest() {
    using selftest_detail::check;
    using selftest_detail::random_element;
    using selftest_detail::random_poly;
    using selftest_detail::Rng;
    std::vector<CheckResult> results;

    // 1. The regular representation of the complex numbers.
    results.push_back(check("complex-regular-representation", [] {
        auto c2 = family(Family::C, 2);
        Rng rng(101);
        for (int t = 0; t < 100; ++t) {
            Rat x = rng.rational(), y = rng.rational();
            QMatrix m = regular_matrix(c2.algebra->element({x, y}));
            if (!(m(0, 0) == x && m(0, 1) == -y && m(1, 0) == y && m(1, 1) == x))
                return std::string("matrix mismatch at x=") + to_string(x) + " y=" + to_string(y);
        }
        return std::string();
    }));

    // 2. Determinant identity for the three-dimensional hyperbolic family.
    results.push_back(check("h3-determinant-identity", [] {
        auto h3 = family(Family::H, 3);
        Rng rng(102);
        for (int t = 0; t < 200; ++t) {
            Rat a = rng.rational(), b = rng.rational(), c = rng.rational();
            Rat d = det(regular_matrix(h3.algebra->element({a, b, c})));
            Rat expect = (a + b + c) * (a * a + b * b + c * c - a * b - a * c - b * c);
            if (d != expect) return std::string("determinant mismatch");
        }
        return std::string();
    }));

    // 3. Zero divisors of the hyperbolic numbers on a grid; Ann(1+j).
    results.push_back(check("hyperbolic-zero-divisor-grid", [] {
        auto h = family(Family::H, 2);
        for (long a = -20; a <= 20; ++a)
            for (long b = -20; b <= 20; ++b) {
                bool zd = is_zero_divisor(h.algebra->element({Rat(a), Rat(b)}));
                bool expect = (a == b) || (a == -b);
                if (zd != expect) {
                    std::ostringstream os;
                    os << "mismatch at a=" << a << " b=" << b;
                    return os.str();
                }
            }
        Subspace ann = annihilator(parse_element("1+j", h.algebra));
        if (ann.dim() != 1 || !(ann.basis()[0] == parse_element("1-j", h.algebra)))
            return std::string("Ann(1+j) is not span{1-j}");
        return std::string();
    }));

    // 4. Explicit isomorphisms: R x R -> H, and the H(3) decomposition map
    //    against its closed-form forward/inverse.
    results.push_back(check("explicit-isomorphisms", [] {
        auto h = family(Family::H, 2);
        auto rxr = direct_product(family(Family::H, 1), family(Family::H, 1));
        QMatrix psi(2, 2);
        psi(0, 0) = 1;
        psi(0, 1) = Rat(1, 2);
        psi(1, 0) = 0;
        psi(1, 1) = Rat(1, 2);
        if (!iso_check(*rxr.algebra, *h.algebra, psi)) return std::string("R x R -> H map rejected");

        DecompositionMap dec = family_decomposition(Family::H, 3);
        if (!(dec.signature == WedderburnSignature{1, 1})) return std::string("H(3) signature is not (1,1)");
        const double s3 = std::sqrt(3.0);
        std::mt19937 gen(104);
        auto rnd = [&] { return static_cast<double>(static_cast<long>(gen() % 19) - 9); };
        for (int t = 0; t < 100; ++t) {
            double a = rnd(), b = rnd(), c = rnd();
            std::vector<double> fwd = dmat_apply(dec.forward, {a, b, c});
            double u = a + b + c;
            double re = a - 0.5 * b - 0.5 * c;
            double im = (b - c) * s3 / 2.0;
            if (std::abs(fwd[0] - u) > 1e-9 || std::abs(fwd[1] - re) > 1e-9 || std::abs(fwd[2] - im) > 1e-9)
                return std::string("forward map differs from the closed form");
            double uu = rnd(), x = rnd(), y = rnd();
            std::vector<double> inv = dmat_apply(dec.inverse, {uu, x, y});
            double ea = (uu + 2 * x) / 3.0;
            double eb = (uu - x + y * s3) / 3.0;
            double ec = (uu - x - y * s3) / 3.0;
            if (std::abs(inv[0] - ea) > 1e-9 || std::abs(inv[1] - eb) > 1e-9 || std::abs(inv[2] - ec) > 1e-9)
                return std::string("inverse map differs from the closed form");
        }
        return std::string();
    }));

    // 5. Wedderburn signatures of the named families, exact and numeric.
    results.push_back(check("wedderburn-signatures", [] {
        struct Case {
            Family f;
            int n;
            WedderburnSignature expect;
        };
        const Case cases[] = {{Family::H, 4, {2, 1}},
                              {Family::H, 5, {1, 2}},
                              {Family::C, 4, {0, 2}},
                              {Family::C, 5, {1, 2}},
                              {Family::CC, 2, {0, 2}}};
        for (const Case& c : cases) {
            DecompositionMap dec = family_decomposition(c.f, c.n);
            if (!(dec.signature == c.expect))
                return family_name(c.f) + "(" + std::to_string(c.n) + ") exact signature mismatch";
            WedderburnSignature num = numeric_signature(dec.source, 105);
            if (!(num == c.expect))
                return family_name(c.f) + "(" + std::to_string(c.n) + ") numeric signature mismatch";
        }
        return std::string();
    }));

    // 6. Degree drop under multiplication in the presence of zero divisors.
    results.push_back(check("degree-pathology", [] {
        auto h = family(Family::H, 2);
        Element j = parse_element("j", h.algebra);
        Element one = h.algebra->unit();
        Poly f(h.algebra, {one, j - one});  // (j-1)z + 1
        Poly g(h.algebra, {one, j + one});  // (j+1)z + 1
        Poly prod = pmul(f, g);
        Poly expect(h.algebra, {one, Rat(2) * j});  // 2jz + 1
        if (!(prod == expect)) return std::string("product is not 2jz+1");
        if (prod.degree() != 1 || f.degree() != 1 || g.degree() != 1)
            return std::string("degrees are wrong");
        return std::string();
    }));

    // 7. Division algorithm: round trip, remainder bound, uniqueness.
    results.push_back(check("division-algorithm", [] {
        Rng rng(107);
        std::vector<PresentedAlgebra> algs;
        algs.push_back(family(Family::H, 2));
        algs.push_back(family(Family::G, 3));
        algs.push_back(family(Family::Xi, 2));
        for (const auto& pa : algs) {
            for (int t = 0; t < 500; ++t) {
                Poly f = random_poly(pa.algebra, rng, 6, false);
                Poly g = random_poly(pa.algebra, rng, 3, true);
                auto [q, r] = divmod(f, g);
                if (!(q * g + r == f)) return std::string("round trip failed");
                if (!r.is_zero() && r.degree() >= g.degree()) return std::string("remainder degree bound failed");
                auto [q2, r2] = divmod(f - r, g);
                if (!(q2 == q) || !r2.is_zero()) return std::string("quotient is not unique under recomputation");
            }
        }
        return std::string();
    }));

    // 8. Factor theorem via synthetic division, planted roots.
    results.push_back(check("factor-theorem", [] {
        Rng rng(108);
        std::vector<PresentedAlgebra> algs;
        algs.push_back(family(Family::H, 2));
        algs.push_back(family(Family::G, 3));
        algs.push_back(family(Family::H, 3));
        for (const auto& pa : algs) {
            for (int t = 0; t < 500; ++t) {
                Element alpha = random_element(pa.algebra, rng);
                Poly g = random_poly(pa.algebra, rng, 4, false);
                Poly zma(pa.algebra, {-alpha, pa.algebra->unit()});
                Poly f = zma * g;
                if (!peval(f, alpha).is_zero()) return std::string("planted root does not evaluate to zero");
                Poly q = root_quotient(f, alpha);
                if (!(zma * q == f)) return std::string("synthetic quotient does not multiply back");
                Poly shifted = f + Poly::constant(pa.algebra->unit());
                bool evals_zero = peval(shifted, alpha).is_zero();
                bool divides = true;
                try {
                    root_quotient(shifted, alpha);
                } catch (const NotARoot&) {
                    divides = false;
                }
                if (evals_zero != divides) return std::string("factor equivalence failed on perturbed case");
            }
        }
        return std::string();
    }));

    // 9. Polynomial zero divisors against a stacked-kernel oracle.
    results.push_back(check("polynomial-zero-divisors", [] {
        auto rxr = direct_product(family(Family::H, 1), family(Family::H, 1));
        Element e1 = rxr.algebra->basis_element(1);
        Element e2 = rxr.algebra->unit() - e1;
        Poly f(rxr.algebra, {e2, e1});  // e1 x + e2
        if (poly_is_zero_divisor(f)) return std::string("e1 x + e2 misclassified as a zero divisor");
        if (!common_annihilator(f).is_trivial()) return std::string("common annihilator not trivial");

        auto oracle_zd = [](const Poly& p) {
            // nonzero c with c * a_i = 0 for all i <=> stacked kernel nontrivial
            const std::size_t n = p.parent()->dim();
            std::size_t rows = n * p.coeffs().size();
            if (p.coeffs().empty()) return true;
            QMatrix stacked(rows, n);
            for (std::size_t ci = 0; ci < p.coeffs().size(); ++ci) {
                QMatrix m = regular_matrix(p.coeffs()[ci]);
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j) stacked(ci * n + i, j) = m(i, j);
            }
            return !kernel_basis(stacked).empty();
        };

        Rng rng(109);
        for (const auto& pa : {family(Family::G, 3), family(Family::H, 2)}) {
            // some zero divisor of the algebra, to force nontrivial cases
            Element zd_scale = pa.algebra->zero();
            for (std::size_t i = 0; i < pa.algebra->dim() && zd_scale.is_zero(); ++i) {
                for (const Element& cand :
                     {pa.algebra->basis_element(i), pa.algebra->unit() + pa.algebra->basis_element(i)})
                    if (is_nontrivial_zero_divisor(cand)) {
                        zd_scale = cand;
                        break;
                    }
            }
            for (int t = 0; t < 500; ++t) {
                Poly p = random_poly(pa.algebra, rng, 4, false);
                if (t % 2 == 0 && !zd_scale.is_zero()) p = zd_scale * p;
                if (p.is_zero()) continue;
                if (poly_is_zero_divisor(p) != oracle_zd(p)) return std::string("oracle disagreement");
            }
        }
        return std::string();
    }));

    // 10. Armendariz probe over the nil-number chains.
    results.push_back(check("armendariz-probe", [] {
        Rng rng(110);
        for (int n : {3, 4}) {
            auto g = family(Family::G, n);
            Element eps = parse_element("e", g.algebra);
            for (int t = 0; t < 1000; ++t) {
                long s = rng.int_in(1, n - 1);
                Element eps_s = eps.pow(static_cast<unsigned long>(s));
                Element eps_t = eps.pow(static_cast<unsigned long>(n - s));
                Poly p = eps_s * random_poly(g.algebra, rng, 4, false);
                Poly q = eps_t * random_poly(g.algebra, rng, 4, false);
                if (!(p * q).is_zero()) return std::string("constructed pair does not multiply to zero");
                if (!armendariz_pair_check(p, q)) return std::string("pairwise coefficient product check failed");
            }
        }
        return std::string();
    }));

    // 11. Nilfactor decomposition and the annihilator of a polynomial.
    results.push_back(check("nilfactor-decomposition", [] {
        auto g4 = family(Family::G, 4);
        Element eps = parse_element("e", g4.algebra);
        Rng rng(111);
        for (int t = 0; t < 200; ++t) {
            long content = rng.int_in(1, 3);
            int deg = static_cast<int>(rng.int_in(0, 4));
            std::vector<Element> coeffs;
            for (int i = 0; i <= deg; ++i) {
                long extra = rng.int_in(0, 3 - content);
                coeffs.push_back(eps.pow(static_cast<unsigned long>(content + extra)) *
                                 random_element(g4.algebra, rng));
            }
            // pin the content exactly
            coeffs[static_cast<std::size_t>(rng.int_in(0, deg))] = eps.pow(static_cast<unsigned long>(content)) *
                                                                    selftest_detail::random_unit(g4.algebra, rng);
            Poly f(g4.algebra, std::move(coeffs));
            if (f.is_zero() || !poly_is_zero_divisor(f)) continue;
            NilFactorization nf = nilfactor(f);
            Poly back = nf.reduced;
            for (const Element& fac : nf.factors) back = fac * back;
            if (!(back == f)) return std::string("factors times reduced polynomial differs from input");
            if (poly_is_zero_divisor(nf.reduced)) return std::string("reduced polynomial is still a zero divisor");
            PolyAnnihilator pann = ann_of_poly(f);
            for (int h = 0; h < 50; ++h) {
                Poly hp = random_poly(g4.algebra, rng, 3, false);
                for (const Element& w : pann.ann.basis())
                    if (!((w * hp) * f).is_zero()) return std::string("Ann(eps^t) A[z] does not annihilate f");
            }
        }
        return std::string();
    }));

    // 12. Nil posets: chains, the diamond, the tensor square, and the
    //     non-lattice example.
    results.push_back(check("nil-posets", [] {
        for (int n = 2; n <= 6; ++n) {
            NilPoset p = build_nil_poset(family(Family::G, n).algebra);
            if (p.node_count() != static_cast<std::size_t>(n + 1)) return std::string("chain node count wrong");
            if (p.covers().size() != static_cast<std::size_t>(n)) return std::string("chain cover count wrong");
            // deg-lex basis order puts the powers in ascending order
            for (std::size_t x = 0; x + 1 < p.node_count(); ++x)
                if (!p.leq(x, x + 1) || p.leq(x + 1, x)) return std::string("chain order broken");
        }
        NilPoset xi2 = build_nil_poset(family(Family::Xi, 2).algebra);
        if (xi2.node_count() != 4 || xi2.covers().size() != 4) return std::string("diamond shape wrong");

        auto g3g3 = tensor(family(Family::G, 3), family(Family::G, 3));
        NilPoset tp = build_nil_poset(g3g3.algebra);
        if (tp.node_count() != 10) return std::string("tensor-square poset should have 10 nodes");
        for (std::size_t i = 0; i < g3g3.algebra->dim(); ++i) {
            Subspace from_poset = annihilator_from_poset(tp, i);
            Subspace exact = annihilator(g3g3.algebra->basis_element(i));
            if (!from_poset.same_span(exact)) return std::string("poset annihilator differs from kernel");
        }

        auto nle = non_lattice_example();
        NilPoset np = build_nil_poset(nle.algebra);
        LatticeCheck lc = is_lattice(np);
        if (lc.ok) return std::string("non-lattice example passed the lattice check");
        std::size_t e = 1, g = 2, zeta = 5, xi = 6;
        if (!((lc.a == e && lc.b == g) || (lc.a == g && lc.b == e)))
            return std::string("unexpected witness pair");
        if (lc.minimal_bounds.size() != 2) return std::string("expected two minimal upper bounds");
        bool has_zeta = false, has_xi = false;
        for (std::size_t m : lc.minimal_bounds) {
            if (m == zeta) has_zeta = true;
            if (m == xi) has_xi = true;
        }
        if (!has_zeta || !has_xi) return std::string("minimal upper bounds are not {zeta, xi}");
        return std::string();
    }));

    // 13. Nilradical via the trace form, cross-validated by nilpotency.
    results.push_back(check("nilradical-cross-validation", [] {
        std::vector<PresentedAlgebra> algs;
        for (int n = 2; n <= 6; ++n) algs.push_back(family(Family::G, n));
        for (int n = 1; n <= 4; ++n) algs.push_back(family(Family::Xi, n));
        algs.push_back(family(Family::H, 2));
        algs.push_back(family(Family::C, 2));
        algs.push_back(family(Family::H, 3));
        algs.push_back(tensor(family(Family::G, 3), family(Family::G, 3)));
        for (const auto& pa : algs) {
            Subspace nil = nilradical(pa.algebra);
            const std::size_t n = pa.algebra->dim();
            for (const Element& v : nil.basis()) {
                QMatrix m = regular_matrix(v), p = QMatrix::identity(n);
                for (std::size_t i = 0; i < n; ++i) p = p * m;
                if (!(p == QMatrix(n, n))) return std::string("nilradical vector is not nilpotent");
            }
            std::vector<Element> nilpotent_basis;
            for (std::size_t i = 0; i < n; ++i) {
                Element v = pa.algebra->basis_element(i);
                QMatrix m = regular_matrix(v), p = QMatrix::identity(n);
                for (std::size_t t = 0; t < n; ++t) p = p * m;
                if (p == QMatrix(n, n)) nilpotent_basis.push_back(v);
            }
            if (!nil.same_span(Subspace(pa.algebra, nilpotent_basis)))
                return std::string("trace-form kernel differs from the nilpotent basis span");
        }
        if (!is_semisimple(family(Family::H, 2).algebra) || !is_semisimple(family(Family::C, 2).algebra) ||
            !is_semisimple(family(Family::H, 3).algebra))
            return std::string("semisimple family misclassified");
        return std::string();
    }));

    // 14. Monic quadratic splitting.
    results.push_back(check("monic-quadratic-split", [] {
        auto h = family(Family::H, 2);
        Element j = parse_element("j", h.algebra);
        Element one = h.algebra->unit();
        Poly irreducible(h.algebra, {j, j, one});  // z^2 + j z + j
        if (monic_split_quadratic(irreducible)) return std::string("z^2+jz+j unexpectedly splits");

        Poly z2m1(h.algebra, {-one, h.algebra->zero(), one});  // z^2 - 1
        auto split = monic_split_quadratic(z2m1);
        if (!split || !split->exact) return std::string("z^2-1 over the hyperbolic numbers should split exactly");
        Poly prod = Poly(h.algebra, {split->alpha, one}) * Poly(h.algebra, {split->beta, one});
        if (!(prod == z2m1)) return std::string("split witnesses do not multiply back");

        auto g2 = family(Family::G, 2);
        Element eps = parse_element("e", g2.algebra);
        Poly f(g2.algebra, {-(g2.algebra->unit() + eps), g2.algebra->zero(), g2.algebra->unit()});  // z^2-(1+e)
        auto gsplit = monic_split_quadratic(f);
        if (!gsplit || !gsplit->exact) return std::string("z^2-(1+e) should split exactly");
        Element expected = -(g2.algebra->unit() + Rat(1, 2) * eps);
        if (!(gsplit->alpha == expected) && !(gsplit->beta == expected))
            return std::string("-(1+e/2) is not among the witnesses");
        Poly gprod = Poly(g2.algebra, {gsplit->alpha, g2.algebra->unit()}) *
                     Poly(g2.algebra, {gsplit->beta, g2.algebra->unit()});
        if (!(gprod == f)) return std::string("nil-chain split witnesses do not multiply back");
        return std::string();
    }));

    return results;
}

inline bool print_selftest(std::ostream& out) {
    bool all = true;
    for (const CheckResult& r : run_selftest()) {
        out << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
        if (!r.pass && !r.detail.empty()) out << " - " << r.detail;
        out << "\n";
        all = all && r.pass;
    }
    out << (all ? "all checks passed" : "some checks FAILED") << "\n";
    return all;
}

}  // namespace algkit
