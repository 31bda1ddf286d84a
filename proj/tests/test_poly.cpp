#include <doctest.h>

#include <cmath>
#include <random>

#include "algkit/parse.hpp"
#include "algkit/poly.hpp"
#include "algkit/presentation.hpp"

using namespace algkit;

namespace {

Element random_element(const AlgebraPtr& a, std::mt19937& rng) {
    QVec c(a->dim());
    for (Rat& x : c) x = Rat(static_cast<long>(rng() % 19) - 9);
    return a->element(c);
}

}  // namespace

TEST_CASE("multiplication can drop degree") {
    auto h = family(Family::H, 2);
    Poly f = parse_poly_literal("(j-1)*z + (1)", h.algebra);
    Poly g = parse_poly_literal("(j+1)*z + (1)", h.algebra);
    Poly prod = pmul(f, g);
    CHECK(prod == parse_poly_literal("(2*j)*z + (1)", h.algebra));
    CHECK(prod.degree() == 1);
}

TEST_CASE("multiplying by the unit and by nilpotents") {
    auto g2 = family(Family::G, 2);
    Poly f = parse_poly_literal("(e)*z^2 + (1+e)*z + (3)", g2.algebra);
    CHECK(pmul(f, Poly::constant(g2.algebra->unit())) == f);
    Poly ez = parse_poly_literal("(e)*z", g2.algebra);
    CHECK(pmul(ez, ez).is_zero());
}

TEST_CASE("division: z^2 by (z - j) over the hyperbolic numbers") {
    auto h = family(Family::H, 2);
    Poly f = parse_poly_literal("z^2", h.algebra);
    Poly g = parse_poly_literal("z - j", h.algebra);
    auto [q, r] = divmod(f, g);
    CHECK(q == parse_poly_literal("z + j", h.algebra));
    CHECK(r == parse_poly_literal("(1)", h.algebra));  // j^2 = 1
}

TEST_CASE("division by the unit and error paths") {
    auto h = family(Family::H, 2);
    Poly f = parse_poly_literal("(2+j)*z^3 + (1)", h.algebra);
    auto [q, r] = divmod(f, Poly::constant(h.algebra->unit()));
    CHECK(q == f);
    CHECK(r.is_zero());

    Poly bad = parse_poly_literal("(j-1)*z + (1)", h.algebra);
    Poly top = parse_poly_literal("(2*j)*z + (1)", h.algebra);
    CHECK_THROWS_AS(divmod(top, bad), NonUnitLeadingCoefficient);
    CHECK_THROWS_AS(divmod(f, Poly(h.algebra)), DivisionByZeroPoly);
}

TEST_CASE("division round trip on random pairs") {
    std::mt19937 rng(71);
    for (const auto& pa : {family(Family::H, 2), family(Family::G, 3), family(Family::Xi, 2)}) {
        for (int t = 0; t < 100; ++t) {
            std::vector<Element> fc, gc;
            int fd = static_cast<int>(rng() % 6), gd = static_cast<int>(rng() % 3);
            for (int i = 0; i <= fd; ++i) fc.push_back(random_element(pa.algebra, rng));
            for (int i = 0; i < gd; ++i) gc.push_back(random_element(pa.algebra, rng));
            Element lead = random_element(pa.algebra, rng);
            while (!is_unit(lead)) lead = random_element(pa.algebra, rng);
            gc.push_back(lead);
            Poly f(pa.algebra, fc), g(pa.algebra, gc);
            auto [q, r] = divmod(f, g);
            CHECK(q * g + r == f);
            CHECK((r.is_zero() || r.degree() < g.degree()));
        }
    }
}

TEST_CASE("factor theorem") {
    auto h = family(Family::H, 2);
    Element j = parse_element("j", h.algebra);
    Poly f = parse_poly_literal("z^2 - 1", h.algebra);
    CHECK(peval(f, j).is_zero());
    CHECK(root_quotient(f, j) == parse_poly_literal("z + j", h.algebra));

    Poly g = parse_poly_literal("z^2 + 1", h.algebra);
    CHECK(!peval(g, j).is_zero());
    CHECK_THROWS_AS(root_quotient(g, j), NotARoot);

    auto g2 = family(Family::G, 2);
    Element root = parse_element("1 + 1/2*e", g2.algebra);
    Poly f2 = parse_poly_literal("z^2 + (-1-e)", g2.algebra);
    CHECK(peval(f2, root).is_zero());
    Poly quot = root_quotient(f2, root);
    Poly check = Poly(g2.algebra, {-root, g2.algebra->unit()}) * quot;
    CHECK(check == f2);
}

TEST_CASE("common annihilator of a polynomial") {
    auto rxr = direct_product(family(Family::H, 1), family(Family::H, 1));
    Element e1 = rxr.algebra->basis_element(1);
    Element e2 = rxr.algebra->unit() - e1;
    Poly f(rxr.algebra, {e2, e1});
    CHECK(common_annihilator(f).is_trivial());
    CHECK(!poly_is_zero_divisor(f));

    auto h = family(Family::H, 2);
    Poly g = parse_poly_literal("(1+j)*z + (1+j)", h.algebra);
    Subspace ann = common_annihilator(g);
    REQUIRE(ann.dim() == 1);
    CHECK(ann.basis()[0] == parse_element("1-j", h.algebra));
    CHECK(poly_is_zero_divisor(g));

    CHECK(common_annihilator(Poly(h.algebra)).dim() == 2);  // zero polynomial
}

TEST_CASE("a common annihilator element kills the polynomial coefficientwise") {
    std::mt19937 rng(77);
    auto g3 = family(Family::G, 3);
    Element eps = parse_element("e", g3.algebra);
    for (int t = 0; t < 60; ++t) {
        std::vector<Element> coeffs;
        int deg = static_cast<int>(rng() % 4);
        for (int i = 0; i <= deg; ++i) coeffs.push_back(eps * random_element(g3.algebra, rng));
        Poly f(g3.algebra, std::move(coeffs));
        if (f.is_zero()) continue;
        Subspace ann = common_annihilator(f);
        CHECK(!ann.is_trivial());
        for (const Element& c : ann.basis()) {
            CHECK((c * f).is_zero());
            for (const Element& a : f.coeffs()) CHECK((c * a).is_zero());
        }
    }
}

TEST_CASE("Armendariz pair checks") {
    auto xi2 = family(Family::Xi, 2);
    Poly p = parse_poly_literal("(e2)*z + (e1)", xi2.algebra);
    Poly q = parse_poly_literal("(e1)*z + (e2)", xi2.algebra);
    CHECK((p * q).is_zero());
    CHECK(armendariz_pair_check(p, q));

    auto h = family(Family::H, 2);
    Poly a = parse_poly_literal("z + (1)", h.algebra);
    Poly b = parse_poly_literal("z + (j)", h.algebra);
    CHECK(!(a * b).is_zero());
    CHECK(armendariz_pair_check(a, b));  // vacuous

    std::mt19937 rng(81);
    auto g3 = family(Family::G, 3);
    Element eps = parse_element("e", g3.algebra);
    for (int t = 0; t < 100; ++t) {
        Poly pp = eps * Poly(g3.algebra, {random_element(g3.algebra, rng), random_element(g3.algebra, rng)});
        Poly qq = (eps * eps) * Poly(g3.algebra, {random_element(g3.algebra, rng), random_element(g3.algebra, rng)});
        CHECK(armendariz_pair_check(pp, qq));
    }
}

TEST_CASE("nilfactor over the dual numbers and the nil chains") {
    auto g2 = family(Family::G, 2);
    Element eps = parse_element("e", g2.algebra);
    Poly f = parse_poly_literal("(e)*z^2 + (e)", g2.algebra);
    NilFactorization nf = nilfactor(f);
    REQUIRE(nf.factors.size() == 1);
    CHECK(nf.factors[0] == eps);
    CHECK(nf.reduced == parse_poly_literal("z^2 + 1", g2.algebra));

    auto g3 = family(Family::G, 3);
    Poly f3 = parse_poly_literal("(e^2)*z", g3.algebra);
    NilFactorization nf3 = nilfactor(f3);
    CHECK(nf3.factors.size() == 2);
    CHECK(nf3.reduced == parse_poly_literal("z", g3.algebra));

    CHECK_THROWS_AS(nilfactor(parse_poly_literal("z + 1", g2.algebra)), NotAZeroDivisor);
}

TEST_CASE("nilfactor over the hyperbolic numbers extracts idempotent content") {
    auto h = family(Family::H, 2);
    Poly f = parse_poly_literal("(1+j)*z + (1+j)", h.algebra);
    NilFactorization nf = nilfactor(f);
    REQUIRE(nf.factors.size() == 1);
    // the factor is proportional to 1+j
    Element factor = nf.factors[0];
    CHECK(!factor.is_zero());
    CHECK((factor * parse_element("1-j", h.algebra)).is_zero());
    Poly back = factor * nf.reduced;
    CHECK(back == f);
    CHECK(!poly_is_zero_divisor(nf.reduced));
}

TEST_CASE("nilfactor rejects algebras outside its supported shapes") {
    auto cc2 = family(Family::CC, 2);
    // (1 + i1*i2)(1 - i1*i2) = 0, so the constant polynomial is a zero divisor
    Poly f = parse_poly_literal("(1 + i1*i2)", cc2.algebra);
    CHECK(poly_is_zero_divisor(f));
    CHECK_THROWS_AS(nilfactor(f), UnsupportedAlgebra);
}

TEST_CASE("annihilator of a polynomial as a cyclic module") {
    auto g2 = family(Family::G, 2);
    Element eps = parse_element("e", g2.algebra);
    Poly f = parse_poly_literal("(e)*z^2 + (e)", g2.algebra);
    PolyAnnihilator pann = ann_of_poly(f);
    CHECK(pann.generator == eps);
    REQUIRE(pann.ann.dim() == 1);
    CHECK(pann.ann.basis()[0] == eps);
    std::mt19937 rng(91);
    for (int t = 0; t < 20; ++t) {
        Poly h(g2.algebra, {random_element(g2.algebra, rng), random_element(g2.algebra, rng)});
        CHECK(((eps * h) * f).is_zero());
    }

    Poly non_zd = parse_poly_literal("z + 1", g2.algebra);
    PolyAnnihilator trivial = ann_of_poly(non_zd);
    CHECK(trivial.generator == g2.algebra->unit());
    CHECK(trivial.ann.is_trivial());

    // over the hyperbolic numbers the annihilator is generated by 1-j
    auto h = family(Family::H, 2);
    PolyAnnihilator hann = ann_of_poly(parse_poly_literal("(1+j)*z + (1+j)", h.algebra));
    REQUIRE(hann.ann.dim() == 1);
    CHECK(hann.ann.basis()[0] == parse_element("1-j", h.algebra));
}

TEST_CASE("monic quadratic splits") {
    auto h = family(Family::H, 2);
    CHECK(!monic_split_quadratic(parse_poly_literal("z^2 + (j)*z + (j)", h.algebra)).has_value());

    auto split = monic_split_quadratic(parse_poly_literal("z^2 - 1", h.algebra));
    REQUIRE(split.has_value());
    CHECK(split->exact);

    auto g2 = family(Family::G, 2);
    Poly f = parse_poly_literal("z^2 + (-1-e)", g2.algebra);
    auto gs = monic_split_quadratic(f);
    REQUIRE(gs.has_value());
    REQUIRE(gs->exact);
    Element expected = parse_element("-1-1/2*e", g2.algebra);
    CHECK((gs->alpha == expected || gs->beta == expected));

    // double base root: the lifting obstruction is reported
    CHECK_THROWS_AS(monic_split_quadratic(parse_poly_literal("z^2 + (-e)", g2.algebra)), NonSimpleBaseRoot);

    // irrational simple base root: numeric witnesses
    auto num = monic_split_quadratic(parse_poly_literal("z^2 + (-2)", g2.algebra));
    REQUIRE(num.has_value());
    CHECK(!num->exact);
    CHECK(std::abs(std::abs(num->alpha_approx[0]) - std::sqrt(2.0)) < 1e-9);

    // same shape through the rational-component path of a split algebra
    auto hnum = monic_split_quadratic(parse_poly_literal("z^2 + (-2)", h.algebra));
    REQUIRE(hnum.has_value());
    CHECK(!hnum->exact);
    CHECK(std::abs(std::abs(hnum->alpha_approx[0]) - std::sqrt(2.0)) < 1e-9);
    CHECK(std::abs(hnum->alpha_approx[1]) < 1e-9);

    // no chain, no rational split, no decomposition map
    auto cc2 = family(Family::CC, 2);
    CHECK_THROWS_AS(monic_split_quadratic(parse_poly_literal("z^2 + 1", cc2.algebra)), UnsupportedAlgebra);

    // mixed real/complex components through the decomposition map of H(4)
    auto h4 = family(Family::H, 4);
    DecompositionMap hdec = family_decomposition(Family::H, 4);
    auto h4split = monic_split_quadratic(parse_poly_literal("z^2 - 1", h4.algebra), &hdec);
    REQUIRE(h4split.has_value());
    {
        // verify numerically: alpha + beta = b and alpha * beta = c
        std::vector<double> ab = detail::dmultiply(*h4.algebra, h4split->alpha_approx, h4split->beta_approx);
        for (std::size_t i = 0; i < 4; ++i) {
            double b_i = (i == 0 ? -1.0 : 0.0);  // c coefficient of z^2 - 1
            CHECK(std::abs(h4split->alpha_approx[i] + h4split->beta_approx[i]) < 1e-9);
            CHECK(std::abs(ab[i] - b_i) < 1e-9);
        }
    }

    // complex components always split through the decomposition map
    auto c2 = family(Family::C, 2);
    DecompositionMap dec = family_decomposition(Family::C, 2);
    auto cs = monic_split_quadratic(parse_poly_literal("z^2 - (i)", c2.algebra), &dec);
    REQUIRE(cs.has_value());
    CHECK(!cs->exact);
    // multiply back numerically: (z + a)(z + b) with double coefficients
    std::vector<double> a = cs->alpha_approx, b = cs->beta_approx;
    std::vector<double> sum(2), prod(2);
    for (int i = 0; i < 2; ++i) sum[i] = a[i] + b[i];
    prod[0] = a[0] * b[0] - a[1] * b[1];
    prod[1] = a[0] * b[1] + a[1] * b[0];
    CHECK(std::abs(sum[0]) < 1e-9);
    CHECK(std::abs(sum[1]) < 1e-9);
    CHECK(std::abs(prod[0]) < 1e-9);
    CHECK(std::abs(prod[1] + 1.0) < 1e-9);
}

TEST_CASE("polynomial text round trip") {
    auto h = family(Family::H, 2);
    const std::string text = "(1+j)*z^2 + (2)*z + (j)";
    Poly f = parse_poly_literal(text, h.algebra);
    CHECK(poly_to_string(f) == text);
    CHECK(parse_poly_literal(poly_to_string(f), h.algebra) == f);

    CHECK(parse_poly_literal("z^2 - 1", h.algebra) ==
          parse_poly_literal("(1)*z^2 + (-1)", h.algebra));
    CHECK(parse_poly_literal("j*z", h.algebra) == parse_poly_literal("(j)*z", h.algebra));
    CHECK(poly_to_string(Poly(h.algebra)) == "(0)");
}
