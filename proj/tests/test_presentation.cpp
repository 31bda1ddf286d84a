#include <doctest.h>

#include <random>

#include "algkit/parse.hpp"
#include "algkit/presentation.hpp"

using namespace algkit;

TEST_CASE("parsing quotient presentations") {
    Presentation p = parse_presentation("R[j]/<j^2-1>");
    CHECK(p.generators == std::vector<std::string>{"j"});
    CHECK(p.relations.size() == 1);

    Presentation xi = parse_presentation("R[e1,e2]/<e1^2, e1*e2, e2^2>");
    CHECK(xi.generators.size() == 2);
    CHECK(xi.relations.size() == 3);

    Presentation dg = parse_presentation("R[j,k]/<j^2-1, k>");
    CHECK(dg.generators.size() == 2);
    CHECK(dg.relations.size() == 2);
}

TEST_CASE("parse errors carry positions") {
    try {
        parse_presentation("R[j]/<j^2-1");
        FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
        CHECK(e.line == 1);
        CHECK(e.col >= 11);
    }
    CHECK_THROWS_AS(parse_presentation("R[j]/<k^2>"), UnknownGenerator);
    CHECK_THROWS_AS(parse_presentation("R[j,j]/<j^2>"), SyntaxError);
}

TEST_CASE("building the basic presentation of the 3-hyperbolic numbers") {
    auto pa = build(parse_presentation("R[x,y]/<x^2-y, y^2-x, x*y-1>"));
    CHECK(pa.algebra->dim() == 3);
    CHECK(generator_images_generate(pa));
    // x plays the role of the cube root of 1
    Element x = pa.generator_images[0];
    CHECK(x.pow(3) == pa.algebra->unit());
    CHECK(is_basic(pa));
    // y is eliminated to x^2, so the basis is {1, x, x^2} and matching it
    // against {1, j, j^2} is the identity matrix
    CHECK(pa.algebra->labels() == std::vector<std::string>{"1", "x", "x^2"});
    CHECK(iso_check(*pa.algebra, *family(Family::H, 3).algebra, QMatrix::identity(3)));
}

TEST_CASE("tensor results satisfy their combined relations") {
    auto t = tensor(family(Family::G, 3), family(Family::Xi, 2));
    CHECK(t.algebra->dim() == 9);
    for (const FormalPoly& rel : t.presentation.relations) CHECK(ev(t, rel).is_zero());
    CHECK(generator_images_generate(t));
}

TEST_CASE("building the standard hyperbolic presentation") {
    auto pa = build(parse_presentation("R[j]/<j^2-1>"));
    CHECK(pa.algebra->dim() == 2);
    CHECK(pa.algebra->labels() == std::vector<std::string>{"1", "j"});
}

TEST_CASE("degenerate presentation eliminates a generator") {
    auto pa = build(parse_presentation("R[j,k]/<j^2-1, k>"));
    CHECK(pa.algebra->dim() == 2);
    CHECK(pa.generator_images[1].is_zero());
    CHECK(is_degenerate(pa));
}

TEST_CASE("inconsistent and infinite-dimensional presentations are rejected") {
    CHECK_THROWS_AS(build(parse_presentation("R[x]/<x-1, x-2>")), Inconsistent);
    CHECK_THROWS_AS(build(parse_presentation("R[x,y]/<x*y-1>")), InfiniteDimensional);
    CHECK_THROWS_AS(build(parse_presentation("R[x]/<x^3>, ")), SyntaxError);
    CHECK_THROWS_AS(build(parse_presentation("R[x,y]/<x^2*y-1, x^3, y^3>")), UnsupportedForm);
}

TEST_CASE("named families have the right dimensions") {
    CHECK(family(Family::C, 2).algebra->dim() == 2);
    CHECK(family(Family::H, 1).algebra->dim() == 1);
    CHECK(family(Family::G, 1).algebra->dim() == 1);
    CHECK(family(Family::Xi, 3).algebra->dim() == 4);
    CHECK(family(Family::Xi, 3).algebra->labels() ==
          std::vector<std::string>{"1", "e1", "e2", "e3"});
    CHECK(family(Family::CC, 2).algebra->dim() == 4);
    CHECK(family(Family::CC, 3).algebra->dim() == 8);
    CHECK_THROWS_AS(family(Family::H, 0), Error);
}

TEST_CASE("tensor products") {
    auto t = tensor(family(Family::G, 3), family(Family::G, 3));
    CHECK(t.algebra->dim() == 9);
    CHECK(t.presentation.generators == std::vector<std::string>{"e", "e2"});

    // tensoring with the scalars changes nothing
    auto same = tensor(family(Family::G, 3), family(Family::H, 1));
    CHECK(same.algebra->dim() == 3);
    CHECK(same.algebra->same_table(*family(Family::G, 3).algebra));
    CHECK(same.algebra->labels() == family(Family::G, 3).algebra->labels());

    // the tensor square agrees with the two-generator quotient, matching
    // basis monomials by their exponent pairs
    auto direct = build(parse_presentation("R[e,g]/<e^3, g^3>"));
    REQUIRE(direct.algebra->dim() == 9);
    REQUIRE(t.monomial_basis.has_value());
    REQUIRE(direct.monomial_basis.has_value());
    QMatrix psi(9, 9);
    for (std::size_t col = 0; col < 9; ++col) {
        const Monomial& m = (*t.monomial_basis)[col];
        bool placed = false;
        for (std::size_t row = 0; row < 9; ++row)
            if ((*direct.monomial_basis)[row] == m) {
                psi(row, col) = 1;
                placed = true;
            }
        REQUIRE(placed);
    }
    CHECK(iso_check(*t.algebra, *direct.algebra, psi));
}

TEST_CASE("direct products") {
    auto rxr = direct_product(family(Family::H, 1), family(Family::H, 1));
    CHECK(rxr.algebra->dim() == 2);
    Element e1 = rxr.algebra->basis_element(1);
    Element e2 = rxr.algebra->unit() - e1;
    CHECK(e1 * e1 == e1);
    CHECK(e2 * e2 == e2);
    CHECK((e1 * e2).is_zero());

    // the product of two unital algebras is unital with unit (1,1)
    auto mixed = direct_product(family(Family::G, 2), family(Family::C, 2));
    CHECK(mixed.algebra->dim() == 4);
    CHECK(mixed.algebra->label(0) == "1");
}

TEST_CASE("canonical basic presentations") {
    auto c2 = family(Family::C, 2);
    CHECK(presentation_to_string(canonical_basic_presentation(*c2.algebra)) == "R[i]/<i^2+1>");

    auto g2 = family(Family::G, 2);
    CHECK(presentation_to_string(canonical_basic_presentation(*g2.algebra)) == "R[e]/<e^2>");

    auto h3 = family(Family::H, 3);
    Presentation p = canonical_basic_presentation(*h3.algebra);
    CHECK(p.generators.size() == 2);
    CHECK(p.relations.size() == 3);
    CHECK(build(p).algebra->dim() == 3);
}

TEST_CASE("rebuilding from the canonical basic presentation gives an isomorphic algebra") {
    std::vector<PresentedAlgebra> algs;
    algs.push_back(family(Family::C, 2));
    algs.push_back(family(Family::H, 2));
    algs.push_back(family(Family::H, 3));
    algs.push_back(family(Family::G, 3));
    algs.push_back(family(Family::Xi, 2));
    for (const auto& pa : algs) {
        auto rebuilt = build(canonical_basic_presentation(*pa.algebra));
        const std::size_t n = pa.algebra->dim();
        REQUIRE(rebuilt.algebra->dim() == n);
        // natural map: unit to unit, original basis vector to the image of
        // its generator in the rebuilt algebra
        QMatrix psi(n, n);
        std::size_t slot = 0;
        for (std::size_t i = 0; i < n; ++i) {
            QVec col = (i == pa.algebra->unit_index()) ? rebuilt.algebra->unit().coords()
                                                       : rebuilt.generator_images[slot++].coords();
            for (std::size_t r = 0; r < n; ++r) psi(r, i) = col[r];
        }
        CHECK(iso_check(*pa.algebra, *rebuilt.algebra, psi));
        CHECK(is_basic(rebuilt));
        CHECK(!is_degenerate(rebuilt));  // every basic presentation is non-degenerate
    }
}

TEST_CASE("evaluation homomorphism") {
    auto h = family(Family::H, 2);
    CHECK(ev(h, "j^2 + j - 1") == parse_element("j", h.algebra));
    CHECK(ev(h, "5") == Rat(5) * h.algebra->unit());

    auto g2 = family(Family::G, 2);
    CHECK(ev(g2, "e^3 + e") == parse_element("e", g2.algebra));

    CHECK_THROWS_AS(ev(h, "q + 1"), UnknownGenerator);
}

TEST_CASE("ev is a ring homomorphism on random formal polynomials") {
    auto h3 = family(Family::H, 3);
    std::mt19937 rng(61);
    auto random_formal = [&] {
        FormalPoly p(1);
        for (int t = 0; t < 4; ++t) {
            Monomial m{static_cast<unsigned>(rng() % 5)};
            p.add_term(m, Rat(static_cast<long>(rng() % 19) - 9));
        }
        return p;
    };
    for (int t = 0; t < 40; ++t) {
        FormalPoly f = random_formal(), g = random_formal();
        CHECK(ev(h3, f * g) == ev(h3, f) * ev(h3, g));
        CHECK(ev(h3, f + g) == ev(h3, f) + ev(h3, g));
    }
}

TEST_CASE("degenerate and basic predicates") {
    auto std_h = build(parse_presentation("R[j]/<j^2-1>"));
    CHECK(!is_degenerate(std_h));
    CHECK(is_basic(std_h));

    auto dg = build(parse_presentation("R[j,k]/<j^2-1, k>"));
    CHECK(is_degenerate(dg));

    auto h3 = build(parse_presentation("R[j]/<j^3-1>"));
    CHECK(!is_degenerate(h3));
    CHECK(!is_basic(h3));  // {1, j} does not span a 3-dimensional algebra
}

TEST_CASE("isomorphism checking") {
    auto h = family(Family::H, 2);
    auto rxr = direct_product(family(Family::H, 1), family(Family::H, 1));
    QMatrix psi(2, 2);
    psi(0, 0) = 1;
    psi(0, 1) = Rat(1, 2);
    psi(1, 0) = 0;
    psi(1, 1) = Rat(1, 2);
    CHECK(iso_check(*rxr.algebra, *h.algebra, psi));

    CHECK(iso_check(*h.algebra, *h.algebra, QMatrix::identity(2)));

    QMatrix swap(2, 2);
    swap(0, 1) = 1;
    swap(1, 0) = 1;
    CHECK(!iso_check(*h.algebra, *h.algebra, swap));  // does not fix the unit

    CHECK_THROWS_AS(iso_check(*h.algebra, *family(Family::H, 3).algebra, QMatrix::identity(2)),
                    DimensionMismatch);
}

TEST_CASE("the built-in non-lattice algebra") {
    auto nl = non_lattice_example();
    CHECK(nl.algebra->dim() == 7);
    CHECK(nl.algebra->commutative());
    CHECK(!is_degenerate(nl));
    CHECK(is_basic(nl));
    for (const FormalPoly& rel : nl.presentation.relations) CHECK(ev(nl, rel).is_zero());
    CHECK(is_unital_nil(nl.algebra));
}

TEST_CASE("algebra expression grammar") {
    CHECK(parse_algebra_expr("tensor(G(3),G(3))").algebra->dim() == 9);
    CHECK(parse_algebra_expr("product(H(1),C(2))").algebra->dim() == 3);
    CHECK(parse_algebra_expr("R[x]/<x^4>").algebra->dim() == 4);
    CHECK_THROWS_AS(parse_algebra_expr("Q(3)"), SyntaxError);
    CHECK_THROWS_AS(parse_algebra_expr("tensor(G(3)"), SyntaxError);
}
