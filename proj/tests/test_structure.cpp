#include <doctest.h>

#include <cmath>
#include <random>

#include "algkit/poly.hpp"
#include "algkit/presentation.hpp"
#include "algkit/structure.hpp"

using namespace algkit;

TEST_CASE("real factorization counts") {
    RealFactorization f4 = real_factorization_xn(-1, 4);  // x^4 - 1
    CHECK(f4.linear_roots.size() == 2);
    CHECK(f4.quadratic_cos.size() == 1);

    RealFactorization p3 = real_factorization_xn(+1, 3);  // x^3 + 1
    CHECK(p3.linear_roots.size() == 1);
    CHECK(p3.linear_roots[0] == -1.0);
    CHECK(p3.quadratic_cos.size() == 1);

    RealFactorization f2 = real_factorization_xn(-1, 2);
    CHECK(f2.linear_roots.size() == 2);
    CHECK(f2.quadratic_cos.empty());
}

TEST_CASE("real factorization expands back to x^n -+ 1") {
    for (int sign : {-1, +1})
        for (int n = 1; n <= 8; ++n) {
            std::vector<double> coeffs = expand_real_factorization(real_factorization_xn(sign, n));
            REQUIRE(coeffs.size() == static_cast<std::size_t>(n + 1));
            CHECK(std::abs(coeffs[0] - (sign < 0 ? -1.0 : 1.0)) < 1e-9);
            CHECK(std::abs(coeffs[static_cast<std::size_t>(n)] - 1.0) < 1e-9);
            for (int k = 1; k < n; ++k) CHECK(std::abs(coeffs[static_cast<std::size_t>(k)]) < 1e-9);
        }
}

TEST_CASE("family decomposition signatures follow the factor counts") {
    struct Case {
        Family f;
        int n;
        WedderburnSignature expect;
    };
    const Case cases[] = {{Family::H, 2, {2, 0}}, {Family::H, 3, {1, 1}},  {Family::H, 4, {2, 1}},
                          {Family::H, 6, {2, 2}}, {Family::C, 2, {0, 1}},  {Family::C, 3, {1, 1}},
                          {Family::C, 6, {0, 3}}, {Family::CC, 1, {0, 1}}, {Family::CC, 3, {0, 4}}};
    for (const Case& c : cases) CHECK(family_decomposition(c.f, c.n).signature == c.expect);
    CHECK_THROWS_AS(family_decomposition(Family::G, 3), NotSemisimple);
    CHECK_THROWS_AS(family_decomposition(Family::Xi, 2), NotSemisimple);
}

TEST_CASE("decomposition maps are unital multiplicative isomorphisms to tolerance") {
    for (int n = 1; n <= 6; ++n) {
        CHECK(decomposition_map_error(family_decomposition(Family::H, n)) < kMapTolerance);
        CHECK(decomposition_map_error(family_decomposition(Family::C, n)) < kMapTolerance);
    }
    for (int n = 1; n <= 3; ++n)
        CHECK(decomposition_map_error(family_decomposition(Family::CC, n)) < kMapTolerance);
}

TEST_CASE("the generator of H(3) maps to (1, e^{2 pi i/3})") {
    DecompositionMap dec = family_decomposition(Family::H, 3);
    std::vector<double> j = dec.to_components(dec.source->basis_element(1));
    CHECK(std::abs(j[0] - 1.0) < 1e-12);
    CHECK(std::abs(j[1] + 0.5) < 1e-12);
    CHECK(std::abs(j[2] - std::sqrt(3.0) / 2.0) < 1e-12);
}

TEST_CASE("numeric signatures") {
    CHECK(numeric_signature(family(Family::H, 3).algebra, 0) == WedderburnSignature{1, 1});
    CHECK(numeric_signature(family(Family::H, 2).algebra, 0) == WedderburnSignature{2, 0});
    CHECK(numeric_signature(family(Family::C, 2).algebra, 0) == WedderburnSignature{0, 1});
    for (int n = 2; n <= 6; ++n) {
        WedderburnSignature s = numeric_signature(family(Family::H, n).algebra, 1);
        CHECK(s.real_factors + 2 * s.complex_factors == n);
    }
    CHECK_THROWS_AS(numeric_signature(family(Family::G, 3).algebra, 0), NotSemisimple);
}

TEST_CASE("characteristic polynomial of the complex representation") {
    auto c2 = family(Family::C, 2);
    QPoly p = characteristic_polynomial(regular_matrix(c2.algebra->element({Rat(3), Rat(4)})));
    // t^2 - 6t + 25
    REQUIRE(p.size() == 3);
    CHECK(p[0] == Rat(25));
    CHECK(p[1] == Rat(-6));
    CHECK(p[2] == Rat(1));
}

TEST_CASE("zero-divisor geometry dimensions") {
    ZdGeometry two_lines = zd_structure({2, 0});
    REQUIRE(two_lines.components.size() == 2);
    CHECK(two_lines.ambient_dim == 2);
    CHECK(two_lines.components[0].zero_set_dim == 1);
    CHECK(two_lines.components[1].zero_set_dim == 1);

    ZdGeometry mixed = zd_structure({1, 1});
    REQUIRE(mixed.components.size() == 2);
    CHECK(!mixed.components[0].complex_component);
    CHECK(mixed.components[0].zero_set_dim == 2);
    CHECK(mixed.components[1].complex_component);
    CHECK(mixed.components[1].zero_set_dim == 1);

    ZdGeometry field = zd_structure({1, 0});
    REQUIRE(field.components.size() == 1);
    CHECK(field.components[0].zero_set_dim == 0);  // only the zero element
}

TEST_CASE("geometry dimensions agree with exact annihilators of idempotents") {
    // R x R: each idempotent's annihilator is the other line
    auto rxr = direct_product(family(Family::H, 1), family(Family::H, 1));
    Element e1 = rxr.algebra->basis_element(1);
    CHECK(annihilator(e1).dim() == static_cast<std::size_t>(zd_structure({2, 0}).components[0].zero_set_dim));

    // R x C: the real idempotent's annihilator is the complex plane and
    // conversely
    auto rxc = direct_product(family(Family::H, 1), family(Family::C, 2));
    Element er = rxc.algebra->basis_element(1);
    Element ec = rxc.algebra->unit() - er;
    ZdGeometry geo = zd_structure({1, 1});
    CHECK(annihilator(er).dim() == static_cast<std::size_t>(geo.components[0].zero_set_dim));
    CHECK(annihilator(ec).dim() == static_cast<std::size_t>(geo.components[1].zero_set_dim));
}

TEST_CASE("zero divisors of H(3) lie on the two component varieties") {
    auto h3 = family(Family::H, 3);
    std::mt19937 rng(3);
    for (int t = 0; t < 100; ++t) {
        long a = static_cast<long>(rng() % 19) - 9, b = static_cast<long>(rng() % 19) - 9;
        // a + b + c = 0 plane
        Element plane = h3.algebra->element({Rat(a), Rat(b), Rat(-a - b)});
        CHECK(is_zero_divisor(plane));
        // a = b = c line
        Element line = h3.algebra->element({Rat(a), Rat(a), Rat(a)});
        CHECK(is_zero_divisor(line));
    }
}
