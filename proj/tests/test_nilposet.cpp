#include <doctest.h>

#include "algkit/nilposet.hpp"
#include "algkit/parse.hpp"
#include "algkit/presentation.hpp"

using namespace algkit;

TEST_CASE("multiplicative basis detection") {
    CHECK(is_multiplicative_basis(family(Family::G, 3).algebra).ok);
    CHECK(is_multiplicative_basis(family(Family::H, 3).algebra).ok);  // j * j^2 = 1

    // {1, 1+j} is multiplicative after all: (1+j)^2 = 2(1+j)
    auto h = family(Family::H, 2);
    auto idempotent_line = with_basis(h.algebra, {{Rat(1), Rat(0)}, {Rat(1), Rat(1)}}, {"1", "u"}, 0);
    CHECK(is_multiplicative_basis(idempotent_line).ok);

    // {1, 2+j} is not: (2+j)^2 = 5+4j is proportional to neither basis vector
    auto rebased = with_basis(h.algebra, {{Rat(1), Rat(0)}, {Rat(2), Rat(1)}}, {"1", "u"}, 0);
    auto chk = is_multiplicative_basis(rebased);
    CHECK(!chk.ok);
    CHECK(chk.bad_i == 1);
    CHECK(chk.bad_j == 1);
}

TEST_CASE("nil poset preconditions") {
    CHECK_THROWS_AS(build_nil_poset(family(Family::H, 3).algebra), NotUnitalNil);
    auto h = family(Family::H, 2);
    auto rebased = with_basis(h.algebra, {{Rat(1), Rat(0)}, {Rat(2), Rat(1)}}, {"1", "u"}, 0);
    CHECK_THROWS_AS(build_nil_poset(rebased), NotMultiplicative);
}

TEST_CASE("nil chains") {
    for (int n = 2; n <= 6; ++n) {
        NilPoset p = build_nil_poset(family(Family::G, n).algebra);
        REQUIRE(p.node_count() == static_cast<std::size_t>(n + 1));
        REQUIRE(p.covers().size() == static_cast<std::size_t>(n));
        for (std::size_t x = 0; x < p.node_count(); ++x)
            for (std::size_t y = 0; y < p.node_count(); ++y) CHECK(p.leq(x, y) == (x <= y));
    }
}

TEST_CASE("the totally nil pair gives a diamond") {
    NilPoset p = build_nil_poset(family(Family::Xi, 2).algebra);
    CHECK(p.node_count() == 4);
    CHECK(p.covers().size() == 4);
    CHECK(is_lattice(p).ok);
    CHECK(!p.leq(1, 2));
    CHECK(!p.leq(2, 1));
}

TEST_CASE("the scalars give the two-node poset") {
    NilPoset p = build_nil_poset(family(Family::H, 1).algebra);
    CHECK(p.node_count() == 2);
    REQUIRE(p.covers().size() == 1);
    CHECK(p.covers()[0] == std::pair<std::size_t, std::size_t>{0, 1});
}

TEST_CASE("poset axioms hold after construction") {
    for (const auto& pa : {family(Family::G, 4), family(Family::Xi, 3)}) {
        NilPoset p = build_nil_poset(pa.algebra);
        const std::size_t nodes = p.node_count();
        for (std::size_t x = 0; x < nodes; ++x) {
            CHECK(p.leq(x, x));
            for (std::size_t y = 0; y < nodes; ++y) {
                if (x != y) CHECK(!(p.leq(x, y) && p.leq(y, x)));
                for (std::size_t z = 0; z < nodes; ++z)
                    if (p.leq(x, y) && p.leq(y, z)) CHECK(p.leq(x, z));
            }
        }
        // covers form a transitive reduction: closure of covers = relation
        std::vector<char> closure(nodes * nodes, 0);
        for (std::size_t x = 0; x < nodes; ++x) closure[x * nodes + x] = 1;
        for (const auto& [lo, hi] : p.covers()) closure[lo * nodes + hi] = 1;
        for (std::size_t k = 0; k < nodes; ++k)
            for (std::size_t x = 0; x < nodes; ++x)
                if (closure[x * nodes + k])
                    for (std::size_t y = 0; y < nodes; ++y)
                        if (closure[k * nodes + y]) closure[x * nodes + y] = 1;
        for (std::size_t x = 0; x < nodes; ++x)
            for (std::size_t y = 0; y < nodes; ++y) CHECK(static_cast<bool>(closure[x * nodes + y]) == p.leq(x, y));
    }
}

TEST_CASE("the tensor square of the 3-nil numbers") {
    auto t = tensor(family(Family::G, 3), family(Family::G, 3));
    NilPoset p = build_nil_poset(t.algebra);
    CHECK(p.node_count() == 10);

    // the top basis monomial is present and covers into the zero node
    std::size_t top = 10;
    for (std::size_t x = 0; x < 9; ++x)
        if (p.node_label(x) == "e^2*e2^2") top = x;
    REQUIRE(top < 9);
    CHECK(p.leq(top, p.zero_node()));

    // reading annihilators off the poset agrees with the exact kernels
    for (std::size_t i = 0; i < 9; ++i) {
        Subspace from_poset = annihilator_from_poset(p, i);
        Subspace exact = annihilator(t.algebra->basis_element(i));
        CHECK(from_poset.same_span(exact));
        for (const Element& b : from_poset.basis()) CHECK(exact.contains(b));
    }

    // the poset reading for e*e2
    std::size_t ee2 = 10;
    for (std::size_t x = 0; x < 9; ++x)
        if (p.node_label(x) == "e*e2") ee2 = x;
    REQUIRE(ee2 < 9);
    Subspace ann = annihilator_from_poset(p, ee2);
    CHECK(ann.dim() == 5);
    for (const char* w : {"e^2", "e2^2", "e^2*e2", "e*e2^2", "e^2*e2^2"})
        CHECK(ann.contains(parse_element(w, t.algebra)));
}

TEST_CASE("reading Ann(e^2) off the 3-nil chain") {
    auto g3 = family(Family::G, 3);
    NilPoset p = build_nil_poset(g3.algebra);
    Subspace ann = annihilator_from_poset(p, 2);  // node e^2
    CHECK(ann.dim() == 2);
    CHECK(ann.contains(parse_element("e", g3.algebra)));
    CHECK(ann.contains(parse_element("e^2", g3.algebra)));
}

TEST_CASE("poset annihilator reading is contained in the exact annihilator") {
    for (const auto& pa : {family(Family::G, 4), family(Family::Xi, 3)}) {
        NilPoset p = build_nil_poset(pa.algebra);
        for (std::size_t i = 0; i < pa.algebra->dim(); ++i) {
            Subspace from_poset = annihilator_from_poset(p, i);
            Subspace exact = annihilator(pa.algebra->basis_element(i));
            for (const Element& b : from_poset.basis()) CHECK(exact.contains(b));
            CHECK(from_poset.same_span(exact));
        }
        CHECK(annihilator_from_poset(p, p.unit_node()).is_trivial());
    }
}

TEST_CASE("lattice checks") {
    CHECK(is_lattice(build_nil_poset(family(Family::G, 3).algebra)).ok);
    CHECK(is_lattice(build_nil_poset(family(Family::Xi, 2).algebra)).ok);

    auto nl = non_lattice_example();
    NilPoset p = build_nil_poset(nl.algebra);
    LatticeCheck lc = is_lattice(p);
    REQUIRE(!lc.ok);
    CHECK(p.node_label(lc.a) == "e");
    CHECK(p.node_label(lc.b) == "g");
    REQUIRE(lc.minimal_bounds.size() == 2);
    std::vector<std::string> mubs{p.node_label(lc.minimal_bounds[0]), p.node_label(lc.minimal_bounds[1])};
    CHECK(((mubs[0] == "zeta" && mubs[1] == "xi") || (mubs[0] == "xi" && mubs[1] == "zeta")));
}

TEST_CASE("DOT rendering is deterministic with a stable shape") {
    NilPoset p = build_nil_poset(family(Family::G, 3).algebra);
    const std::string expected =
        "digraph nilposet {\n"
        "  rankdir=BT;\n"
        "  1 [label=\"1\"];\n"
        "  e [label=\"e\"];\n"
        "  e_2 [label=\"e^2\"];\n"
        "  0 [label=\"0\"];\n"
        "  1 -> e;\n"
        "  e -> e_2;\n"
        "  e_2 -> 0;\n"
        "}\n";
    CHECK(hasse_dot(p) == expected);
    CHECK(hasse_dot(p) == hasse_dot(p));

    NilPoset xi = build_nil_poset(family(Family::Xi, 2).algebra);
    std::string dot = hasse_dot(xi);
    CHECK(dot.find("rank=same") != std::string::npos);
    CHECK(std::count(dot.begin(), dot.end(), '>') == 4);
}
