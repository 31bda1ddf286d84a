#pragma once

// The nil poset of a unital nil algebra with a multiplicative basis: nodes
// are the basis vectors plus a formal zero node, with v_i below v_j when
// some basis multiple sends v_i to a nonzero scalar of v_j (scalar 0 is
// admitted only for relations targeting the zero node, and the zero node
// itself is an admissible right factor, so every node sits below 0). The
// order is the transitive closure of that relation; antisymmetry is checked,
// not assumed.

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "algkit/algebra.hpp"
#include "algkit/error.hpp"

namespace algkit {

struct MultiplicativeBasisCheck {
    bool ok;
    std::size_t bad_i = 0, bad_j = 0;  // violating pair when !ok
};

// A basis is multiplicative when every product of two basis vectors is a
// scalar multiple of a single basis vector (zero allowed).
inline MultiplicativeBasisCheck is_multiplicative_basis(const AlgebraPtr& a) {
    for (std::size_t i = 0; i < a->dim(); ++i)
        for (std::size_t j = 0; j < a->dim(); ++j) {
            int nonzero = 0;
            for (std::size_t k = 0; k < a->dim(); ++k)
                if (!is_zero(a->c(i, j, k))) ++nonzero;
            if (nonzero > 1) return {false, i, j};
        }
    return {true};
}

class NilPoset {
   public:
    // node indices 0..dim-1 are basis vectors; node dim is the zero node
    std::size_t node_count() const { return parent_->dim() + 1; }
    std::size_t zero_node() const { return parent_->dim(); }
    std::size_t unit_node() const { return parent_->unit_index(); }
    const AlgebraPtr& parent() const { return parent_; }

    bool leq(std::size_t x, std::size_t y) const { return rel_[x * node_count() + y]; }

    const std::vector<std::pair<std::size_t, std::size_t>>& covers() const { return covers_; }

    std::string node_label(std::size_t x) const { return x == zero_node() ? "0" : parent_->label(x); }

    friend NilPoset build_nil_poset(const AlgebraPtr& a);

   private:
    AlgebraPtr parent_;
    std::vector<char> rel_;  // reflexive-transitive closure
    std::vector<std::pair<std::size_t, std::size_t>> covers_;
};

// Requires a unital nil algebra with a multiplicative basis; verifies the
// poset axioms exhaustively and reports NotAntisymmetric with the offending
// pair if the definition fails to give an order on this basis.
inline NilPoset build_nil_poset(const AlgebraPtr& a) {
    detail::require_commutative(*a, "build_nil_poset");
    auto mult = is_multiplicative_basis(a);
    if (!mult.ok) throw NotMultiplicative(mult.bad_i, mult.bad_j);
    if (!is_unital_nil(a)) throw NotUnitalNil();

    const std::size_t n = a->dim();
    const std::size_t nodes = n + 1;
    std::vector<char> rel(nodes * nodes, 0);
    auto set = [&](std::size_t x, std::size_t y) { rel[x * nodes + y] = 1; };

    for (std::size_t x = 0; x < nodes; ++x) set(x, x);
    for (std::size_t x = 0; x < n; ++x) set(x, n);  // the zero node is an admissible right factor
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            // v_i * v_k = c v_j for a single j (multiplicative basis)
            std::size_t j = nodes;
            for (std::size_t t = 0; t < n; ++t)
                if (!is_zero(a->c(i, k, t))) j = t;
            if (j == nodes)
                set(i, n);  // product vanished
            else
                set(i, j);  // c != 0 by construction
        }

    // reflexive-transitive closure
    for (std::size_t k = 0; k < nodes; ++k)
        for (std::size_t x = 0; x < nodes; ++x) {
            if (!rel[x * nodes + k]) continue;
            for (std::size_t y = 0; y < nodes; ++y)
                if (rel[k * nodes + y]) rel[x * nodes + y] = 1;
        }

    for (std::size_t x = 0; x < nodes; ++x)
        for (std::size_t y = x + 1; y < nodes; ++y)
            if (rel[x * nodes + y] && rel[y * nodes + x]) throw NotAntisymmetric(x, y);

    NilPoset p;
    p.parent_ = a;
    p.rel_ = std::move(rel);
    for (std::size_t x = 0; x < nodes; ++x)
        for (std::size_t y = 0; y < nodes; ++y) {
            if (x == y || !p.rel_[x * nodes + y]) continue;
            bool direct = true;
            for (std::size_t z = 0; z < nodes && direct; ++z) {
                if (z == x || z == y) continue;
                if (p.rel_[x * nodes + z] && p.rel_[z * nodes + y]) direct = false;
            }
            if (direct) p.covers_.push_back({x, y});
        }
    return p;
}

// Span of the basis vectors killed by the node's basis vector. Contained in
// the exact annihilator; equals it when the annihilator is basis-spanned.
inline Subspace annihilator_from_poset(const NilPoset& p, std::size_t node) {
    const AlgebraPtr& a = p.parent();
    if (node >= a->dim()) throw Error("annihilator_from_poset needs a basis node");
    std::vector<Element> basis;
    for (std::size_t k = 0; k < a->dim(); ++k) {
        bool kills = true;
        for (std::size_t t = 0; t < a->dim(); ++t)
            if (!is_zero(a->c(node, k, t))) kills = false;
        if (kills) basis.push_back(a->basis_element(k));
    }
    return Subspace(a, std::move(basis));
}

struct LatticeCheck {
    bool ok;
    std::size_t a = 0, b = 0;                     // offending pair when !ok
    std::vector<std::size_t> minimal_bounds;      // its minimal upper (or maximal lower) bounds
    bool join_failure = true;                     // false when the meet failed
};

// Every pair of nodes must have a unique least upper bound and a unique
// greatest lower bound.
inline LatticeCheck is_lattice(const NilPoset& p) {
    const std::size_t nodes = p.node_count();
    auto minimal_of = [&](std::vector<std::size_t> xs) {
        std::vector<std::size_t> out;
        for (std::size_t x : xs) {
            bool minimal = true;
            for (std::size_t y : xs)
                if (y != x && p.leq(y, x)) minimal = false;
            if (minimal) out.push_back(x);
        }
        return out;
    };
    auto maximal_of = [&](std::vector<std::size_t> xs) {
        std::vector<std::size_t> out;
        for (std::size_t x : xs) {
            bool maximal = true;
            for (std::size_t y : xs)
                if (y != x && p.leq(x, y)) maximal = false;
            if (maximal) out.push_back(x);
        }
        return out;
    };
    for (std::size_t a = 0; a < nodes; ++a)
        for (std::size_t b = a + 1; b < nodes; ++b) {
            std::vector<std::size_t> uppers, lowers;
            for (std::size_t c = 0; c < nodes; ++c) {
                if (p.leq(a, c) && p.leq(b, c)) uppers.push_back(c);
                if (p.leq(c, a) && p.leq(c, b)) lowers.push_back(c);
            }
            std::vector<std::size_t> mins = minimal_of(uppers);
            if (mins.size() != 1) return {false, a, b, mins, true};
            std::vector<std::size_t> maxs = maximal_of(lowers);
            if (maxs.size() != 1) return {false, a, b, maxs, false};
        }
    return {true};
}

namespace detail {

inline std::string sanitize_dot_id(const std::string& label) {
    std::string out;
    for (char c : label) out += (std::isalnum(static_cast<unsigned char>(c)) ? c : '_');
    if (out.empty()) out = "_";
    return out;
}

}  // namespace detail

// Deterministic DOT rendering: edges are the covering relations, nodes are
// ranked by their level (longest chain from the unit), ids are sanitized
// labels, and edges are emitted in lexicographic (lower, upper) order.
inline std::string hasse_dot(const NilPoset& p) {
    const std::size_t nodes = p.node_count();
    std::vector<std::string> ids(nodes);
    for (std::size_t x = 0; x < nodes; ++x) {
        std::string id = detail::sanitize_dot_id(p.node_label(x));
        int suffix = 2;
        std::string candidate = id;
        while (std::find(ids.begin(), ids.begin() + static_cast<long>(x), candidate) !=
               ids.begin() + static_cast<long>(x))
            candidate = id + "_" + std::to_string(suffix++);
        ids[x] = candidate;
    }

    // level = longest cover path from the unit node
    std::vector<int> level(nodes, 0);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [lo, hi] : p.covers())
            if (level[hi] < level[lo] + 1) {
                level[hi] = level[lo] + 1;
                changed = true;
            }
    }

    std::ostringstream out;
    out << "digraph nilposet {\n  rankdir=BT;\n";
    for (std::size_t x = 0; x < nodes; ++x)
        out << "  " << ids[x] << " [label=\"" << p.node_label(x) << "\"];\n";
    int max_level = 0;
    for (std::size_t x = 0; x < nodes; ++x) max_level = std::max(max_level, level[x]);
    for (int l = 0; l <= max_level; ++l) {
        std::vector<std::string> group;
        for (std::size_t x = 0; x < nodes; ++x)
            if (level[x] == l) group.push_back(ids[x]);
        if (group.size() < 2) continue;
        std::sort(group.begin(), group.end());
        out << "  { rank=same;";
        for (const std::string& g : group) out << " " << g << ";";
        out << " }\n";
    }
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& [lo, hi] : p.covers()) edges.push_back({ids[lo], ids[hi]});
    std::sort(edges.begin(), edges.end());
    for (const auto& [lo, hi] : edges) out << "  " << lo << " -> " << hi << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace algkit
