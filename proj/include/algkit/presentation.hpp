#pragma once

// Algebra presentations: parse quotient/family/tensor/product expressions,
// normalize the relations into a terminating rewrite system, extract
// structure constants, and expose the evaluation homomorphism plus the
// degenerate/basic predicates and an isomorphism check.
//
// Supported relation classes for build():
//   (a) univariate polynomials in a single generator,
//   (b) relations whose leading (deg-lex) monomial is a product of two
//       generators, rewriting it to smaller monomials,
//   (c) eliminations: a generator appearing as a lone linear term.
// Anything else raises UnsupportedForm; a generator left without a bounding
// power rule raises InfiniteDimensional.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "algkit/algebra.hpp"
#include "algkit/error.hpp"
#include "algkit/formal.hpp"
#include "algkit/parse.hpp"
#include "algkit/qpoly.hpp"

namespace algkit {

struct Presentation {
    std::vector<std::string> generators;
    std::vector<FormalPoly> relations;
    std::string source_text;
};

enum class Family { H, C, G, Xi, CC };

inline std::optional<Family> family_from_name(const std::string& name) {
    if (name == "H") return Family::H;
    if (name == "C") return Family::C;
    if (name == "G") return Family::G;
    if (name == "Xi") return Family::Xi;
    if (name == "CC") return Family::CC;
    return std::nullopt;
}

inline std::string family_name(Family f) {
    switch (f) {
        case Family::H: return "H";
        case Family::C: return "C";
        case Family::G: return "G";
        case Family::Xi: return "Xi";
        case Family::CC: return "CC";
    }
    return "?";
}

struct PresentedAlgebra {
    Presentation presentation;
    AlgebraPtr algebra;
    std::vector<Element> generator_images;                 // one per presentation generator
    std::optional<std::vector<Monomial>> monomial_basis;   // per basis index, over the generators
    std::optional<std::pair<Family, int>> family_tag;
};

inline std::string presentation_to_string(const Presentation& p) {
    std::string out = "R[";
    for (std::size_t i = 0; i < p.generators.size(); ++i) {
        if (i) out += ",";
        out += p.generators[i];
    }
    out += "]/<";
    for (std::size_t i = 0; i < p.relations.size(); ++i) {
        if (i) out += ", ";
        out += formal_poly_to_string(p.relations[i], p.generators, /*integerize=*/true);
    }
    out += ">";
    return out;
}

namespace detail {

struct Rule {
    Monomial lead;
    FormalPoly rhs;  // every rhs monomial is deg-lex smaller than lead
};

struct RewriteEngine {
    std::size_t width = 0;
    std::vector<Rule> rules;

    const Rule* find_rule(const Monomial& m, bool reversed) const {
        if (!reversed) {
            for (const Rule& r : rules)
                if (monomial_divides(r.lead, m)) return &r;
        } else {
            for (auto it = rules.rbegin(); it != rules.rend(); ++it)
                if (monomial_divides(it->lead, m)) return &*it;
        }
        return nullptr;
    }

    bool reducible(const Monomial& m) const { return find_rule(m, false) != nullptr; }

    // Normal form. The two strategies pick different terms and rules so a
    // non-confluent system shows up as a mismatch between them.
    FormalPoly reduce(FormalPoly p, bool alt) const {
        long steps = 0;
        while (true) {
            Monomial target;
            Rat coeff;
            const Rule* rule = nullptr;
            if (!alt) {
                for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
                    if (const Rule* r = find_rule(it->first, false)) {
                        target = it->first;
                        coeff = it->second;
                        rule = r;
                        break;
                    }
                }
            } else {
                for (const auto& [m, c] : p.terms()) {
                    if (const Rule* r = find_rule(m, true)) {
                        target = m;
                        coeff = c;
                        rule = r;
                        break;
                    }
                }
            }
            if (!rule) return p;
            Monomial q = monomial_quotient(target, rule->lead);
            p.add_term(target, -coeff);
            for (const auto& [mr, cr] : rule->rhs.terms()) p.add_term(monomial_mul(q, mr), coeff * cr);
            if (++steps > 200000) throw UnsupportedForm("term rewriting did not terminate");
        }
    }
};

inline std::pair<std::size_t, std::size_t> quadratic_slots(const Monomial& m) {
    std::size_t first = m.size(), second = m.size();
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (unsigned e = 0; e < m[i]; ++e) {
            if (first == m.size())
                first = i;
            else
                second = i;
        }
    }
    return {first, second};
}

}  // namespace detail

// Normalizes a presentation and extracts the quotient algebra.
inline PresentedAlgebra build(const Presentation& pres) {
    const std::size_t w = pres.generators.size();
    for (std::size_t i = 0; i < w; ++i)
        for (std::size_t j = i + 1; j < w; ++j)
            if (pres.generators[i] == pres.generators[j])
                throw Error("duplicate generator '" + pres.generators[i] + "'");

    std::vector<FormalPoly> work;
    for (const FormalPoly& r : pres.relations) {
        if (r.width() != w) throw DimensionMismatch("relation width does not match generator count");
        if (!r.is_zero()) work.push_back(r);
    }

    std::vector<bool> active(w, true);
    std::vector<FormalPoly> elim_expr(w, FormalPoly(w));

    auto substitute_everywhere = [&](std::size_t var, const FormalPoly& expr) {
        for (FormalPoly& r : work)
            if (r.uses_var(var)) r = r.substituted(var, expr);
        for (std::size_t i = 0; i < w; ++i)
            if (!active[i] && elim_expr[i].uses_var(var)) elim_expr[i] = elim_expr[i].substituted(var, expr);
    };

    std::map<std::size_t, QPoly> univ;  // var -> monic univariate rule, degree >= 2
    std::map<std::pair<std::size_t, std::size_t>, FormalPoly> quad_leads;  // for power-bound lookup
    detail::RewriteEngine eng;
    eng.width = w;

    int guard = 0;
    while (true) {
        if (++guard > 500) throw UnsupportedForm("presentation normalization did not stabilize");
        std::erase_if(work, [](const FormalPoly& r) { return r.is_zero(); });
        for (const FormalPoly& r : work)
            if (r.is_constant()) throw Inconsistent();

        // (c) eliminations: a generator occurring as a lone linear term.
        bool eliminated = false;
        for (std::size_t ri = 0; ri < work.size() && !eliminated; ++ri) {
            const FormalPoly& r = work[ri];
            for (const auto& [m, c] : r.terms()) {
                if (total_degree(m) != 1) continue;
                std::size_t var = w;
                for (std::size_t i = 0; i < w; ++i)
                    if (m[i] == 1) var = i;
                bool lone = true;
                for (const auto& [m2, c2] : r.terms()) {
                    if (m2 == m) continue;
                    if (m2[var] > 0) {
                        lone = false;
                        break;
                    }
                }
                if (!lone) continue;
                FormalPoly expr = r;
                expr.add_term(m, -c);
                expr = expr.scaled(Rat(-1) / c);
                active[var] = false;
                elim_expr[var] = expr;
                work.erase(work.begin() + static_cast<long>(ri));
                substitute_everywhere(var, expr);
                eliminated = true;
                break;
            }
        }
        if (eliminated) continue;

        // (a) univariate relations, merged per generator by exact gcd.
        univ.clear();
        std::vector<FormalPoly> rest;
        bool univariate_collapsed = false;
        for (const FormalPoly& r : work) {
            auto sv = r.single_var();
            if (sv) {
                QPoly u = r.univariate(*sv);
                auto it = univ.find(*sv);
                if (it == univ.end())
                    univ[*sv] = qmonic(u);
                else
                    it->second = qgcd(it->second, u);
            } else {
                rest.push_back(r);
            }
        }
        for (const auto& [var, u] : univ) {
            if (qdeg(u) == 0) throw Inconsistent();
            if (qdeg(u) == 1) univariate_collapsed = true;
        }
        if (univariate_collapsed) {
            // A degree-1 univariate is an elimination; rebuild and rescan.
            work = rest;
            for (const auto& [var, u] : univ) work.push_back(FormalPoly::from_univariate(w, var, u));
            continue;
        }

        // (b) quadratic-leading rules, inter-reduced against everything seen.
        eng.rules.clear();
        quad_leads.clear();
        for (const auto& [var, u] : univ) {
            Monomial lead(w, 0);
            lead[var] = static_cast<unsigned>(qdeg(u));
            QPoly tail = u;
            tail.pop_back();
            eng.rules.push_back({lead, FormalPoly::from_univariate(w, var, tail).scaled(Rat(-1))});
        }
        bool changed = false;
        std::vector<FormalPoly> survivors;
        for (FormalPoly r : rest) {
            r = eng.reduce(std::move(r), false);
            if (r.is_zero()) continue;
            if (r.is_constant()) throw Inconsistent();
            if (r.single_var()) {
                survivors.push_back(r);  // merged by gcd on the next pass
                changed = true;
                continue;
            }
            const Monomial& lead = r.leading_monomial();
            if (total_degree(lead) != 2)
                throw UnsupportedForm("relation with leading monomial '" +
                                      monomial_to_string(lead, pres.generators) +
                                      "' is outside the supported classes");
            FormalPoly monic = r.scaled(Rat(1) / r.leading_coefficient());
            FormalPoly rhs = monic;
            rhs.add_term(lead, Rat(-1));
            rhs = rhs.scaled(Rat(-1));
            eng.rules.push_back({lead, rhs});
            quad_leads[detail::quadratic_slots(lead)] = rhs;
            survivors.push_back(monic);
        }
        if (changed) {
            work = survivors;
            for (const auto& [var, u] : univ) work.push_back(FormalPoly::from_univariate(w, var, u));
            continue;
        }
        break;
    }

    // Exponent bounds per active generator.
    std::vector<unsigned> bound(w, 0);
    for (std::size_t i = 0; i < w; ++i) {
        if (!active[i]) {
            bound[i] = 1;  // exponent always 0
            continue;
        }
        unsigned b = 0;
        if (auto it = univ.find(i); it != univ.end()) b = static_cast<unsigned>(qdeg(it->second));
        if (quad_leads.count({i, i})) b = (b == 0) ? 2 : std::min(b, 2u);
        if (b == 0)
            throw InfiniteDimensional("generator '" + pres.generators[i] +
                                      "' has no bounding power relation; the quotient is infinite-dimensional");
        bound[i] = b;
    }

    // Enumerate normal-form monomials.
    constexpr std::size_t kDimCap = 4096;
    std::set<Monomial, DegLexLess> basis_set;
    Monomial odo(w, 0);
    while (true) {
        if (!eng.reducible(odo)) {
            basis_set.insert(odo);
            if (basis_set.size() > kDimCap) throw Error("quotient dimension exceeds the supported cap");
        }
        std::size_t pos = 0;
        while (pos < w) {
            if (odo[pos] + 1 < bound[pos]) {
                ++odo[pos];
                break;
            }
            odo[pos] = 0;
            ++pos;
        }
        if (pos == w) break;
    }
    std::vector<Monomial> basis(basis_set.begin(), basis_set.end());
    std::map<Monomial, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
    const std::size_t n = basis.size();

    auto to_coords = [&](const FormalPoly& nf) {
        QVec coords(n, Rat(0));
        for (const auto& [m, c] : nf.terms()) {
            auto it = index.find(m);
            if (it == index.end()) throw UnsupportedForm("reduction left a non-basis monomial");
            coords[it->second] += c;
        }
        return coords;
    };

    std::vector<Rat> table;
    table.reserve(n * n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            FormalPoly prod(w);
            prod.add_term(monomial_mul(basis[a], basis[b]), Rat(1));
            FormalPoly nf = eng.reduce(prod, false);
            FormalPoly nf_alt = eng.reduce(prod, true);
            if (!(nf == nf_alt))
                throw UnsupportedForm("rewrite system is not confluent on basis products");
            QVec coords = to_coords(nf);
            for (std::size_t k = 0; k < n; ++k) table.push_back(coords[k]);
        }

    std::vector<std::string> labels;
    for (const Monomial& m : basis) labels.push_back(monomial_to_string(m, pres.generators));

    AlgebraPtr algebra;
    try {
        algebra = make_algebra(n, labels, index.at(Monomial(w, 0)), std::move(table));
    } catch (const NonAssociative&) {
        throw UnsupportedForm(
            "relations are not closed under rewriting (iterated products reduce inconsistently); the "
            "presentation needs machinery outside the supported classes");
    }

    PresentedAlgebra out;
    out.presentation = pres;
    out.algebra = algebra;
    out.monomial_basis = basis;
    for (std::size_t i = 0; i < w; ++i) {
        FormalPoly image(w);
        if (active[i]) {
            image = FormalPoly::variable(w, i);
        } else {
            image = elim_expr[i];
            // Expand any reference to another eliminated generator.
            bool again = true;
            while (again) {
                again = false;
                for (std::size_t t = 0; t < w; ++t)
                    if (!active[t] && image.uses_var(t)) {
                        image = image.substituted(t, elim_expr[t]);
                        again = true;
                    }
            }
        }
        out.generator_images.push_back(algebra->element(to_coords(eng.reduce(image, false))));
    }

    // Each original relation must evaluate to zero under the images.
    for (const FormalPoly& r : pres.relations) {
        Element v = algebra->zero();
        for (const auto& [m, c] : r.terms()) {
            Element term = c * algebra->unit();
            for (std::size_t i = 0; i < w; ++i)
                for (unsigned e = 0; e < m[i]; ++e) term = term * out.generator_images[i];
            v = v + term;
        }
        if (!v.is_zero()) throw Error("internal: relation does not vanish in the extracted algebra");
    }
    return out;
}

// ---- named families ----

inline PresentedAlgebra family(Family f, int n) {
    if (n < 1) throw Error("family index must be at least 1");
    Presentation p;
    switch (f) {
        case Family::H: {
            p.generators = {"j"};
            QPoly rel(static_cast<std::size_t>(n) + 1, Rat(0));
            rel[0] = -1;
            rel[static_cast<std::size_t>(n)] = 1;
            p.relations.push_back(FormalPoly::from_univariate(1, 0, rel));
            break;
        }
        case Family::C: {
            p.generators = {"i"};
            QPoly rel(static_cast<std::size_t>(n) + 1, Rat(0));
            rel[0] = 1;
            rel[static_cast<std::size_t>(n)] = 1;
            p.relations.push_back(FormalPoly::from_univariate(1, 0, rel));
            break;
        }
        case Family::G: {
            p.generators = {"e"};
            QPoly rel(static_cast<std::size_t>(n) + 1, Rat(0));
            rel[static_cast<std::size_t>(n)] = 1;
            p.relations.push_back(FormalPoly::from_univariate(1, 0, rel));
            break;
        }
        case Family::Xi: {
            for (int i = 1; i <= n; ++i) p.generators.push_back("e" + std::to_string(i));
            std::size_t w = static_cast<std::size_t>(n);
            for (std::size_t i = 0; i < w; ++i)
                for (std::size_t j = i; j < w; ++j) {
                    Monomial m(w, 0);
                    m[i] += 1;
                    m[j] += 1;
                    FormalPoly rel(w);
                    rel.add_term(m, Rat(1));
                    p.relations.push_back(rel);
                }
            break;
        }
        case Family::CC: {
            for (int i = 1; i <= n; ++i) p.generators.push_back("i" + std::to_string(i));
            std::size_t w = static_cast<std::size_t>(n);
            for (std::size_t i = 0; i < w; ++i) {
                Monomial m(w, 0);
                m[i] = 2;
                FormalPoly rel(w);
                rel.add_term(m, Rat(1));
                rel.add_term(Monomial(w, 0), Rat(1));
                p.relations.push_back(rel);
            }
            break;
        }
    }
    p.source_text = family_name(f) + "(" + std::to_string(n) + ")";
    PresentedAlgebra out = build(p);
    out.family_tag = {{f, n}};
    return out;
}

// ---- canonical basic presentation (one generator per non-unit basis vector,
// relations v_i v_j = sum_k c_ijk v_k) ----

inline bool is_valid_ident(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

inline Presentation canonical_basic_presentation(const Algebra& a) {
    if (!a.commutative()) throw NotCommutative("canonical_basic_presentation");
    const std::size_t n = a.dim();
    std::vector<std::size_t> gen_of_basis;  // basis index per generator slot
    std::vector<std::string> names;
    auto taken = [&](const std::string& s) {
        return std::find(names.begin(), names.end(), s) != names.end();
    };
    static const char* fresh_pool[] = {"x", "y", "z", "u", "v", "w", "t", "s"};
    std::size_t fresh_i = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (i == a.unit_index()) continue;
        std::string name = a.label(i);
        if (!is_valid_ident(name) || taken(name)) {
            while (true) {
                std::string cand = fresh_i < 8 ? std::string(fresh_pool[fresh_i])
                                               : "x" + std::to_string(fresh_i - 7);
                ++fresh_i;
                if (!taken(cand)) {
                    name = cand;
                    break;
                }
            }
        }
        names.push_back(name);
        gen_of_basis.push_back(i);
    }
    const std::size_t w = names.size();
    std::vector<std::size_t> slot_of_basis(n, n);
    for (std::size_t s = 0; s < w; ++s) slot_of_basis[gen_of_basis[s]] = s;

    Presentation p;
    p.generators = names;
    for (std::size_t s = 0; s < w; ++s)
        for (std::size_t t = s; t < w; ++t) {
            std::size_t i = gen_of_basis[s], j = gen_of_basis[t];
            FormalPoly rel(w);
            Monomial m(w, 0);
            m[s] += 1;
            m[t] += 1;
            rel.add_term(m, Rat(1));
            for (std::size_t k = 0; k < n; ++k) {
                const Rat& c = a.c(i, j, k);
                if (is_zero(c)) continue;
                if (k == a.unit_index()) {
                    rel.add_term(Monomial(w, 0), -c);
                } else {
                    Monomial vk(w, 0);
                    vk[slot_of_basis[k]] = 1;
                    rel.add_term(vk, -c);
                }
            }
            p.relations.push_back(rel);
        }
    p.source_text = presentation_to_string(p);
    return p;
}

// Wraps a bare algebra as a PresentedAlgebra through its canonical basic
// presentation, with basis vectors as the generator images. Noncommutative
// algebras (whose relations the commutative polynomial ring cannot express)
// get an empty presentation.
inline PresentedAlgebra presented_from_algebra(const AlgebraPtr& alg, const std::string& source = "") {
    PresentedAlgebra out;
    out.algebra = alg;
    if (!alg->commutative()) {
        out.presentation.source_text = source;
        return out;
    }
    out.presentation = canonical_basic_presentation(*alg);
    if (!source.empty()) out.presentation.source_text = source;
    const std::size_t n = alg->dim();
    std::vector<Monomial> mb(n, Monomial(out.presentation.generators.size(), 0));
    std::size_t slot = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (i == alg->unit_index()) continue;
        out.generator_images.push_back(alg->basis_element(i));
        mb[i][slot] = 1;
        ++slot;
    }
    out.monomial_basis = mb;
    return out;
}

// ---- tensor product and direct product ----

namespace detail {

inline std::string combine_labels(const std::string& a, const std::string& b) {
    if (a == "1") return b;
    if (b == "1") return a;
    return a + "*" + b;
}

inline void dedupe_labels(std::vector<std::string>& labels) {
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (labels[i] == labels[j]) {
                int suffix = 2;
                std::string base = labels[i];
                while (std::find(labels.begin(), labels.end(), base + "_" + std::to_string(suffix)) != labels.end())
                    ++suffix;
                labels[i] = base + "_" + std::to_string(suffix);
            }
}

}  // namespace detail

inline PresentedAlgebra tensor(const PresentedAlgebra& A, const PresentedAlgebra& B) {
    const Algebra& a = *A.algebra;
    const Algebra& b = *B.algebra;
    const std::size_t na = a.dim(), nb = b.dim();

    // Rename clashing generators of B.
    std::vector<std::string> gens = A.presentation.generators;
    std::vector<std::string> b_names;
    for (const std::string& g : B.presentation.generators) {
        std::string name = g;
        int suffix = 2;
        while (std::find(gens.begin(), gens.end(), name) != gens.end() ||
               std::find(b_names.begin(), b_names.end(), name) != b_names.end())
            name = g + std::to_string(suffix++);
        b_names.push_back(name);
    }
    const std::size_t wa = gens.size();
    gens.insert(gens.end(), b_names.begin(), b_names.end());
    const std::size_t w = gens.size();

    // Labels: relabel B through its monomial basis when available.
    std::vector<std::string> b_labels(nb);
    for (std::size_t j = 0; j < nb; ++j) {
        if (B.monomial_basis && j < B.monomial_basis->size())
            b_labels[j] = monomial_to_string((*B.monomial_basis)[j], b_names);
        else
            b_labels[j] = b.label(j);
    }
    std::vector<std::string> labels(na * nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j) labels[i * nb + j] = detail::combine_labels(a.label(i), b_labels[j]);
    detail::dedupe_labels(labels);

    std::vector<Rat> table(na * nb * na * nb * na * nb, Rat(0));
    const std::size_t n = na * nb;
    auto at = [&](std::size_t x, std::size_t y, std::size_t z) -> Rat& { return table[(x * n + y) * n + z]; };
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j)
            for (std::size_t k = 0; k < na; ++k)
                for (std::size_t l = 0; l < nb; ++l)
                    for (std::size_t p = 0; p < na; ++p) {
                        if (is_zero(a.c(i, k, p))) continue;
                        for (std::size_t q = 0; q < nb; ++q) {
                            const Rat& cb = b.c(j, l, q);
                            if (is_zero(cb)) continue;
                            at(i * nb + j, k * nb + l, p * nb + q) = a.c(i, k, p) * cb;
                        }
                    }

    AlgebraPtr alg = make_algebra(n, labels, a.unit_index() * nb + b.unit_index(), std::move(table));

    PresentedAlgebra out;
    out.algebra = alg;
    out.presentation.generators = gens;
    std::vector<std::size_t> slot_a(wa), slot_b(b_names.size());
    for (std::size_t i = 0; i < wa; ++i) slot_a[i] = i;
    for (std::size_t i = 0; i < b_names.size(); ++i) slot_b[i] = wa + i;
    for (const FormalPoly& r : A.presentation.relations) out.presentation.relations.push_back(r.remapped(w, slot_a));
    for (const FormalPoly& r : B.presentation.relations) out.presentation.relations.push_back(r.remapped(w, slot_b));
    out.presentation.source_text =
        "tensor(" + A.presentation.source_text + "," + B.presentation.source_text + ")";

    for (const Element& img : A.generator_images) {
        QVec coords(n, Rat(0));
        for (std::size_t i = 0; i < na; ++i) coords[i * nb + b.unit_index()] = img.coord(i);
        out.generator_images.push_back(alg->element(std::move(coords)));
    }
    for (const Element& img : B.generator_images) {
        QVec coords(n, Rat(0));
        for (std::size_t j = 0; j < nb; ++j) coords[a.unit_index() * nb + j] = img.coord(j);
        out.generator_images.push_back(alg->element(std::move(coords)));
    }

    if (A.monomial_basis && B.monomial_basis) {
        std::vector<Monomial> mb;
        for (std::size_t i = 0; i < na; ++i)
            for (std::size_t j = 0; j < nb; ++j) {
                Monomial m((*A.monomial_basis)[i]);
                m.resize(w, 0);
                const Monomial& mj = (*B.monomial_basis)[j];
                for (std::size_t t = 0; t < mj.size(); ++t) m[wa + t] = mj[t];
                mb.push_back(std::move(m));
            }
        out.monomial_basis = mb;
    }
    return out;
}

inline PresentedAlgebra direct_product(const PresentedAlgebra& A, const PresentedAlgebra& B) {
    const Algebra& a = *A.algebra;
    const Algebra& b = *B.algebra;
    const std::size_t na = a.dim(), nb = b.dim(), n = na + nb;

    // Pick idempotent label atoms that do not collide with existing ones.
    std::set<std::string> atoms;
    for (const std::string& l : a.labels()) atoms.insert(l);
    for (const std::string& l : b.labels()) atoms.insert(l);
    std::string left = "e1", right = "e2";
    for (const char* base : {"e", "p", "q", "idm"}) {
        left = std::string(base) + "1";
        right = std::string(base) + "2";
        bool clash = false;
        for (const std::string& l : atoms)
            if (l == left || l == right || l.find(left + "*") == 0 || l.find(right + "*") == 0) clash = true;
        if (!clash) break;
    }

    // Basis in pair coordinates: the product unit first, then the left copy,
    // then the non-unit right basis vectors.
    auto pair_mul = [&](const QVec& x, const QVec& y) {
        QVec xa(x.begin(), x.begin() + static_cast<long>(na)), xb(x.begin() + static_cast<long>(na), x.end());
        QVec ya(y.begin(), y.begin() + static_cast<long>(na)), yb(y.begin() + static_cast<long>(na), y.end());
        QVec pa = a.multiply(xa, ya), pb = b.multiply(xb, yb);
        QVec out(n, Rat(0));
        for (std::size_t i = 0; i < na; ++i) out[i] = pa[i];
        for (std::size_t j = 0; j < nb; ++j) out[na + j] = pb[j];
        return out;
    };

    std::vector<QVec> basis_vecs;
    std::vector<std::string> labels;
    {
        QVec unit(n, Rat(0));
        unit[a.unit_index()] = 1;
        unit[na + b.unit_index()] = 1;
        basis_vecs.push_back(unit);
        labels.push_back("1");
    }
    for (std::size_t i = 0; i < na; ++i) {
        QVec v(n, Rat(0));
        v[i] = 1;
        basis_vecs.push_back(v);
        labels.push_back(i == a.unit_index() ? left : left + "*" + a.label(i));
    }
    for (std::size_t j = 0; j < nb; ++j) {
        if (j == b.unit_index()) continue;
        QVec v(n, Rat(0));
        v[na + j] = 1;
        basis_vecs.push_back(v);
        labels.push_back(right + "*" + b.label(j));
    }
    detail::dedupe_labels(labels);

    QMatrix p = QMatrix::from_columns(basis_vecs);
    auto pinv = inverse(p);
    if (!pinv) throw Error("internal: product basis is degenerate");
    std::vector<Rat> table;
    table.reserve(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            QVec coords = pinv->apply(pair_mul(basis_vecs[i], basis_vecs[j]));
            for (std::size_t k = 0; k < n; ++k) table.push_back(coords[k]);
        }
    AlgebraPtr alg = make_algebra(n, labels, 0, std::move(table));
    PresentedAlgebra out = presented_from_algebra(
        alg, "product(" + A.presentation.source_text + "," + B.presentation.source_text + ")");
    return out;
}

// ---- evaluation homomorphism and presentation predicates ----

inline Element ev(const PresentedAlgebra& p, const FormalPoly& f) {
    if (f.width() != p.presentation.generators.size())
        throw DimensionMismatch("formal polynomial width does not match the presentation");
    Element acc = p.algebra->zero();
    for (const auto& [m, c] : f.terms()) {
        Element term = c * p.algebra->unit();
        for (std::size_t i = 0; i < m.size(); ++i)
            for (unsigned e = 0; e < m[i]; ++e) term = term * p.generator_images[i];
        acc = acc + term;
    }
    return acc;
}

inline Element ev(const PresentedAlgebra& p, const std::string& text) {
    return ev(p, parse_formal_poly(text, p.presentation.generators));
}

// Degenerate: {1, images of the generators} linearly dependent.
inline bool is_degenerate(const PresentedAlgebra& p) {
    std::vector<QVec> vecs{p.algebra->unit().coords()};
    for (const Element& e : p.generator_images) vecs.push_back(e.coords());
    return rank(QMatrix::from_rows(vecs)) < vecs.size();
}

// Basic: {1, images of the generators} is a basis of the algebra.
inline bool is_basic(const PresentedAlgebra& p) {
    std::vector<QVec> vecs{p.algebra->unit().coords()};
    for (const Element& e : p.generator_images) vecs.push_back(e.coords());
    return vecs.size() == p.algebra->dim() && rank(QMatrix::from_rows(vecs)) == p.algebra->dim();
}

// The unit together with iterated products of the generator images must span
// the whole algebra.
inline bool generator_images_generate(const PresentedAlgebra& p) {
    std::vector<QVec> span{p.algebra->unit().coords()};
    for (const Element& e : p.generator_images) span.push_back(e.coords());
    span = canonical_span(span);
    while (true) {
        std::size_t before = span.size();
        std::vector<QVec> next = span;
        for (const QVec& x : span)
            for (const Element& g : p.generator_images) next.push_back(p.algebra->multiply(x, g.coords()));
        next = canonical_span(next);
        if (next.size() == before) break;
        span = std::move(next);
    }
    return span.size() == p.algebra->dim();
}

// psi is an algebra isomorphism iff it is invertible, maps unit to unit, and
// respects multiplication on basis pairs (columns of psi = images of basis).
inline bool iso_check(const Algebra& a, const Algebra& b, const QMatrix& psi) {
    if (a.dim() != b.dim()) throw DimensionMismatch("iso_check needs algebras of equal dimension");
    if (psi.rows() != a.dim() || psi.cols() != a.dim())
        throw DimensionMismatch("iso_check matrix must be dim x dim");
    if (is_zero(det(psi))) return false;
    QVec unit_a(a.dim(), Rat(0));
    unit_a[a.unit_index()] = 1;
    if (psi.apply(unit_a) != b.unit().coords()) return false;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            QVec lhs = psi.apply(a.basis_product(i, j));
            QVec rhs = b.multiply(psi.column(i), psi.column(j));
            if (lhs != rhs) return false;
        }
    return true;
}

// ---- built-in example: a unital nil algebra whose nil poset is not a
// lattice (two generators with two distinct minimal upper bounds) ----

inline PresentedAlgebra non_lattice_example() {
    const std::vector<std::string> labels{"1", "e", "g", "d", "h", "zeta", "xi"};
    const std::size_t n = 7;
    std::vector<Rat> table(n * n * n, Rat(0));
    auto set = [&](std::size_t i, std::size_t j, std::size_t k, long v) { table[(i * n + j) * n + k] = v; };
    for (std::size_t j = 0; j < n; ++j) {
        set(0, j, j, 1);
        if (j != 0) set(j, 0, j, 1);
    }
    // e*d = zeta, e*h = xi, g*d = xi, g*h = zeta; all other nilpotent
    // products vanish.
    set(1, 3, 5, 1);
    set(3, 1, 5, 1);
    set(1, 4, 6, 1);
    set(4, 1, 6, 1);
    set(2, 3, 6, 1);
    set(3, 2, 6, 1);
    set(2, 4, 5, 1);
    set(4, 2, 5, 1);
    AlgebraPtr alg = make_algebra(n, labels, 0, std::move(table));

    PresentedAlgebra out;
    out.algebra = alg;
    out.presentation.generators = {"e", "g", "d", "h", "zeta", "xi"};
    const char* rel_text[] = {"e^2", "g^2", "d^2", "h^2", "e*d-zeta", "e*h-xi", "g*d-xi", "g*h-zeta"};
    for (const char* t : rel_text)
        out.presentation.relations.push_back(parse_formal_poly(t, out.presentation.generators));
    out.presentation.source_text = presentation_to_string(out.presentation);
    std::vector<Monomial> mb(n, Monomial(6, 0));
    for (std::size_t i = 1; i < n; ++i) {
        out.generator_images.push_back(alg->basis_element(i));
        mb[i][i - 1] = 1;
    }
    out.monomial_basis = mb;
    return out;
}

// ---- DSL entry points ----

inline Presentation parse_presentation(Tokenizer& tz) {
    Token r = tz.expect_ident();
    if (r.text != "R") throw SyntaxError("expected 'R[' to open a quotient presentation", r.line, r.col);
    tz.expect_punct('[');
    Presentation p;
    while (true) {
        Token g = tz.expect_ident();
        if (std::find(p.generators.begin(), p.generators.end(), g.text) != p.generators.end())
            throw SyntaxError("duplicate generator '" + g.text + "'", g.line, g.col);
        p.generators.push_back(g.text);
        if (tz.at_punct(',')) {
            tz.next();
            continue;
        }
        break;
    }
    tz.expect_punct(']');
    tz.expect_punct('/');
    tz.expect_punct('<');
    std::map<std::string, std::size_t> slots;
    for (std::size_t i = 0; i < p.generators.size(); ++i) slots[p.generators[i]] = i;
    while (true) {
        p.relations.push_back(detail::parse_poly_body(tz, slots, p.generators.size()));
        if (tz.at_punct(',')) {
            tz.next();
            continue;
        }
        break;
    }
    tz.expect_punct('>');
    return p;
}

inline Presentation parse_presentation(const std::string& text) {
    Tokenizer tz(text);
    Presentation p = parse_presentation(tz);
    tz.expect_end();
    p.source_text = text;
    return p;
}

inline PresentedAlgebra parse_algebra_expr(Tokenizer& tz) {
    if (!tz.at_ident()) tz.fail("expected an algebra expression");
    const std::string head = tz.peek().text;
    if (head == "R") {
        Presentation p = parse_presentation(tz);
        return build(p);
    }
    if (head == "tensor" || head == "product") {
        tz.next();
        tz.expect_punct('(');
        PresentedAlgebra lhs = parse_algebra_expr(tz);
        tz.expect_punct(',');
        PresentedAlgebra rhs = parse_algebra_expr(tz);
        tz.expect_punct(')');
        return head == "tensor" ? tensor(lhs, rhs) : direct_product(lhs, rhs);
    }
    if (auto fam = family_from_name(head)) {
        tz.next();
        tz.expect_punct('(');
        Token num = tz.expect_number();
        tz.expect_punct(')');
        return family(*fam, std::stoi(num.text));
    }
    tz.fail("unknown algebra expression '" + head + "'");
}

inline PresentedAlgebra parse_algebra_expr(const std::string& text) {
    Tokenizer tz(text);
    PresentedAlgebra p = parse_algebra_expr(tz);
    tz.expect_end();
    if (p.presentation.source_text.empty()) p.presentation.source_text = text;
    return p;
}

}  // namespace algkit
