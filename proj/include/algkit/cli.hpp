#pragma once

// Command-line front end. Usage:
//
//   alg [--seed N] [--tol X] [--output text|json|dot] <algebra|@file.json> <subcommand> [args]
//
// Subcommands: info, repr <elt>, zd <elt>, ann <elt>, present, ev <poly>,
// iso-check <file>, wedderburn [--exact|--numeric], zd-geometry,
// poly <div|eval|zd|ann|nilfactor|split> <poly> [<poly>|<elt>], nilposet
// [--dot] [--lattice], examples.
//
// Exit codes: 0 = answered (mathematical negatives included), 1 = error,
// 2 = usage error.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "algkit/algebra.hpp"
#include "algkit/error.hpp"
#include "algkit/json_io.hpp"
#include "algkit/nilposet.hpp"
#include "algkit/parse.hpp"
#include "algkit/poly.hpp"
#include "algkit/presentation.hpp"
#include "algkit/selftest.hpp"
#include "algkit/structure.hpp"

namespace algkit {

struct CliConfig {
    std::string algebra_source;  // DSL expression or @file.json
    unsigned seed = 0;
    double tol = kMapTolerance;
    std::string output = "text";
};

namespace cli_detail {

inline const char* kUsage =
    "usage: alg [--seed N] [--tol X] [--output text|json|dot] <algebra|@file.json> <subcommand> [args]\n"
    "subcommands:\n"
    "  info                     dimension, basis, flags, nilradical\n"
    "  repr <element>           regular representation matrix\n"
    "  zd <element>             zero-divisor test and annihilator basis\n"
    "  ann <element>            annihilator basis and nildegree\n"
    "  present                  canonical basic presentation\n"
    "  ev <formal-poly>         evaluation homomorphism on the generators\n"
    "  iso-check <file.json>    check a linear map against a target algebra\n"
    "  wedderburn [--exact|--numeric]   Wedderburn signature (and map)\n"
    "  zd-geometry              zero-divisor component dimensions\n"
    "  poly div|eval|zd|ann|nilfactor|split <poly> [<poly>|<element>]\n"
    "  nilposet [--dot] [--lattice]     nil poset of a unital nil algebra\n"
    "  examples                 run all built-in checks\n";

inline bool is_subcommand(const std::string& s) {
    static const char* names[] = {"info", "repr",       "zd",          "ann",  "present",  "ev",
                                  "iso-check", "wedderburn", "zd-geometry", "poly", "nilposet", "examples"};
    for (const char* n : names)
        if (s == n) return true;
    return false;
}

inline double round12(double x) {
    double r = std::round(x * 1e12) / 1e12;
    return r == 0.0 ? 0.0 : r;  // normalize -0
}

inline nlohmann::json dmatrix_json(const DMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : m) {
        nlohmann::json row = nlohmann::json::array();
        for (double v : r) row.push_back(round12(v));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline std::string element_list(const std::vector<Element>& es) {
    std::string out = "[";
    for (std::size_t i = 0; i < es.size(); ++i) {
        if (i) out += ", ";
        out += format_element(es[i]);
    }
    return out + "]";
}

inline void print_qmatrix(std::ostream& out, const QMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out << "[";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out << ", ";
            out << to_string(m(i, j));
        }
        out << "]\n";
    }
}

struct Session {
    CliConfig cfg;
    std::optional<PresentedAlgebra> presented;

    const PresentedAlgebra& algebra() {
        if (!presented) {
            if (cfg.algebra_source.empty()) throw Error("no algebra given (expression or @file.json)");
            if (cfg.algebra_source[0] == '@') {
                std::ifstream in(cfg.algebra_source.substr(1));
                if (!in) throw Error("cannot open " + cfg.algebra_source.substr(1));
                nlohmann::json j;
                in >> j;
                presented = presented_from_algebra(algebra_from_json(j), cfg.algebra_source);
            } else {
                presented = parse_algebra_expr(cfg.algebra_source);
            }
        }
        return *presented;
    }

    // Exact signature for the semisimple named families, numeric otherwise.
    std::pair<WedderburnSignature, std::string> signature(bool force_exact, bool force_numeric,
                                                          std::optional<DecompositionMap>& map_out) {
        const PresentedAlgebra& pa = algebra();
        bool family_exact = pa.family_tag && (pa.family_tag->first == Family::H ||
                                              pa.family_tag->first == Family::C ||
                                              pa.family_tag->first == Family::CC);
        if (force_exact && !family_exact)
            throw Error("the exact path needs a named semisimple family (H, C, CC); use --numeric");
        if (family_exact && !force_numeric) {
            map_out = family_decomposition(pa.family_tag->first, pa.family_tag->second);
            return {map_out->signature, "exact"};
        }
        return {numeric_signature(pa.algebra, cfg.seed), "numeric"};
    }
};

}  // namespace cli_detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    using namespace cli_detail;
    CliConfig cfg;
    if (const char* env_tol = std::getenv("ALGKIT_TOL")) {
        char* end = nullptr;
        double v = std::strtod(env_tol, &end);
        if (end != env_tol && v > 0) cfg.tol = v;
    }

    std::string subcommand;
    std::vector<std::string> rest;
    std::size_t i = 0;
    auto want_value = [&](const std::string& flag) -> std::string {
        if (i + 1 >= args.size()) throw std::pair<int, std::string>{2, flag + " needs a value"};
        return args[++i];
    };
    try {
        for (; i < args.size(); ++i) {
            const std::string& a = args[i];
            if (subcommand.empty()) {
                if (a == "--help" || a == "-h") {
                    out << kUsage;
                    return 0;
                } else if (a == "--seed") {
                    cfg.seed = static_cast<unsigned>(std::stoul(want_value(a)));
                } else if (a == "--tol") {
                    double v = std::stod(want_value(a));
                    if (v <= 0) throw std::pair<int, std::string>{2, "--tol must be positive"};
                    cfg.tol = v;
                } else if (a == "--output") {
                    std::string v = want_value(a);
                    if (v != "text" && v != "json" && v != "dot")
                        throw std::pair<int, std::string>{2, "--output must be text, json or dot"};
                    cfg.output = v;
                } else if (a == "--alg") {
                    cfg.algebra_source = want_value(a);
                } else if (is_subcommand(a)) {
                    subcommand = a;
                } else if (cfg.algebra_source.empty() && !a.empty() && a[0] != '-') {
                    cfg.algebra_source = a;
                } else {
                    throw std::pair<int, std::string>{2, "unexpected argument '" + a + "'"};
                }
            } else {
                rest.push_back(a);
            }
        }
        if (subcommand.empty()) throw std::pair<int, std::string>{2, "no subcommand given"};
        if (cfg.algebra_source.empty() && subcommand != "examples")
            throw std::pair<int, std::string>{2, "no algebra given (expression or @file.json)"};
    } catch (const std::pair<int, std::string>& usage) {
        err << "error: " << usage.second << "\n" << kUsage;
        return usage.first;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n" << kUsage;
        return 2;
    }

    Session session{cfg, std::nullopt};
    const bool json_mode = cfg.output == "json";

    auto take = [&](std::size_t idx, const char* what) -> const std::string& {
        if (idx >= rest.size()) throw Error(std::string("missing argument: ") + what);
        return rest[idx];
    };

    try {
        if (subcommand == "examples") {
            return print_selftest(out) ? 0 : 1;
        }

        if (subcommand == "info") {
            const PresentedAlgebra& pa = session.algebra();
            if (json_mode) {
                out << algebra_to_json(*pa.algebra).dump(2) << "\n";
                return 0;
            }
            out << "algebra: " << pa.presentation.source_text << "\n";
            out << "dim: " << pa.algebra->dim() << "\n";
            out << "basis: [";
            for (std::size_t k = 0; k < pa.algebra->dim(); ++k)
                out << (k ? ", " : "") << pa.algebra->label(k);
            out << "]\n";
            out << "commutative: " << (pa.algebra->commutative() ? "true" : "false") << "\n";
            if (pa.algebra->commutative()) {
                Subspace nil = nilradical(pa.algebra);
                out << "semisimple: " << (nil.is_trivial() ? "true" : "false") << "\n";
                out << "nilradical: " << element_list(nil.basis()) << "\n";
                out << "unital nil: " << (is_unital_nil(pa.algebra) ? "true" : "false") << "\n";
            }
            return 0;
        }

        if (subcommand == "repr") {
            Element e = parse_element(take(0, "element"), session.algebra().algebra);
            QMatrix m = regular_matrix(e);
            if (json_mode)
                out << matrix_to_json(m).dump(2) << "\n";
            else
                print_qmatrix(out, m);
            return 0;
        }

        if (subcommand == "zd") {
            Element e = parse_element(take(0, "element"), session.algebra().algebra);
            bool zd = is_zero_divisor(e);
            Subspace ann = annihilator(e);
            if (json_mode) {
                nlohmann::json j;
                j["zero_divisor"] = zd;
                j["nontrivial"] = is_nontrivial_zero_divisor(e);
                nlohmann::json basis = nlohmann::json::array();
                for (const Element& b : ann.basis()) basis.push_back(format_element(b));
                j["annihilator"] = basis;
                out << j.dump(2) << "\n";
            } else {
                out << "zero divisor: " << (zd ? "true" : "false") << "; Ann basis: " << element_list(ann.basis())
                    << "\n";
            }
            return 0;
        }

        if (subcommand == "ann") {
            Element e = parse_element(take(0, "element"), session.algebra().algebra);
            Subspace ann = annihilator(e);
            if (json_mode) {
                nlohmann::json basis = nlohmann::json::array();
                for (const Element& b : ann.basis()) basis.push_back(format_element(b));
                nlohmann::json j;
                j["annihilator"] = basis;
                j["nildegree"] = ann.dim();
                out << j.dump(2) << "\n";
            } else {
                out << "Ann basis: " << element_list(ann.basis()) << "; nildegree: " << ann.dim() << "\n";
            }
            return 0;
        }

        if (subcommand == "present") {
            Presentation p = canonical_basic_presentation(*session.algebra().algebra);
            out << presentation_to_string(p) << "\n";
            return 0;
        }

        if (subcommand == "ev") {
            const PresentedAlgebra& pa = session.algebra();
            Element e = ev(pa, take(0, "formal polynomial"));
            out << format_element(e) << "\n";
            return 0;
        }

        if (subcommand == "iso-check") {
            std::ifstream in(take(0, "map file"));
            if (!in) throw Error("cannot open " + rest[0]);
            nlohmann::json j;
            in >> j;
            if (!j.contains("target") || !j.contains("matrix"))
                throw Error("iso-check file needs keys 'target' and 'matrix'");
            AlgebraPtr target = j["target"].is_string()
                                    ? parse_algebra_expr(j["target"].get<std::string>()).algebra
                                    : algebra_from_json(j["target"]);
            QMatrix psi = matrix_from_json(j["matrix"]);
            bool ok = iso_check(*session.algebra().algebra, *target, psi);
            out << "isomorphism: " << (ok ? "true" : "false") << "\n";
            return 0;
        }

        if (subcommand == "wedderburn" || subcommand == "zd-geometry") {
            bool force_exact = false, force_numeric = false;
            for (const std::string& r : rest) {
                if (r == "--exact")
                    force_exact = true;
                else if (r == "--numeric")
                    force_numeric = true;
                else
                    throw Error("unexpected argument '" + r + "'");
            }
            std::optional<DecompositionMap> map;
            auto [sig, how] = session.signature(force_exact, force_numeric, map);
            if (subcommand == "wedderburn") {
                if (json_mode) {
                    nlohmann::json j;
                    j["m"] = sig.real_factors;
                    j["k"] = sig.complex_factors;
                    if (map) {
                        j["forward"] = dmatrix_json(map->forward);
                        j["inverse"] = dmatrix_json(map->inverse);
                    } else {
                        j["seed"] = cfg.seed;
                    }
                    out << j.dump(2) << "\n";
                } else {
                    out << "signature: m=" << sig.real_factors << " k=" << sig.complex_factors << " (" << how;
                    if (how == "numeric") out << ", seed " << cfg.seed;
                    out << ")\n";
                    if (map) {
                        out << "forward:\n";
                        for (const auto& row : map->forward) {
                            out << "  [";
                            for (std::size_t t = 0; t < row.size(); ++t)
                                out << (t ? ", " : "") << round12(row[t]);
                            out << "]\n";
                        }
                        out << "inverse:\n";
                        for (const auto& row : map->inverse) {
                            out << "  [";
                            for (std::size_t t = 0; t < row.size(); ++t)
                                out << (t ? ", " : "") << round12(row[t]);
                            out << "]\n";
                        }
                    }
                }
                return 0;
            }
            ZdGeometry geo = zd_structure(sig);
            if (json_mode) {
                nlohmann::json comps = nlohmann::json::array();
                for (const ZdComponent& c : geo.components)
                    comps.push_back({{"kind", c.complex_component ? "C" : "R"}, {"zero_set_dim", c.zero_set_dim}});
                nlohmann::json j;
                j["m"] = sig.real_factors;
                j["k"] = sig.complex_factors;
                j["dim"] = geo.ambient_dim;
                j["components"] = comps;
                out << j.dump(2) << "\n";
            } else {
                out << "signature: m=" << sig.real_factors << " k=" << sig.complex_factors << " (dim "
                    << geo.ambient_dim << ", " << how;
                if (how == "numeric") out << ", seed " << cfg.seed;
                out << ")\n";
                for (std::size_t c = 0; c < geo.components.size(); ++c)
                    out << "component " << c + 1 << ": " << (geo.components[c].complex_component ? "complex" : "real")
                        << ", zero-set dimension " << geo.components[c].zero_set_dim << "\n";
            }
            return 0;
        }

        if (subcommand == "poly") {
            const std::string& op = take(0, "poly operation");
            const PresentedAlgebra& pa = session.algebra();
            Poly f = parse_poly_literal(take(1, "polynomial"), pa.algebra);
            if (op == "div") {
                Poly g = parse_poly_literal(take(2, "divisor polynomial"), pa.algebra);
                auto [q, r] = divmod(f, g);
                out << "q = " << poly_to_string(q) << "\n";
                out << "r = " << poly_to_string(r) << "\n";
            } else if (op == "eval") {
                Element alpha = parse_element(take(2, "evaluation point"), pa.algebra);
                out << format_element(peval(f, alpha)) << "\n";
            } else if (op == "zd") {
                Subspace ann = common_annihilator(f);
                out << "zero divisor: " << (ann.is_trivial() ? "false" : "true")
                    << "; common annihilator basis: " << element_list(ann.basis()) << "\n";
            } else if (op == "ann") {
                PolyAnnihilator pann = ann_of_poly(f);
                out << "Ann(f) = Ann(" << format_element(pann.generator) << ") * A[z]; Ann basis: "
                    << element_list(pann.ann.basis()) << "\n";
            } else if (op == "nilfactor") {
                NilFactorization nf = nilfactor(f);
                out << "factors: " << element_list(nf.factors) << "\n";
                out << "reduced: " << poly_to_string(nf.reduced) << "\n";
            } else if (op == "split") {
                std::optional<DecompositionMap> map;
                const DecompositionMap* map_ptr = nullptr;
                if (pa.family_tag && (pa.family_tag->first == Family::C || pa.family_tag->first == Family::CC ||
                                      pa.family_tag->first == Family::H)) {
                    map = family_decomposition(pa.family_tag->first, pa.family_tag->second);
                    map_ptr = &*map;
                }
                auto split = monic_split_quadratic(f, map_ptr, cfg.tol);
                if (!split) {
                    out << "split: none\n";
                } else if (split->exact) {
                    out << "split: (z + " << format_element(split->alpha) << ")(z + " << format_element(split->beta)
                        << ") [exact]\n";
                } else {
                    out << "split: numeric witnesses alpha ~ [";
                    for (std::size_t t = 0; t < split->alpha_approx.size(); ++t)
                        out << (t ? ", " : "") << split->alpha_approx[t];
                    out << "], beta ~ [";
                    for (std::size_t t = 0; t < split->beta_approx.size(); ++t)
                        out << (t ? ", " : "") << split->beta_approx[t];
                    out << "]\n";
                }
            } else {
                throw Error("unknown poly operation '" + op + "'");
            }
            return 0;
        }

        if (subcommand == "nilposet") {
            bool want_dot = cfg.output == "dot", want_lattice = false;
            for (const std::string& r : rest) {
                if (r == "--dot")
                    want_dot = true;
                else if (r == "--lattice")
                    want_lattice = true;
                else
                    throw Error("unexpected argument '" + r + "'");
            }
            NilPoset p = build_nil_poset(session.algebra().algebra);
            if (want_dot) {
                out << hasse_dot(p);
            } else {
                out << "nodes: ";
                for (std::size_t x = 0; x < p.node_count(); ++x) out << (x ? ", " : "") << p.node_label(x);
                out << "\ncovers: ";
                for (std::size_t e = 0; e < p.covers().size(); ++e) {
                    const auto& [lo, hi] = p.covers()[e];
                    out << (e ? ", " : "") << p.node_label(lo) << " < " << p.node_label(hi);
                }
                out << "\n";
            }
            if (want_lattice) {
                LatticeCheck lc = is_lattice(p);
                if (lc.ok) {
                    out << "lattice: true\n";
                } else {
                    out << "lattice: false; pair (" << p.node_label(lc.a) << ", " << p.node_label(lc.b) << "); "
                        << (lc.join_failure ? "minimal upper bounds: " : "maximal lower bounds: ");
                    for (std::size_t t = 0; t < lc.minimal_bounds.size(); ++t)
                        out << (t ? ", " : "") << p.node_label(lc.minimal_bounds[t]);
                    out << "\n";
                }
            }
            return 0;
        }

        err << "error: unknown subcommand '" << subcommand << "'\n" << kUsage;
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace algkit
