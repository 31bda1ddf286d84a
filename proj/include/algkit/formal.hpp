#pragma once

// Formal multivariate polynomials with rational coefficients over an
// ordered list of generator symbols. Terms are kept in degree-lexicographic
// order (total degree first, then earlier generators more significant), so
// printing and leading-term extraction are deterministic.

#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "algkit/error.hpp"
#include "algkit/qpoly.hpp"
#include "algkit/rational.hpp"

namespace algkit {

using Monomial = std::vector<unsigned>;  // exponent per generator slot

inline unsigned total_degree(const Monomial& m) {
    unsigned d = 0;
    for (unsigned e : m) d += e;
    return d;
}

struct DegLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        unsigned da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        // same degree: weight concentrated on earlier generators sorts first,
        // so x1 < x2 < ... and x1^2 < x1 x2 < x2^2
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] > b[i];
        return false;
    }
};

inline Monomial monomial_mul(const Monomial& a, const Monomial& b) {
    Monomial m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) m[i] = a[i] + b[i];
    return m;
}

inline bool monomial_divides(const Monomial& d, const Monomial& m) {
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] > m[i]) return false;
    return true;
}

inline Monomial monomial_quotient(const Monomial& m, const Monomial& d) {
    Monomial q(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) q[i] = m[i] - d[i];
    return q;
}

class FormalPoly {
   public:
    using TermMap = std::map<Monomial, Rat, DegLexLess>;

    explicit FormalPoly(std::size_t width = 0) : width_(width) {}

    static FormalPoly constant(std::size_t width, const Rat& c) {
        FormalPoly p(width);
        p.add_term(Monomial(width, 0), c);
        return p;
    }

    static FormalPoly variable(std::size_t width, std::size_t index, unsigned exp = 1) {
        FormalPoly p(width);
        Monomial m(width, 0);
        m[index] = exp;
        p.add_term(m, Rat(1));
        return p;
    }

    std::size_t width() const { return width_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Monomial& m, const Rat& c) {
        if (algkit::is_zero(c)) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (algkit::is_zero(it->second)) terms_.erase(it);
        }
    }

    FormalPoly operator+(const FormalPoly& o) const {
        FormalPoly r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }

    FormalPoly operator-(const FormalPoly& o) const {
        FormalPoly r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
        return r;
    }

    FormalPoly operator*(const FormalPoly& o) const {
        FormalPoly r(width_);
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : o.terms_) r.add_term(monomial_mul(ma, mb), ca * cb);
        return r;
    }

    FormalPoly scaled(const Rat& c) const {
        FormalPoly r(width_);
        for (const auto& [m, coef] : terms_) r.add_term(m, coef * c);
        return r;
    }

    const Monomial& leading_monomial() const {
        if (terms_.empty()) throw Error("leading monomial of the zero polynomial");
        return terms_.rbegin()->first;
    }

    const Rat& leading_coefficient() const {
        if (terms_.empty()) throw Error("leading coefficient of the zero polynomial");
        return terms_.rbegin()->second;
    }

    unsigned degree() const { return terms_.empty() ? 0 : total_degree(leading_monomial()); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
    }

    Rat constant_value() const {
        Monomial one(width_, 0);
        auto it = terms_.find(one);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    bool uses_var(std::size_t i) const {
        for (const auto& [m, c] : terms_)
            if (m[i] > 0) return true;
        return false;
    }

    // Index of the only variable appearing, if exactly one does.
    std::optional<std::size_t> single_var() const {
        std::optional<std::size_t> found;
        for (const auto& [m, c] : terms_)
            for (std::size_t i = 0; i < m.size(); ++i)
                if (m[i] > 0) {
                    if (found && *found != i) return std::nullopt;
                    found = i;
                }
        return found;
    }

    // Dense univariate view in variable i; valid when no other variable occurs.
    QPoly univariate(std::size_t i) const {
        QPoly out;
        for (const auto& [m, c] : terms_) {
            for (std::size_t t = 0; t < m.size(); ++t)
                if (t != i && m[t] > 0) throw Error("polynomial is not univariate");
            if (m[i] >= out.size()) out.resize(m[i] + 1, Rat(0));
            out[m[i]] = c;
        }
        qnormalize(out);
        return out;
    }

    static FormalPoly from_univariate(std::size_t width, std::size_t var, const QPoly& p) {
        FormalPoly out(width);
        for (std::size_t d = 0; d < p.size(); ++d) {
            if (algkit::is_zero(p[d])) continue;
            Monomial m(width, 0);
            m[var] = static_cast<unsigned>(d);
            out.add_term(m, p[d]);
        }
        return out;
    }

    // Substitute variable i by q everywhere.
    FormalPoly substituted(std::size_t i, const FormalPoly& q) const {
        FormalPoly out(width_);
        for (const auto& [m, c] : terms_) {
            Monomial rest = m;
            unsigned e = rest[i];
            rest[i] = 0;
            FormalPoly piece(width_);
            piece.add_term(rest, c);
            for (unsigned t = 0; t < e; ++t) piece = piece * q;
            out = out + piece;
        }
        return out;
    }

    // Reinterpret in a wider variable context: slot i maps to slot_map[i].
    FormalPoly remapped(std::size_t new_width, const std::vector<std::size_t>& slot_map) const {
        FormalPoly out(new_width);
        for (const auto& [m, c] : terms_) {
            Monomial nm(new_width, 0);
            for (std::size_t i = 0; i < m.size(); ++i) nm[slot_map[i]] += m[i];
            out.add_term(nm, c);
        }
        return out;
    }

    bool operator==(const FormalPoly& o) const { return width_ == o.width_ && terms_ == o.terms_; }

   private:
    std::size_t width_;
    TermMap terms_;
};

inline std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& names) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!first) out << "*";
        out << names[i];
        if (m[i] > 1) out << "^" << m[i];
        first = false;
    }
    if (first) return "1";
    return out.str();
}

// Prints with integer coefficients when possible (scales by the lcm of the
// denominators over the gcd of the numerators, leading coefficient positive).
inline std::string formal_poly_to_string(const FormalPoly& p, const std::vector<std::string>& names,
                                         bool integerize = false) {
    if (p.is_zero()) return "0";
    FormalPoly q = p;
    if (integerize) {
        mpz_class den_lcm = 1, num_gcd = 0;
        for (const auto& [m, c] : p.terms()) {
            mpz_class d = c.get_den();
            den_lcm = den_lcm / gcd(den_lcm, d) * d;
        }
        for (const auto& [m, c] : p.terms()) {
            Rat scaled = c * Rat(den_lcm);
            num_gcd = gcd(num_gcd, scaled.get_num());
        }
        Rat factor(den_lcm, num_gcd == 0 ? mpz_class(1) : num_gcd);
        factor.canonicalize();
        q = p.scaled(sgn(p.leading_coefficient()) < 0 ? Rat(-factor) : factor);
    }
    std::ostringstream out;
    bool first = true;
    for (auto it = q.terms().rbegin(); it != q.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        Rat mag = abs(c);
        bool neg = sgn(c) < 0;
        if (first) {
            if (neg) out << "-";
        } else {
            out << (neg ? "-" : "+");
        }
        if (total_degree(m) == 0) {
            out << to_string(mag);
        } else if (mag == 1) {
            out << monomial_to_string(m, names);
        } else {
            out << to_string(mag) << "*" << monomial_to_string(m, names);
        }
        first = false;
    }
    return out.str();
}

}  // namespace algkit
