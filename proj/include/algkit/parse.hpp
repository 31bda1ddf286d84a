#pragma once

// Tokenizer and recursive-descent parsers for the algebra DSL:
//
//   expr     := quotient | family | "tensor(" expr "," expr ")" | "product(" expr "," expr ")"
//   quotient := "R[" ident ("," ident)* "]/<" poly ("," poly)* ">"
//   family   := ("H"|"C"|"G"|"Xi"|"CC") "(" nat ")"
//   poly     := signed sum of terms; term := rational? ("*"? ident ("^" nat)?)*
//
// The same term grammar parses relation polynomials, element literals over
// basis labels, and polynomial literals over an algebra (variable z).
// Errors carry line and column.

#include <cctype>
#include <map>
#include <string>
#include <vector>

#include "algkit/algebra.hpp"
#include "algkit/error.hpp"
#include "algkit/formal.hpp"
#include "algkit/rational.hpp"

namespace algkit {

enum class TokKind { Ident, Number, Punct, End };

struct Token {
    TokKind kind;
    std::string text;
    int line, col;
};

class Tokenizer {
   public:
    explicit Tokenizer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }

    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

    bool at_punct(char c) const { return tok_.kind == TokKind::Punct && tok_.text[0] == c; }
    bool at_ident() const { return tok_.kind == TokKind::Ident; }
    bool at_number() const { return tok_.kind == TokKind::Number; }
    bool at_end() const { return tok_.kind == TokKind::End; }

    Token expect_punct(char c) {
        if (!at_punct(c)) throw SyntaxError(std::string("expected '") + c + "'", tok_.line, tok_.col);
        return next();
    }

    Token expect_ident() {
        if (!at_ident()) throw SyntaxError("expected an identifier", tok_.line, tok_.col);
        return next();
    }

    Token expect_number() {
        if (!at_number()) throw SyntaxError("expected a number", tok_.line, tok_.col);
        return next();
    }

    void expect_end() const {
        if (!at_end()) throw SyntaxError("unexpected trailing input '" + tok_.text + "'", tok_.line, tok_.col);
    }

    [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(msg, tok_.line, tok_.col); }

   private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            if (text_[pos_] == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
            ++pos_;
        }
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= text_.size()) {
            tok_ = {TokKind::End, "", line_, col_};
            return;
        }
        char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_, ++col_;
            tok_ = {TokKind::Ident, text_.substr(start, pos_ - start), tok_.line, tok_.col};
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_, ++col_;
            tok_ = {TokKind::Number, text_.substr(start, pos_ - start), tok_.line, tok_.col};
            return;
        }
        static const std::string punct = "[]<>(),+-*/^=@";
        if (punct.find(c) != std::string::npos) {
            ++pos_;
            ++col_;
            tok_ = {TokKind::Punct, std::string(1, c), tok_.line, tok_.col};
            return;
        }
        throw SyntaxError(std::string("unexpected character '") + c + "'", line_, col_);
    }

    std::string text_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;
};

namespace detail {

// nat, or nat/nat. Sign is handled by the caller.
inline Rat parse_number(Tokenizer& tz) {
    Token num = tz.expect_number();
    Rat value(num.text);
    value.canonicalize();
    if (tz.at_punct('/')) {
        tz.next();
        Token den = tz.expect_number();
        Rat d(den.text);
        if (sgn(d) == 0) throw SyntaxError("zero denominator", den.line, den.col);
        value /= d;
    }
    return value;
}

// One term of the shared grammar: rational? ("*"? ident ("^" nat)?)*.
// Identifiers are resolved to variable slots through `slots`; unknown
// identifiers raise UnknownGenerator.
inline void parse_term(Tokenizer& tz, const std::map<std::string, std::size_t>& slots, std::size_t width,
                       Rat& coeff_out, Monomial& mono_out) {
    Rat coeff(1);
    Monomial mono(width, 0);
    bool have_factor = false;
    if (tz.at_number()) {
        coeff = parse_number(tz);
        have_factor = true;
    }
    while (true) {
        if (tz.at_punct('*')) {
            tz.next();
            if (!tz.at_ident() && !tz.at_number()) tz.fail("expected a factor after '*'");
            if (tz.at_number()) tz.fail("numeric factor must lead the term");
        }
        if (!tz.at_ident()) break;
        Token id = tz.next();
        auto it = slots.find(id.text);
        if (it == slots.end()) throw UnknownGenerator(id.text);
        unsigned exp = 1;
        if (tz.at_punct('^')) {
            tz.next();
            Token e = tz.expect_number();
            exp = static_cast<unsigned>(std::stoul(e.text));
        }
        mono[it->second] += exp;
        have_factor = true;
    }
    if (!have_factor) tz.fail("expected a term");
    coeff_out = coeff;
    mono_out = mono;
}

inline FormalPoly parse_poly_body(Tokenizer& tz, const std::map<std::string, std::size_t>& slots,
                                  std::size_t width) {
    FormalPoly poly(width);
    int sign = 1;
    if (tz.at_punct('+') || tz.at_punct('-')) {
        if (tz.next().text == "-") sign = -1;
    }
    while (true) {
        Rat coeff;
        Monomial mono;
        parse_term(tz, slots, width, coeff, mono);
        poly.add_term(mono, sign > 0 ? coeff : Rat(-coeff));
        if (tz.at_punct('+') || tz.at_punct('-')) {
            sign = (tz.next().text == "-") ? -1 : 1;
            continue;
        }
        break;
    }
    return poly;
}

}  // namespace detail

// Formal polynomial over named generators, for relations and ev input.
inline FormalPoly parse_formal_poly(const std::string& text, const std::vector<std::string>& generators) {
    std::map<std::string, std::size_t> slots;
    for (std::size_t i = 0; i < generators.size(); ++i) slots[generators[i]] = i;
    Tokenizer tz(text);
    FormalPoly p = detail::parse_poly_body(tz, slots, generators.size());
    tz.expect_end();
    return p;
}

namespace detail {

// Basis labels, parsed as single monomials over identifier atoms, keyed so
// element literals like "1+2*j+3*j^2" can be resolved to coordinates.
struct LabelIndex {
    std::map<std::string, std::size_t> atoms;      // atom name -> slot
    std::map<Monomial, std::size_t> basis_lookup;  // monomial -> basis index
    std::size_t width = 0;
};

inline LabelIndex build_label_index(const Algebra& a) {
    LabelIndex idx;
    std::vector<std::vector<std::pair<std::string, unsigned>>> parsed(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const std::string& label = a.label(i);
        if (i == a.unit_index() && label == "1") continue;
        Tokenizer tz(label);
        while (tz.at_ident()) {
            Token id = tz.next();
            unsigned exp = 1;
            if (tz.at_punct('^')) {
                tz.next();
                exp = static_cast<unsigned>(std::stoul(tz.expect_number().text));
            }
            parsed[i].push_back({id.text, exp});
            if (tz.at_punct('*'))
                tz.next();
            else
                break;
        }
        if (!tz.at_end() || parsed[i].empty())
            throw Error("basis label '" + label + "' is not usable in element literals");
        for (const auto& [name, exp] : parsed[i])
            if (!idx.atoms.count(name)) idx.atoms[name] = idx.width++;
    }
    // Constants always mean multiples of the unit.
    idx.basis_lookup[Monomial(idx.width, 0)] = a.unit_index();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (i == a.unit_index()) continue;
        Monomial m(idx.width, 0);
        for (const auto& [name, exp] : parsed[i]) m[idx.atoms[name]] += exp;
        if (idx.basis_lookup.count(m)) throw Error("basis labels are ambiguous as monomials");
        idx.basis_lookup[m] = i;
    }
    return idx;
}

}  // namespace detail

namespace detail {

// Signed sum of rational multiples of basis monomials; stops at the first
// token that cannot extend the sum (e.g. a closing parenthesis).
inline Element parse_element_sum(Tokenizer& tz, const LabelIndex& idx, const AlgebraPtr& a) {
    QVec coords(a->dim(), Rat(0));
    int sign = 1;
    if (tz.at_punct('+') || tz.at_punct('-')) {
        if (tz.next().text == "-") sign = -1;
    }
    while (true) {
        Rat coeff;
        Monomial mono;
        parse_term(tz, idx.atoms, idx.width, coeff, mono);
        auto it = idx.basis_lookup.find(mono);
        if (it == idx.basis_lookup.end())
            tz.fail("monomial does not name a basis element of this algebra");
        coords[it->second] += (sign > 0) ? coeff : Rat(-coeff);
        if (tz.at_punct('+') || tz.at_punct('-')) {
            sign = (tz.next().text == "-") ? -1 : 1;
            continue;
        }
        break;
    }
    return a->element(std::move(coords));
}

}  // namespace detail

// Element literal over basis labels: a signed sum of rational multiples of
// basis monomials, e.g. "1-j" or "1/2+1/2*j" or "e^2*g".
inline Element parse_element(const std::string& text, const AlgebraPtr& a) {
    detail::LabelIndex idx = detail::build_label_index(*a);
    Tokenizer tz(text);
    Element e = detail::parse_element_sum(tz, idx, a);
    tz.expect_end();
    return e;
}

}  // namespace algkit
