#pragma once

// Exact rational scalar shared by the whole library. mpq_class keeps every
// value in canonical reduced form (gcd(num, den) = 1, den > 0) after
// arithmetic; parse_rational canonicalizes explicitly.

#include <gmpxx.h>

#include <cctype>
#include <optional>
#include <string>

#include "algkit/error.hpp"

namespace algkit {

using Rat = mpq_class;

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

inline std::string to_string(const Rat& r) { return r.get_str(); }

// Accepts "p", "-p", "p/q" with integer p, q and q != 0.
inline Rat parse_rational(const std::string& text) {
    std::size_t i = 0;
    auto fail = [&]() -> void { throw Error("malformed rational literal: '" + text + "'"); };
    if (text.empty()) fail();
    if (text[i] == '+' || text[i] == '-') ++i;
    std::size_t digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i, ++digits;
    if (digits == 0) fail();
    if (i < text.size()) {
        if (text[i] != '/') fail();
        ++i;
        digits = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i, ++digits;
        if (digits == 0 || i != text.size()) fail();
    }
    Rat r(text);
    if (r.get_den() == 0) fail();
    r.canonicalize();
    return r;
}

// Exact square root of a nonnegative rational, if it is a perfect square.
inline std::optional<Rat> exact_sqrt(const Rat& r) {
    if (sgn(r) < 0) return std::nullopt;
    mpz_class num = r.get_num(), den = r.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    Rat out(sn, sd);
    out.canonicalize();
    return out;
}

}  // namespace algkit
