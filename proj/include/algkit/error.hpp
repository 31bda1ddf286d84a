#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace algkit {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// --- parsing ---

struct SyntaxError : Error {
    int line, col;
    SyntaxError(const std::string& what, int line_, int col_)
        : Error("syntax error at " + std::to_string(line_) + ":" + std::to_string(col_) + ": " + what),
          line(line_),
          col(col_) {}
};

struct UnknownGenerator : Error {
    explicit UnknownGenerator(const std::string& name) : Error("unknown generator '" + name + "'") {}
};

// --- algebra construction ---

struct UnitViolation : Error {
    explicit UnitViolation(const std::string& what) : Error(what) {}
};

struct NonAssociative : Error {
    std::size_t i, j, k;
    NonAssociative(std::size_t i_, std::size_t j_, std::size_t k_)
        : Error("multiplication table is not associative at basis triple (" + std::to_string(i_) + ", " +
                std::to_string(j_) + ", " + std::to_string(k_) + ")"),
          i(i_),
          j(j_),
          k(k_) {}
};

struct NotCommutative : Error {
    explicit NotCommutative(const std::string& op) : Error(op + " requires a commutative algebra") {}
};

struct ParentMismatch : Error {
    ParentMismatch() : Error("elements belong to different algebras") {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

// --- presentation building ---

struct UnsupportedForm : Error {
    explicit UnsupportedForm(const std::string& what) : Error(what) {}
};

struct InfiniteDimensional : Error {
    explicit InfiniteDimensional(const std::string& what) : Error(what) {}
};

struct Inconsistent : Error {
    Inconsistent() : Error("relations collapse the algebra: 1 reduces to 0") {}
};

// --- polynomials over an algebra ---

struct NonUnitLeadingCoefficient : Error {
    NonUnitLeadingCoefficient() : Error("leading coefficient of the divisor is not a unit") {}
};

struct DivisionByZeroPoly : Error {
    DivisionByZeroPoly() : Error("division by the zero polynomial") {}
};

struct NotARoot : Error {
    NotARoot() : Error("the given element is not a root of the polynomial") {}
};

struct UnsupportedAlgebra : Error {
    explicit UnsupportedAlgebra(const std::string& what) : Error(what) {}
};

struct NotAZeroDivisor : Error {
    NotAZeroDivisor() : Error("polynomial is not a zero divisor") {}
};

struct NonSimpleBaseRoot : Error {
    NonSimpleBaseRoot() : Error("base root is not simple; cannot lift through the nilpotent part") {}
};

// --- structure theory ---

struct NotSemisimple : Error {
    explicit NotSemisimple(const std::string& what) : Error(what) {}
};

struct DegenerateSample : Error {
    DegenerateSample() : Error("all samples had repeated eigenvalues") {}
};

// --- nil posets ---

struct NotMultiplicative : Error {
    NotMultiplicative(std::size_t i, std::size_t j)
        : Error("basis is not multiplicative: product of basis elements " + std::to_string(i) + " and " +
                std::to_string(j) + " is not a scalar multiple of a basis element") {}
};

struct NotUnitalNil : Error {
    NotUnitalNil() : Error("algebra is not unital nil (not spanned by the unit and its nilradical)") {}
};

struct NotAntisymmetric : Error {
    std::size_t a, b;
    NotAntisymmetric(std::size_t a_, std::size_t b_)
        : Error("nil ordering is not antisymmetric: nodes " + std::to_string(a_) + " and " + std::to_string(b_) +
                " are mutually comparable"),
          a(a_),
          b(b_) {}
};

}  // namespace algkit
