/**
 * @file laurent.hpp
 * @brief Integer Laurent polynomials in one variable, the coefficient ring Z[q, 1/q].
 */
#pragma once

#include <map>
#include <ostream>
#include <string>

#include "langdual/lattice.hpp"
#include "langdual/rational.hpp"

namespace langdual {

/// Sparse Laurent polynomial with integer coefficients. Zero coefficients are never stored.
class LaurentScalar {
public:
    using Terms = std::map<Int, Int>;  // exponent -> coefficient

    LaurentScalar() = default;
    LaurentScalar(Int constant);  // NOLINT: integers embed as constants
    static LaurentScalar monomial(Int exponent, Int coefficient = 1);
    static LaurentScalar from_terms(const Terms& terms);

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Int coefficient(Int exponent) const;

    Int min_exponent() const;
    Int max_exponent() const;

    /// Polynomial in the variable with no negative powers.
    bool is_polynomial() const;

    /// Multiplication by q^k.
    LaurentScalar shifted(Int k) const;
    /// Substitution q -> q^{-1}.
    LaurentScalar inverted_variable() const;

    Rational evaluate(const Rational& q) const;

    LaurentScalar& operator+=(const LaurentScalar& o);
    LaurentScalar& operator-=(const LaurentScalar& o);
    friend LaurentScalar operator+(LaurentScalar a, const LaurentScalar& b) { return a += b; }
    friend LaurentScalar operator-(LaurentScalar a, const LaurentScalar& b) { return a -= b; }
    friend LaurentScalar operator-(const LaurentScalar& a);
    friend LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b);
    friend bool operator==(const LaurentScalar& a, const LaurentScalar& b) = default;

    /// Human-readable form such as `q^-1 + q^-2`.
    std::string to_string(const std::string& variable = "q") const;

private:
    void add_term(Int exponent, Int coefficient);

    Terms terms_;
};

/// Exact quotient; throws NotDivisibleError when den does not divide num in Z[q, 1/q].
LaurentScalar exact_divide(const LaurentScalar& num, const LaurentScalar& den);

std::ostream& operator<<(std::ostream& os, const LaurentScalar& s);

}  // namespace langdual
