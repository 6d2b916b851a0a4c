/**
 * @file rational.hpp
 * @brief Exact rationals and small rational linear algebra.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "langdual/lattice.hpp"

namespace langdual {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;
using RationalVector = std::vector<Rational>;

Rational pow(const Rational& base, Int exponent);

/// Parses "a", "-a", or "a/b".
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);

bool is_integral(const Rational& r);
/// True iff r is the square of a rational; `root` receives the nonnegative root.
bool is_rational_square(const Rational& r, Rational* root = nullptr);

long double to_long_double(const Rational& r);

/// Rank of the matrix whose rows are `rows`.
std::size_t rational_rank(const std::vector<IntVector>& rows);

/// Some rational solution x of A x = b, where A is given by its rows; absent if inconsistent.
std::optional<RationalVector> solve_rational(const std::vector<IntVector>& rows, const IntVector& rhs,
                                             std::size_t unknowns);

}  // namespace langdual
