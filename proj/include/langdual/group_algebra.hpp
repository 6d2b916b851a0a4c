/**
 * @file group_algebra.hpp
 * @brief Group algebra Z[q, 1/q][L] of a lattice L = Z^n.
 *
 * Elements are finite sums of monomials e^v (v in L) with Laurent-polynomial
 * coefficients. They carry Satake images, characters of dual-group
 * representations and the Weyl denominators used to symmetrize them.
 */
#pragma once

#include <map>
#include <ostream>
#include <string>
#include <utility>

#include "langdual/laurent.hpp"
#include "langdual/lattice.hpp"

namespace langdual {

class GroupAlgebraElement {
public:
    using Terms = std::map<IntVector, LaurentScalar>;  // lexicographic on exponents

    explicit GroupAlgebraElement(std::size_t rank = 0) : rank_(rank) {}

    static GroupAlgebraElement one(std::size_t rank);
    static GroupAlgebraElement constant(std::size_t rank, const LaurentScalar& c);
    static GroupAlgebraElement monomial(const IntVector& exponent, const LaurentScalar& c = LaurentScalar(1));

    std::size_t rank() const noexcept { return rank_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    LaurentScalar coefficient(const IntVector& exponent) const;
    void add_term(const IntVector& exponent, const LaurentScalar& c);

    /// Largest exponent in lexicographic order with its coefficient.
    std::pair<IntVector, LaurentScalar> leading_term() const;

    GroupAlgebraElement& operator+=(const GroupAlgebraElement& o);
    GroupAlgebraElement& operator-=(const GroupAlgebraElement& o);
    friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a += b; }
    friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a -= b; }
    friend GroupAlgebraElement operator-(const GroupAlgebraElement& a);
    friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
    friend GroupAlgebraElement operator*(const LaurentScalar& s, const GroupAlgebraElement& a);
    friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) = default;

    std::string to_string(const std::string& variable = "q") const;

private:
    void require_rank(const GroupAlgebraElement& o) const;

    std::size_t rank_ = 0;
    Terms terms_;
};

GroupAlgebraElement ga_multiply(const GroupAlgebraElement& a, const GroupAlgebraElement& b);

/// Exact quotient c with c * den == num. Throws NotDivisibleError otherwise.
GroupAlgebraElement ga_exact_divide(const GroupAlgebraElement& num, const GroupAlgebraElement& den);

/// Replaces each exponent v by m * v; a ring homomorphism Z[L] -> Z[L'].
GroupAlgebraElement ga_apply_map(const IntMatrix& m, const GroupAlgebraElement& a);

/// Restricts to the fibre where the coordinate `delta_index` equals q:
/// e^{(v, n)} maps to q^n e^{v} in one rank lower.
GroupAlgebraElement ga_specialize_delta(const GroupAlgebraElement& a, std::size_t delta_index);

/// Divides every coefficient exactly by a scalar.
GroupAlgebraElement ga_divide_scalar(const GroupAlgebraElement& a, const LaurentScalar& s);

std::ostream& operator<<(std::ostream& os, const GroupAlgebraElement& a);

}  // namespace langdual
