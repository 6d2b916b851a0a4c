/**
 * @file satake.hpp
 * @brief Dot action, Satake images on the extended lattice, structure polynomials.
 *
 * Spherical functions are elements of Z[q, 1/q][Y]. A simple reflection acts on
 * monomials by the dot rule
 *
 *   sigma_i . e^y = q^{-<alpha_i, y>} e^{sigma_i y},
 *
 * which is the specialization delta -> q of the linear action on Y~ through
 * y -> (y, 0). On unramified characters the same action reads
 * (sigma_i . chi)(y) = chi(sigma_i y) q^{<alpha_i, y>}; the two are matched by
 * the pairing <F, chi> = sum_y c_y(q) chi(y)^{-1}.
 */
#pragma once

#include <map>
#include <memory>
#include <vector>

#include "langdual/dualdata.hpp"
#include "langdual/group_algebra.hpp"
#include "langdual/quadratic.hpp"

namespace langdual {

/// A character of Y given by its values on the standard basis, with the value of q.
struct UnramifiedCharacter {
    QuadNum q;
    std::vector<QuadNum> values;

    QuadNum evaluate(const IntVector& y) const;
    friend bool operator==(const UnramifiedCharacter&, const UnramifiedCharacter&) = default;
};

/// Throws std::invalid_argument on a zero value or q.
UnramifiedCharacter make_character(const QuadNum& q, std::vector<QuadNum> values);

/// Dot action of w, composed along its reduced word (last letter first).
UnramifiedCharacter dot_act(const RootDatum& d, const std::vector<std::size_t>& word, const UnramifiedCharacter& chi);
UnramifiedCharacter dot_act(const RootDatum& d, const WeylElement& w, const UnramifiedCharacter& chi);

/// Dot action on functions, by the monomial rule.
GroupAlgebraElement dot_act(const RootDatum& d, const std::vector<std::size_t>& word, const GroupAlgebraElement& f);
GroupAlgebraElement dot_act(const RootDatum& d, const WeylElement& w, const GroupAlgebraElement& f);

/// sum_y c_y(q) chi(y)^{-1}.
QuadNum pair_with_character(const GroupAlgebraElement& f, const UnramifiedCharacter& chi);

bool is_dot_invariant(const RootDatum& d, const GroupAlgebraElement& f);

/// (y, n) in Y~.
IntVector lift_exponent(const LanglandsDualData& dd, const IntVector& y, Int n);

/// l1 norm of the coordinates; the size bound used when enumerating coweights.
Int coweight_height(const IntVector& y);

/// Dominant coweights of height at most h, in lexicographic order.
std::vector<IntVector> dominant_coweights_up_to(const RootDatum& d, Int h);

struct SphericalFunction {
    IntVector coweight;
    GroupAlgebraElement extended;  // over Y~, before delta -> q
    GroupAlgebraElement poly;      // over Y
};

struct HeckeExpansion {
    std::map<IntVector, LaurentScalar> coeffs;  // dominant keys, nonzero values

    LaurentScalar coefficient(const IntVector& nu) const;
    friend bool operator==(const HeckeExpansion&, const HeckeExpansion&) = default;
};

/// Satake images with memoization. Owns a copy of the dual data.
class SatakeTable {
public:
    explicit SatakeTable(LanglandsDualData dd);

    const LanglandsDualData& dual_data() const noexcept { return dd_; }

    /// Throws ValidationError for non-dominant or wrongly sized lambda.
    const SphericalFunction& image(const IntVector& lambda);

    /// Expansion of e_lambda * e_mu in the basis e_nu. Throws std::logic_error
    /// if peeling leaves a nonzero remainder or the top coefficient is not 1.
    HeckeExpansion multiply(const IntVector& lambda, const IntVector& mu);

private:
    SphericalFunction compute(const IntVector& lambda) const;

    LanglandsDualData dd_;
    GroupAlgebraElement denominator_;   // prod (1 - e^{-coroot~})
    GroupAlgebraElement numerator_;     // prod (1 - q^{-1} e^{-coroot~})
    std::vector<GroupAlgebraElement> unit_inverses_;  // D / w(D), one per Weyl element
    std::map<IntVector, SphericalFunction> cache_;
};

SphericalFunction satake_image(const LanglandsDualData& dd, const IntVector& lambda);

HeckeExpansion structure_polynomials(const LanglandsDualData& dd, const IntVector& lambda, const IntVector& mu);

}  // namespace langdual
