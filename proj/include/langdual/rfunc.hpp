/**
 * @file rfunc.hpp
 * @brief Unramified parameters on the extended torus, local R-factors and
 *        Euler products, the contragredient, and splitting by a square root of q.
 *
 * A parameter is a character of Y~ given by its values on the standard basis;
 * its value at delta is q. Dividing by sq^{<j, .>} for a chosen sq with
 * sq^2 = q gives a parameter with value 1 at delta. The two choices of sq
 * differ by the parity character (-1)^{<t, .>}.
 */
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "langdual/dualdata.hpp"
#include "langdual/quadratic.hpp"

namespace langdual {

/// Values on the standard basis of Y~ (or any lattice Z^n).
using Assignment = std::vector<QuadNum>;

/// prod_k values[k]^{y_k}.
QuadNum evaluate_assignment(const Assignment& values, const IntVector& y);

struct UnramifiedParameter {
    std::shared_ptr<const LanglandsDualData> dd;
    Rational q;
    Assignment values;  // on Y~; values[delta] == q

    QuadNum evaluate(const IntVector& y) const { return evaluate_assignment(values, y); }
};

/// Extends `base_values` (on Y) by q at delta. Throws ValidationError on q <= 1,
/// a zero value, or an explicit delta value different from q ("(ω) violated").
UnramifiedParameter make_parameter(std::shared_ptr<const LanglandsDualData> dd, const Rational& q,
                                   const std::vector<QuadNum>& base_values,
                                   const std::optional<QuadNum>& delta_value = std::nullopt);

/// Weight multiset on Y~, kept sorted.
struct DualRepresentation {
    std::vector<IntVector> weights;

    explicit DualRepresentation(std::vector<IntVector> ws = {});
    std::size_t dimension() const noexcept { return weights.size(); }
    friend bool operator==(const DualRepresentation&, const DualRepresentation&) = default;
};

/// Stable under every simple reflection of the extended Weyl group.
bool is_weyl_stable(const LanglandsDualData& dd, const DualRepresentation& tau);

/// The W-orbit of y in Y~, each element once.
std::vector<IntVector> weyl_orbit(const LanglandsDualData& dd, const IntVector& y);

/// det(1 - tau(x) u)^{-1} with u = q^{-s}.
struct RFactor {
    std::vector<QuadNum> inverse_roots;
    Rational q;

    std::size_t degree() const noexcept { return inverse_roots.size(); }
    /// Coefficients of prod (1 - c_i u), constant term first.
    std::vector<QuadNum> denominator() const;
    /// Throws PoleError when some c_i q^{-s} equals 1.
    long double evaluate(long double s) const;
    std::string to_string() const;
};

/// Throws ValidationError if tau is not W-stable or has the wrong rank.
RFactor local_rfactor(const UnramifiedParameter& x, const DualRepresentation& tau);

struct Place {
    Rational q;
    UnramifiedParameter parameter;
};

/// Product of local factors in list order, accumulated in long double.
/// A pole throws PoleError naming the place.
long double partial_rfunction(const std::vector<Place>& places, const DualRepresentation& tau, long double s);

std::vector<Int> primes_below(Int bound);

/// delta - w for every weight.
DualRepresentation contragredient_rep(const LanglandsDualData& dd, const DualRepresentation& tau);

/// delta + w for every weight: the twist by the character p.
DualRepresentation twist_by_p(const LanglandsDualData& dd, const DualRepresentation& tau);

/// values'(e_k) = values(e_k) sq^{-j_k}. Throws ValidationError unless sq^2 = q.
Assignment split_by_sqrt(const UnramifiedParameter& x, const QuadNum& sq);

/// Multiplies the value at e_k by (-1)^{t_k}.
Assignment epsilon_twist(const LanglandsDualData& dd, const Assignment& values);

Assignment conjugate(const Assignment& values);
UnramifiedParameter conjugate(const UnramifiedParameter& x);

/// Values of w.x on the basis, i.e. e_k -> x(w^{-1} e_k).
Assignment weyl_translate(const WeylElement& w, const Assignment& values);

/// Lexicographically least point of the W-orbit of the values.
Assignment canonical_representative(const LanglandsDualData& dd, const Assignment& values);

}  // namespace langdual
