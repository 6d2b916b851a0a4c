#include "langdual/rfunc.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "langdual/errors.hpp"

namespace langdual {

namespace {

std::string place_name(const Rational& q)
{
    return "q=" + to_string(q);
}

bool lex_less(const Assignment& a, const Assignment& b)
{
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](const QuadNum& x, const QuadNum& y) { return lex_compare(x, y) < 0; });
}

}  // namespace

QuadNum evaluate_assignment(const Assignment& values, const IntVector& y)
{
    if (values.size() != y.size()) throw StructuralError("assignment evaluated on a vector of the wrong rank");
    QuadNum r(1);
    for (std::size_t k = 0; k < y.size(); ++k)
        if (y[k] != 0) r *= pow(values[k], y[k]);
    return r;
}

UnramifiedParameter make_parameter(std::shared_ptr<const LanglandsDualData> dd, const Rational& q,
                                   const std::vector<QuadNum>& base_values, const std::optional<QuadNum>& delta_value)
{
    std::vector<std::string> violations;
    if (q <= 1) violations.push_back("q = " + to_string(q) + " must exceed 1");
    if (base_values.size() != dd->base().rank) {
        violations.push_back("expected " + std::to_string(dd->base().rank) + " base values, got " +
                             std::to_string(base_values.size()));
    }
    for (std::size_t k = 0; k < base_values.size(); ++k)
        if (base_values[k].is_zero()) violations.push_back("value at basis vector " + std::to_string(k) + " is zero");
    if (delta_value && !(*delta_value == QuadNum(q)))
        violations.push_back("(ω) violated: value at delta is " + delta_value->to_string() + ", not q = " + to_string(q));
    if (!violations.empty()) throw ValidationError("invalid unramified parameter", violations);

    UnramifiedParameter x;
    x.dd = std::move(dd);
    x.q = q;
    x.values = base_values;
    x.values.emplace_back(q);
    return x;
}

DualRepresentation::DualRepresentation(std::vector<IntVector> ws) : weights(std::move(ws))
{
    std::sort(weights.begin(), weights.end());
}

bool is_weyl_stable(const LanglandsDualData& dd, const DualRepresentation& tau)
{
    for (const auto& w : tau.weights)
        if (w.size() != dd.ext_rank()) return false;
    for (std::size_t i = 0; i < dd.base().semisimple_rank(); ++i) {
        const IntMatrix s = dd.extended.ext.reflection_y(i);
        std::vector<IntVector> image;
        for (const auto& w : tau.weights) image.push_back(s.apply(w));
        if (DualRepresentation(image) != tau) return false;
    }
    return true;
}

std::vector<IntVector> weyl_orbit(const LanglandsDualData& dd, const IntVector& y)
{
    std::set<IntVector> seen;
    for (const auto& w : dd.ext_weyl) seen.insert(w.mat_y.apply(y));
    return {seen.begin(), seen.end()};
}

std::vector<QuadNum> RFactor::denominator() const
{
    std::vector<QuadNum> poly{QuadNum(1)};
    for (const auto& c : inverse_roots) {
        std::vector<QuadNum> next(poly.size() + 1, QuadNum(0));
        for (std::size_t k = 0; k < poly.size(); ++k) {
            next[k] += poly[k];
            next[k + 1] -= c * poly[k];
        }
        poly = std::move(next);
    }
    return poly;
}

long double RFactor::evaluate(long double s) const
{
    const long double u = std::pow(to_long_double(q), -s);
    const bool integral_s = std::floor(s) == s && std::fabs(s) < 1e6L;
    long double value = 1.0L;
    for (const auto& c : inverse_roots) {
        if (integral_s && c == QuadNum(pow(q, static_cast<Int>(s)))) {
            throw PoleError("pole: inverse root " + c.to_string() + " equals q^s at s = " +
                            std::to_string(static_cast<Int>(s)));
        }
        const long double denom = 1.0L - c.to_long_double() * u;
        if (std::fabs(denom) < 1e-15L) throw PoleError("pole: inverse root " + c.to_string() + " meets q^s");
        value /= denom;
    }
    return value;
}

std::string RFactor::to_string() const
{
    if (inverse_roots.empty()) return "1";
    std::ostringstream os;
    os << "1/(";
    for (const auto& c : inverse_roots) os << "(1 - " << c.to_string() << "*u)";
    os << ")";
    return os.str();
}

RFactor local_rfactor(const UnramifiedParameter& x, const DualRepresentation& tau)
{
    if (!is_weyl_stable(*x.dd, tau))
        throw ValidationError("invalid representation", {"weight multiset is not stable under the Weyl group"});
    RFactor r;
    r.q = x.q;
    for (const auto& w : tau.weights) r.inverse_roots.push_back(x.evaluate(w));
    return r;
}

long double partial_rfunction(const std::vector<Place>& places, const DualRepresentation& tau, long double s)
{
    long double value = 1.0L;
    for (const auto& place : places) {
        try {
            value *= local_rfactor(place.parameter, tau).evaluate(s);
        } catch (const PoleError& e) {
            throw PoleError("at place " + place_name(place.q) + ": " + e.what());
        }
    }
    return value;
}

std::vector<Int> primes_below(Int bound)
{
    std::vector<Int> primes;
    if (bound <= 2) return primes;
    std::vector<bool> composite(static_cast<std::size_t>(bound), false);
    for (Int p = 2; p < bound; ++p) {
        if (composite[static_cast<std::size_t>(p)]) continue;
        primes.push_back(p);
        for (Int k = p * p; k < bound; k += p) composite[static_cast<std::size_t>(k)] = true;
    }
    return primes;
}

DualRepresentation contragredient_rep(const LanglandsDualData& dd, const DualRepresentation& tau)
{
    std::vector<IntVector> ws;
    for (const auto& w : tau.weights) ws.push_back(dd.p - w);
    return DualRepresentation(std::move(ws));
}

DualRepresentation twist_by_p(const LanglandsDualData& dd, const DualRepresentation& tau)
{
    std::vector<IntVector> ws;
    for (const auto& w : tau.weights) ws.push_back(dd.p + w);
    return DualRepresentation(std::move(ws));
}

Assignment split_by_sqrt(const UnramifiedParameter& x, const QuadNum& sq)
{
    if (!(sq * sq == QuadNum(x.q)))
        throw ValidationError("invalid square root", {sq.to_string() + " does not square to q = " + to_string(x.q)});
    Assignment out = x.values;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] *= pow(sq, -x.dd->j[k]);
    return out;
}

Assignment epsilon_twist(const LanglandsDualData& dd, const Assignment& values)
{
    if (values.size() != dd.ext_rank()) throw StructuralError("epsilon_twist: rank mismatch");
    Assignment out = values;
    for (std::size_t k = 0; k < out.size(); ++k)
        if (dd.t_ext[k] % 2 != 0) out[k] = -out[k];
    return out;
}

Assignment conjugate(const Assignment& values)
{
    Assignment out;
    for (const auto& v : values) out.push_back(v.conjugate());
    return out;
}

UnramifiedParameter conjugate(const UnramifiedParameter& x)
{
    UnramifiedParameter y = x;
    y.values = conjugate(x.values);
    return y;
}

Assignment weyl_translate(const WeylElement& w, const Assignment& values)
{
    // w^{-1} on Y~ is the transpose of w on X~, so w^{-1} e_k is row k of mat_x.
    Assignment out;
    for (std::size_t k = 0; k < values.size(); ++k) out.push_back(evaluate_assignment(values, w.mat_x.row(k)));
    return out;
}

Assignment canonical_representative(const LanglandsDualData& dd, const Assignment& values)
{
    Assignment best = values;
    for (const auto& w : dd.ext_weyl) {
        Assignment cand = weyl_translate(w, values);
        if (lex_less(cand, best)) best = std::move(cand);
    }
    return best;
}

}  // namespace langdual
