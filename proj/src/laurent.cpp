#include "langdual/laurent.hpp"

#include <stdexcept>

#include "langdual/errors.hpp"

namespace langdual {

LaurentScalar::LaurentScalar(Int constant)
{
    add_term(0, constant);
}

LaurentScalar LaurentScalar::monomial(Int exponent, Int coefficient)
{
    LaurentScalar s;
    s.add_term(exponent, coefficient);
    return s;
}

LaurentScalar LaurentScalar::from_terms(const Terms& terms)
{
    LaurentScalar s;
    for (const auto& [e, c] : terms) s.add_term(e, c);
    return s;
}

void LaurentScalar::add_term(Int exponent, Int coefficient)
{
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
    if (inserted) return;
    it->second = checked_add(it->second, coefficient);
    if (it->second == 0) terms_.erase(it);
}

Int LaurentScalar::coefficient(Int exponent) const
{
    auto it = terms_.find(exponent);
    return it == terms_.end() ? 0 : it->second;
}

Int LaurentScalar::min_exponent() const
{
    if (terms_.empty()) throw std::domain_error("min_exponent of zero");
    return terms_.begin()->first;
}

Int LaurentScalar::max_exponent() const
{
    if (terms_.empty()) throw std::domain_error("max_exponent of zero");
    return terms_.rbegin()->first;
}

bool LaurentScalar::is_polynomial() const
{
    return terms_.empty() || min_exponent() >= 0;
}

LaurentScalar LaurentScalar::shifted(Int k) const
{
    LaurentScalar s;
    for (const auto& [e, c] : terms_) s.terms_.emplace(checked_add(e, k), c);
    return s;
}

LaurentScalar LaurentScalar::inverted_variable() const
{
    LaurentScalar s;
    for (const auto& [e, c] : terms_) s.terms_.emplace(-e, c);
    return s;
}

Rational LaurentScalar::evaluate(const Rational& q) const
{
    Rational sum = 0;
    for (const auto& [e, c] : terms_) sum += Rational(c) * pow(q, e);
    return sum;
}

LaurentScalar& LaurentScalar::operator+=(const LaurentScalar& o)
{
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentScalar& LaurentScalar::operator-=(const LaurentScalar& o)
{
    for (const auto& [e, c] : o.terms_) add_term(e, checked_sub(0, c));
    return *this;
}

LaurentScalar operator-(const LaurentScalar& a)
{
    LaurentScalar r;
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, checked_sub(0, c));
    return r;
}

LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b)
{
    LaurentScalar r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(checked_add(ea, eb), checked_mul(ca, cb));
    return r;
}

std::string LaurentScalar::to_string(const std::string& variable) const
{
    if (terms_.empty()) return "0";
    std::string out;
    // Highest power first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto [e, c] = *it;
        const Int mag = c < 0 ? -c : c;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        std::string mono;
        if (e == 1) {
            mono = variable;
        } else if (e != 0) {
            mono = variable + "^" + std::to_string(e);
        }
        if (mono.empty()) {
            out += std::to_string(mag);
        } else if (mag == 1) {
            out += mono;
        } else {
            out += std::to_string(mag) + "*" + mono;
        }
    }
    return out;
}

LaurentScalar exact_divide(const LaurentScalar& num, const LaurentScalar& den)
{
    if (den.is_zero()) throw std::domain_error("division by zero Laurent polynomial");
    if (num.is_zero()) return {};
    // The quotient's exponents must lie in [min(num) - min(den), max(num) - max(den)].
    const Int low = checked_sub(num.min_exponent(), den.min_exponent());
    const Int lead_exp = den.max_exponent();
    const Int lead_coeff = den.coefficient(lead_exp);

    LaurentScalar quotient;
    LaurentScalar rem = num;
    while (!rem.is_zero()) {
        const Int e = rem.max_exponent();
        const Int c = rem.coefficient(e);
        const Int qe = checked_sub(e, lead_exp);
        if (qe < low || c % lead_coeff != 0) {
            throw NotDivisibleError("not divisible: (" + num.to_string() + ") / (" + den.to_string() + ")");
        }
        const LaurentScalar term = LaurentScalar::monomial(qe, c / lead_coeff);
        quotient += term;
        rem -= term * den;
    }
    return quotient;
}

std::ostream& operator<<(std::ostream& os, const LaurentScalar& s)
{
    return os << s.to_string();
}

}  // namespace langdual
