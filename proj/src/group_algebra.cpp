#include "langdual/group_algebra.hpp"

#include <algorithm>

#include "langdual/errors.hpp"

namespace langdual {

GroupAlgebraElement GroupAlgebraElement::one(std::size_t rank)
{
    return constant(rank, LaurentScalar(1));
}

GroupAlgebraElement GroupAlgebraElement::constant(std::size_t rank, const LaurentScalar& c)
{
    GroupAlgebraElement a(rank);
    a.add_term(zero_vector(rank), c);
    return a;
}

GroupAlgebraElement GroupAlgebraElement::monomial(const IntVector& exponent, const LaurentScalar& c)
{
    GroupAlgebraElement a(exponent.size());
    a.add_term(exponent, c);
    return a;
}

LaurentScalar GroupAlgebraElement::coefficient(const IntVector& exponent) const
{
    auto it = terms_.find(exponent);
    return it == terms_.end() ? LaurentScalar() : it->second;
}

void GroupAlgebraElement::add_term(const IntVector& exponent, const LaurentScalar& c)
{
    if (exponent.size() != rank_) {
        throw StructuralError("monomial of rank " + std::to_string(exponent.size()) +
                              " added to element of rank " + std::to_string(rank_));
    }
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

std::pair<IntVector, LaurentScalar> GroupAlgebraElement::leading_term() const
{
    if (terms_.empty()) throw std::domain_error("leading term of zero");
    return *terms_.rbegin();
}

void GroupAlgebraElement::require_rank(const GroupAlgebraElement& o) const
{
    if (rank_ != o.rank_) {
        throw StructuralError("group algebra rank mismatch: " + std::to_string(rank_) + " vs " +
                              std::to_string(o.rank_));
    }
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& o)
{
    require_rank(o);
    for (const auto& [v, c] : o.terms_) add_term(v, c);
    return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(const GroupAlgebraElement& o)
{
    require_rank(o);
    for (const auto& [v, c] : o.terms_) add_term(v, -c);
    return *this;
}

GroupAlgebraElement operator-(const GroupAlgebraElement& a)
{
    GroupAlgebraElement r(a.rank_);
    for (const auto& [v, c] : a.terms_) r.terms_.emplace(v, -c);
    return r;
}

GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b)
{
    a.require_rank(b);
    GroupAlgebraElement r(a.rank_);
    for (const auto& [va, ca] : a.terms_)
        for (const auto& [vb, cb] : b.terms_) r.add_term(va + vb, ca * cb);
    return r;
}

GroupAlgebraElement operator*(const LaurentScalar& s, const GroupAlgebraElement& a)
{
    GroupAlgebraElement r(a.rank_);
    if (s.is_zero()) return r;
    for (const auto& [v, c] : a.terms_) r.add_term(v, s * c);
    return r;
}

std::string GroupAlgebraElement::to_string(const std::string& variable) const
{
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!out.empty()) out += " + ";
        const auto& [v, c] = *it;
        const bool unit = c == LaurentScalar(1);
        if (!unit) out += "(" + c.to_string(variable) + ")";
        if (!langdual::is_zero(v) || unit) {
            if (!unit) out += "*";
            out += "e^" + langdual::to_string(v);
        }
    }
    return out;
}

GroupAlgebraElement ga_multiply(const GroupAlgebraElement& a, const GroupAlgebraElement& b)
{
    return a * b;
}

GroupAlgebraElement ga_exact_divide(const GroupAlgebraElement& num, const GroupAlgebraElement& den)
{
    if (den.is_zero()) throw std::domain_error("division by zero group algebra element");
    if (num.rank() != den.rank()) throw StructuralError("group algebra rank mismatch in division");
    GroupAlgebraElement quotient(num.rank());
    if (num.is_zero()) return quotient;

    // Newton polytopes add under multiplication, so every exponent of the
    // quotient lies in the coordinate box [min(num) - min(den), max(num) - max(den)].
    const std::size_t n = num.rank();
    auto box = [n](const GroupAlgebraElement& a) {
        IntVector lo(n), hi(n);
        bool first = true;
        for (const auto& [v, c] : a.terms()) {
            for (std::size_t i = 0; i < n; ++i) {
                lo[i] = first ? v[i] : std::min(lo[i], v[i]);
                hi[i] = first ? v[i] : std::max(hi[i], v[i]);
            }
            first = false;
        }
        return std::pair{lo, hi};
    };
    const auto [num_lo, num_hi] = box(num);
    const auto [den_lo, den_hi] = box(den);
    const IntVector lo = num_lo - den_lo;
    const IntVector hi = num_hi - den_hi;
    const auto [lead_exp, lead_coeff] = den.leading_term();

    auto fail = [&]() -> NotDivisibleError {
        return NotDivisibleError("not divisible: (" + num.to_string() + ") / (" + den.to_string() + ")");
    };

    GroupAlgebraElement rem = num;
    while (!rem.is_zero()) {
        const auto [e, c] = rem.leading_term();
        const IntVector qe = e - lead_exp;
        for (std::size_t i = 0; i < n; ++i)
            if (qe[i] < lo[i] || qe[i] > hi[i]) throw fail();
        LaurentScalar qc;
        try {
            qc = exact_divide(c, lead_coeff);
        } catch (const NotDivisibleError&) {
            throw fail();
        }
        const auto term = GroupAlgebraElement::monomial(qe, qc);
        quotient += term;
        rem -= term * den;
    }
    return quotient;
}

GroupAlgebraElement ga_apply_map(const IntMatrix& m, const GroupAlgebraElement& a)
{
    if (m.cols() != a.rank()) {
        throw StructuralError("map expects rank " + std::to_string(m.cols()) + ", element has rank " +
                              std::to_string(a.rank()));
    }
    GroupAlgebraElement r(m.rows());
    for (const auto& [v, c] : a.terms()) r.add_term(m.apply(v), c);
    return r;
}

GroupAlgebraElement ga_specialize_delta(const GroupAlgebraElement& a, std::size_t delta_index)
{
    if (a.rank() == 0 || delta_index >= a.rank()) {
        throw StructuralError("delta index " + std::to_string(delta_index) + " invalid for rank " +
                              std::to_string(a.rank()));
    }
    GroupAlgebraElement r(a.rank() - 1);
    for (const auto& [v, c] : a.terms()) {
        IntVector w;
        w.reserve(v.size() - 1);
        for (std::size_t i = 0; i < v.size(); ++i)
            if (i != delta_index) w.push_back(v[i]);
        r.add_term(w, c.shifted(v[delta_index]));
    }
    return r;
}

GroupAlgebraElement ga_divide_scalar(const GroupAlgebraElement& a, const LaurentScalar& s)
{
    GroupAlgebraElement r(a.rank());
    for (const auto& [v, c] : a.terms()) r.add_term(v, exact_divide(c, s));
    return r;
}

std::ostream& operator<<(std::ostream& os, const GroupAlgebraElement& a)
{
    return os << a.to_string();
}

}  // namespace langdual
