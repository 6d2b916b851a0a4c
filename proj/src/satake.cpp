#include "langdual/satake.hpp"

#include <functional>
#include <stdexcept>

#include "langdual/errors.hpp"

namespace langdual {

namespace {

// sigma_i . e^y = q^{-<alpha_i, y>} e^{sigma_i y}
GroupAlgebraElement dot_simple(const RootDatum& d, std::size_t i, const IntMatrix& sy, const GroupAlgebraElement& f)
{
    GroupAlgebraElement out(f.rank());
    for (const auto& [y, c] : f.terms()) out.add_term(sy.apply(y), c.shifted(-dot(d.simple_roots[i], y)));
    return out;
}

void require_coweight(const RootDatum& d, const IntVector& lambda)
{
    if (lambda.size() != d.rank) {
        throw ValidationError({"coweight " + to_string(lambda) + " has length " + std::to_string(lambda.size()) +
                               ", expected " + std::to_string(d.rank)});
    }
    if (!is_dominant(d, lambda)) throw ValidationError({"coweight " + to_string(lambda) + " is not dominant"});
}

}  // namespace

QuadNum UnramifiedCharacter::evaluate(const IntVector& y) const
{
    if (y.size() != values.size()) throw StructuralError("character evaluated on a vector of the wrong rank");
    QuadNum r(1);
    for (std::size_t k = 0; k < y.size(); ++k)
        if (y[k] != 0) r *= pow(values[k], y[k]);
    return r;
}

UnramifiedCharacter make_character(const QuadNum& q, std::vector<QuadNum> values)
{
    if (q.is_zero()) throw std::invalid_argument("q must be nonzero");
    for (const auto& v : values)
        if (v.is_zero()) throw std::invalid_argument("character values must be nonzero");
    return UnramifiedCharacter{q, std::move(values)};
}

UnramifiedCharacter dot_act(const RootDatum& d, const std::vector<std::size_t>& word, const UnramifiedCharacter& chi)
{
    if (chi.values.size() != d.rank) throw StructuralError("character rank does not match datum");
    UnramifiedCharacter cur = chi;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        const std::size_t i = *it;
        const IntMatrix sy = d.reflection_y(i);
        UnramifiedCharacter next = cur;
        for (std::size_t k = 0; k < d.rank; ++k) {
            const IntVector ek = unit_vector(d.rank, k);
            next.values[k] = cur.evaluate(sy.apply(ek)) * pow(cur.q, d.simple_roots[i][k]);
        }
        cur = std::move(next);
    }
    return cur;
}

UnramifiedCharacter dot_act(const RootDatum& d, const WeylElement& w, const UnramifiedCharacter& chi)
{
    return dot_act(d, w.word, chi);
}

GroupAlgebraElement dot_act(const RootDatum& d, const std::vector<std::size_t>& word, const GroupAlgebraElement& f)
{
    if (f.rank() != d.rank) throw StructuralError("function rank does not match datum");
    GroupAlgebraElement cur = f;
    for (auto it = word.rbegin(); it != word.rend(); ++it) cur = dot_simple(d, *it, d.reflection_y(*it), cur);
    return cur;
}

GroupAlgebraElement dot_act(const RootDatum& d, const WeylElement& w, const GroupAlgebraElement& f)
{
    return dot_act(d, w.word, f);
}

QuadNum pair_with_character(const GroupAlgebraElement& f, const UnramifiedCharacter& chi)
{
    QuadNum total(0);
    for (const auto& [y, c] : f.terms()) {
        QuadNum cq(0);
        for (const auto& [e, k] : c.terms()) cq += QuadNum(k) * pow(chi.q, e);
        total += cq / chi.evaluate(y);
    }
    return total;
}

bool is_dot_invariant(const RootDatum& d, const GroupAlgebraElement& f)
{
    for (std::size_t i = 0; i < d.semisimple_rank(); ++i)
        if (dot_simple(d, i, d.reflection_y(i), f) != f) return false;
    return true;
}

IntVector lift_exponent(const LanglandsDualData& dd, const IntVector& y, Int n)
{
    if (y.size() + 1 != dd.ext_rank()) throw StructuralError("lift_exponent: rank mismatch");
    return concat(y, {n});
}

Int coweight_height(const IntVector& y)
{
    Int h = 0;
    for (Int c : y) h = checked_add(h, c < 0 ? -c : c);
    return h;
}

std::vector<IntVector> dominant_coweights_up_to(const RootDatum& d, Int h)
{
    std::vector<IntVector> out;
    IntVector cur(d.rank, 0);
    std::function<void(std::size_t, Int)> rec = [&](std::size_t k, Int budget) {
        if (k == d.rank) {
            if (is_dominant(d, cur)) out.push_back(cur);
            return;
        }
        for (Int c = -budget; c <= budget; ++c) {
            cur[k] = c;
            rec(k + 1, budget - (c < 0 ? -c : c));
        }
        cur[k] = 0;
    };
    rec(0, h);
    return out;
}

LaurentScalar HeckeExpansion::coefficient(const IntVector& nu) const
{
    const auto it = coeffs.find(nu);
    return it == coeffs.end() ? LaurentScalar() : it->second;
}

SatakeTable::SatakeTable(LanglandsDualData dd) : dd_(std::move(dd))
{
    const std::size_t n = dd_.ext_rank();
    const RootSystem roots = generate_roots(dd_.extended.ext);
    denominator_ = GroupAlgebraElement::one(n);
    numerator_ = GroupAlgebraElement::one(n);
    for (const auto& c : roots.positive_coroots) {
        const auto neg = GroupAlgebraElement::monomial(-c);
        denominator_ = denominator_ - denominator_ * neg;
        numerator_ = numerator_ - numerator_ * (LaurentScalar::monomial(-1) * neg);
    }
    for (const auto& w : dd_.ext_weyl) {
        // w(D) = u_w D with u_w = +-e^v, so D / w(D) = +-e^{-v}.
        const auto u = ga_exact_divide(ga_apply_map(w.mat_y, denominator_), denominator_);
        if (u.size() != 1) throw std::logic_error("Weyl denominator ratio is not a unit");
        const auto& [v, c] = *u.terms().begin();
        unit_inverses_.push_back(GroupAlgebraElement::monomial(-v, c));
    }
}

SphericalFunction SatakeTable::compute(const IntVector& lambda) const
{
    const std::size_t n = dd_.ext_rank();
    const IntVector lifted = lift_exponent(dd_, lambda, 0);
    const GroupAlgebraElement seed = GroupAlgebraElement::monomial(lifted) * numerator_;

    GroupAlgebraElement sum(n);
    for (std::size_t k = 0; k < dd_.ext_weyl.size(); ++k)
        sum += ga_apply_map(dd_.ext_weyl[k].mat_y, seed) * unit_inverses_[k];

    const LaurentScalar stab = stabilizer_poincare(dd_.base(), lambda).inverted_variable();
    SphericalFunction f;
    f.coweight = lambda;
    f.extended = ga_divide_scalar(ga_exact_divide(sum, denominator_), stab);
    if (f.extended.coefficient(lifted) != LaurentScalar(1))
        throw std::logic_error("Satake image of " + to_string(lambda) + " is not monic");
    f.poly = ga_specialize_delta(f.extended, dd_.delta_index());
    return f;
}

const SphericalFunction& SatakeTable::image(const IntVector& lambda)
{
    require_coweight(dd_.base(), lambda);
    auto it = cache_.find(lambda);
    if (it == cache_.end()) it = cache_.emplace(lambda, compute(lambda)).first;
    return it->second;
}

HeckeExpansion SatakeTable::multiply(const IntVector& lambda, const IntVector& mu)
{
    GroupAlgebraElement rest = image(lambda).poly * image(mu).poly;
    const IntVector top = lambda + mu;
    HeckeExpansion out;
    for (const auto& nu : dominant_below(dd_.base(), top)) {
        const LaurentScalar c = rest.coefficient(nu);
        if (c.is_zero()) continue;
        rest -= c * image(nu).poly;
        out.coeffs.emplace(nu, c);
    }
    if (!rest.is_zero())
        throw std::logic_error("Satake peel-off left remainder " + rest.to_string() + " for " + to_string(lambda) +
                               " * " + to_string(mu));
    if (out.coefficient(top) != LaurentScalar(1))
        throw std::logic_error("leading structure polynomial is not 1");
    return out;
}

SphericalFunction satake_image(const LanglandsDualData& dd, const IntVector& lambda)
{
    SatakeTable table(dd);
    return table.image(lambda);
}

HeckeExpansion structure_polynomials(const LanglandsDualData& dd, const IntVector& lambda, const IntVector& mu)
{
    SatakeTable table(dd);
    return table.multiply(lambda, mu);
}

}  // namespace langdual
