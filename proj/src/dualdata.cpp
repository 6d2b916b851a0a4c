#include "langdual/dualdata.hpp"

#include <stdexcept>

#include "langdual/errors.hpp"
#include "langdual/smith.hpp"

namespace langdual {

namespace {

void check(bool cond, const std::string& what)
{
    if (!cond) throw std::logic_error("dual data invariant failed: " + what);
}

bool all_even(const IntVector& v)
{
    for (Int x : v)
        if (x % 2 != 0) return false;
    return true;
}

}  // namespace

std::optional<RhoWeights> solve_rho_weights(const RootDatum& d)
{
    require_valid(d);
    const std::size_t k = d.semisimple_rank();
    IntMatrix a = IntMatrix::from_rows(d.simple_coroots, d.rank);
    if (k == 0) a = IntMatrix(1, d.rank);
    const IntVector rhs(a.rows(), k == 0 ? 0 : 1);
    auto sol = solve_integer(a, rhs);
    if (!sol) return std::nullopt;
    return RhoWeights{std::move(sol->particular), std::move(sol->kernel)};
}

ExtendedDatum extend_datum(const RootDatum& d)
{
    require_valid(d);
    ExtendedDatum e;
    e.base = d;
    e.ext.name = d.name.empty() ? std::string("ext") : "ext(" + d.name + ")";
    e.ext.rank = d.rank + 1;
    for (const auto& a : d.simple_roots) e.ext.simple_roots.push_back(concat(a, {0}));
    for (const auto& c : d.simple_coroots) e.ext.simple_coroots.push_back(concat(c, {1}));
    e.r = unit_vector(d.rank + 1, d.rank);
    e.delta_index = d.rank;
    require_valid(e.ext);
    return e;
}

Epsilon epsilon_of(const RootDatum& d)
{
    const RootSystem roots = generate_roots(d);
    Epsilon eps;
    eps.t = roots.sum_of_positive_roots(d.rank);
    for (const auto& c : roots.positive_coroots) {
        if (dot(eps.t, c) % 2 != 0) {
            throw std::logic_error("sum of positive roots pairs oddly with coroot " + to_string(c));
        }
    }
    eps.order = all_even(eps.t) ? 1 : 2;
    return eps;
}

LanglandsDualData langlands_dual_data(const RootDatum& d, std::size_t weyl_cap)
{
    LanglandsDualData dd;
    dd.extended = extend_datum(d);
    const Epsilon eps = epsilon_of(d);
    const std::size_t n = d.rank + 1;
    dd.t = eps.t;
    dd.t_ext = concat(eps.t, {0});
    dd.j = 2 * dd.extended.r - dd.t_ext;
    dd.i = unit_vector(n, d.rank);
    dd.p = dd.i;
    dd.epsilon_order = eps.order;
    dd.ext_weyl = enumerate_weyl(dd.extended.ext, weyl_cap);

    const auto& r = dd.extended.r;
    for (std::size_t k = 0; k < d.semisimple_rank(); ++k) {
        check(dot(r, dd.extended.ext.simple_coroots[k]) == 1, "<r, ext coroot> = 1");
        check(dd.extended.ext.reflection_x(k).apply(r) == r - dd.extended.ext.simple_roots[k],
              "sigma_i(r) = r - alpha_i");
    }
    check(dot(r, dd.i) == 1, "<r, i> = 1");
    check(dot(dd.j, dd.i) == 2, "<j, i> = 2");
    for (const auto& w : dd.ext_weyl) check(w.mat_x.apply(dd.j) == dd.j, "j is Weyl invariant");
    check((dd.epsilon_order == 2) == !all_even(dd.t), "epsilon order matches parity of t");
    return dd;
}

int epsilon_sign(const LanglandsDualData& dd, const IntVector& y)
{
    const IntVector& t = y.size() == dd.t.size() ? dd.t : dd.t_ext;
    return dot(t, y) % 2 == 0 ? 1 : -1;
}

std::string QuotientDecomposition::describe() const
{
    std::string s = "cokernel Z/2 generated by r=" + to_string(cokernel_generator) + "; kernel generated by (" +
                    std::to_string(central_sign) + ", eps)";
    s += epsilon_order == 1 ? " with eps trivial" : " with eps = t(-1) of order 2, t=" + to_string(epsilon_t);
    return s;
}

QuotientDecomposition decompose_quotient(const LanglandsDualData& dd)
{
    const std::size_t n = dd.ext_rank();
    const std::size_t base_rank = n - 1;
    std::vector<IntVector> cols;
    cols.push_back(dd.j);
    for (std::size_t k = 0; k < base_rank; ++k) cols.push_back(unit_vector(n, k));
    const IntMatrix map = IntMatrix::from_columns(cols, n);

    QuotientDecomposition q;
    for (Int d : smith_normal_form(map).diagonal())
        if (d != 1) q.cokernel_invariants.push_back(d);
    check(q.cokernel_invariants == std::vector<Int>{2}, "cokernel of Z + X -> X~ is Z/2");

    q.cokernel_generator = dd.extended.r;
    check(!solve_integer(map, dd.extended.r).has_value(), "r is not in the image");

    std::vector<IntVector> rows;
    for (std::size_t k = 0; k < n; ++k) rows.push_back(map.row(k));
    const auto u = solve_rational(rows, dd.extended.r, n);
    check(u.has_value(), "r has a rational preimage");
    q.preimage = *u;

    // exp(2 pi i u_0) must be a sign; the torus part is exp(2 pi i u_x).
    const Rational twice0 = 2 * q.preimage[0];
    check(is_integral(twice0), "central component is a square root of 1");
    q.central_sign = boost::multiprecision::numerator(twice0) % 2 == 0 ? 1 : -1;
    q.epsilon_t = zero_vector(base_rank);
    bool trivial = true;
    for (std::size_t k = 0; k < base_rank; ++k) {
        const Rational twice = 2 * q.preimage[k + 1];
        check(is_integral(twice), "torus component has order dividing 2");
        q.epsilon_t[k] = static_cast<Int>(boost::multiprecision::numerator(twice));
        if (!is_integral(q.preimage[k + 1])) trivial = false;
    }
    q.epsilon_order = trivial ? 1 : 2;
    return q;
}

}  // namespace langdual
