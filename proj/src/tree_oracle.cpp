#include "langdual/tree_oracle.hpp"

#include <stdexcept>

#include "langdual/builtins.hpp"
#include "langdual/errors.hpp"
#include "langdual/satake.hpp"

namespace langdual {

namespace {

// Ball of the given radius around node 0; children of a node are contiguous.
struct Ball {
    std::vector<std::size_t> parent;
    std::vector<Int> depth;

    Ball(Int q, Int radius)
    {
        parent.push_back(0);
        depth.push_back(0);
        for (std::size_t k = 0; k < parent.size(); ++k) {
            if (depth[k] == radius) continue;
            const Int kids = depth[k] == 0 ? q + 1 : q;
            for (Int c = 0; c < kids; ++c) {
                parent.push_back(k);
                depth.push_back(depth[k] + 1);
            }
        }
    }

    Int distance(std::size_t a, std::size_t b) const
    {
        Int dist = 0;
        while (depth[a] > depth[b]) a = parent[a], ++dist;
        while (depth[b] > depth[a]) b = parent[b], ++dist;
        while (a != b) a = parent[a], b = parent[b], dist += 2;
        return dist;
    }

    // Some node at the given depth: first-child descent.
    std::size_t node_at_depth(Int d) const
    {
        for (std::size_t k = 0; k < depth.size(); ++k)
            if (depth[k] == d) return k;
        throw std::logic_error("ball too small");
    }
};

}  // namespace

std::map<Int, Int> tree_structure_constants(Int m, Int n, Int q, Int depth_cap)
{
    if (q < 2) throw std::invalid_argument("tree oracle needs q >= 2");
    if (m < 0 || n < 0) throw std::invalid_argument("tree oracle needs m, n >= 0");
    const Int radius = m + n;
    if (radius > depth_cap) {
        throw ResourceCapError("tree depth " + std::to_string(radius) + " exceeds cap " + std::to_string(depth_cap));
    }
    // Geodesics between points of the ball stay inside it.
    const Ball ball(q, radius);
    std::map<Int, Int> out;
    const Int lo = m > n ? m - n : n - m;
    for (Int d = lo; d <= m + n; d += 2) {
        const std::size_t v = ball.node_at_depth(d);
        Int count = 0;
        for (std::size_t w = 0; w < ball.depth.size(); ++w)
            if (ball.depth[w] == m && ball.distance(w, v) == n) ++count;
        out[d] = count;
    }
    return out;
}

OracleReport compare_rank1_oracle(Int q0, Int max_height, Int depth_cap)
{
    OracleReport report;
    report.q0 = q0;
    report.max_height = max_height;
    SatakeTable table(langlands_dual_data(builtin_datum("PGL2")));
    const IntVector& t = table.dual_data().t;

    for (Int m = 0; m <= max_height; ++m) {
        for (Int n = 0; m + n <= max_height; ++n) {
            const HeckeExpansion ex = table.multiply({m}, {n});
            const auto counts = tree_structure_constants(m, n, q0, depth_cap);
            for (const auto& [nu, _] : ex.coeffs) {
                if (!counts.count(nu[0])) {
                    report.failures.push_back("e_" + std::to_string(m) + " * e_" + std::to_string(n) +
                                              " has a term at nu=" + std::to_string(nu[0]) + " with no tree stratum");
                }
            }
            for (const auto& [d, count] : counts) {
                OracleEntry e;
                e.m = m;
                e.n = n;
                e.d = d;
                e.polynomial = ex.coefficient({d});
                e.exponent = dot(t, IntVector{m + n - d});
                e.tree_count = count;
                const LaurentScalar scaled = e.polynomial.shifted(e.exponent);
                if (!scaled.is_polynomial()) report.rescaled_in_polynomial_ring = false;
                e.rescaled = scaled.evaluate(Rational(q0));
                e.ok = e.exponent >= 0 && e.exponent % 2 == 0 && e.rescaled == Rational(count);
                if (!e.ok) {
                    report.failures.push_back("m=" + std::to_string(m) + " n=" + std::to_string(n) + " d=" +
                                              std::to_string(d) + ": rescaled " + to_string(e.rescaled) +
                                              " vs tree count " + std::to_string(count));
                }
                report.entries.push_back(std::move(e));
            }
        }
    }
    return report;
}

}  // namespace langdual
