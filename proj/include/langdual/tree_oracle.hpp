/**
 * @file tree_oracle.hpp
 * @brief Brute-force path counts on the (q+1)-regular tree, checked against
 *        the rank-one structure polynomials.
 */
#pragma once

#include <map>
#include <string>
#include <vector>

#include "langdual/laurent.hpp"

namespace langdual {

inline constexpr Int kDefaultTreeDepthCap = 12;

/// For u, v at distance d: the number of w with dist(u, w) = m and dist(w, v) = n,
/// keyed by d over |m - n| <= d <= m + n, d = m + n mod 2. The tree is built
/// explicitly; ResourceCapError if its depth would exceed `depth_cap`.
std::map<Int, Int> tree_structure_constants(Int m, Int n, Int q, Int depth_cap = kDefaultTreeDepthCap);

struct OracleEntry {
    Int m = 0;
    Int n = 0;
    Int d = 0;
    LaurentScalar polynomial;  // structure polynomial at nu = d
    Int exponent = 0;          // <t, lambda + mu - nu>
    Rational rescaled;         // polynomial(q0) * q0^exponent
    Int tree_count = 0;
    bool ok = false;
};

struct OracleReport {
    Int q0 = 0;
    Int max_height = 0;
    std::vector<OracleEntry> entries;
    std::vector<std::string> failures;
    /// Every rescaled polynomial lies in Z[q] (observed, not assumed).
    bool rescaled_in_polynomial_ring = true;
};

/// Compares the PGL2 structure polynomials for lambda = m, mu = n, m + n <= max_height
/// with tree counts at q = q0.
OracleReport compare_rank1_oracle(Int q0, Int max_height, Int depth_cap = kDefaultTreeDepthCap);

}  // namespace langdual
