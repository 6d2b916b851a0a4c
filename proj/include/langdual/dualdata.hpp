/**
 * @file dualdata.hpp
 * @brief Weights of type rho, the extended datum and the Langlands dual data.
 *
 * The extended datum lives on X~ = X + Z r and Y~ = Y + Z delta. Simple roots
 * become (alpha_i, 0), simple coroots (coroot_i, 1), so r = (0,...,0,1) pairs
 * to 1 with every simple coroot and the Weyl group moves it by
 * sigma_i(r) = r - alpha_i. The dual data adds
 *
 *   t = sum of positive roots (embedded as (t, 0)),
 *   j = 2r - t            (W-invariant, <j, delta> = 2),
 *   i = p = delta         (<r, delta> = 1),
 *
 * and the order of the enhancement epsilon, which is 2 iff t is not in 2X.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "langdual/rational.hpp"
#include "langdual/rootdatum.hpp"

namespace langdual {

/// All r in X with <r, coroot_i> = 1 for every simple coroot: particular + span(kernel).
struct RhoWeights {
    IntVector particular;
    std::vector<IntVector> kernel;
};

std::optional<RhoWeights> solve_rho_weights(const RootDatum& d);

struct ExtendedDatum {
    RootDatum base;
    RootDatum ext;
    IntVector r;                // in X~
    std::size_t delta_index = 0;  // last coordinate
};

ExtendedDatum extend_datum(const RootDatum& d);

struct Epsilon {
    int order = 1;  // 1 or 2
    IntVector t;    // sum of positive roots, in X
};

/// Throws std::logic_error if <t, coroot> is odd for some coroot.
Epsilon epsilon_of(const RootDatum& d);

struct LanglandsDualData {
    ExtendedDatum extended;
    IntVector t;      // in X
    IntVector t_ext;  // (t, 0) in X~
    IntVector j;      // 2r - t_ext in X~
    IntVector i;      // delta in Y~: the central cocharacter
    IntVector p;      // delta in Y~, read as a character of the dual side
    int epsilon_order = 1;
    std::vector<WeylElement> ext_weyl;  // Weyl group acting on X~ and Y~

    std::size_t ext_rank() const noexcept { return extended.ext.rank; }
    std::size_t delta_index() const noexcept { return extended.delta_index; }
    const RootDatum& base() const noexcept { return extended.base; }
};

/// Builds and verifies the dual data; an invariant failure throws std::logic_error.
LanglandsDualData langlands_dual_data(const RootDatum& d, std::size_t weyl_cap = kDefaultWeylCap);

/// Sign (-1)^{<t, y>} of the enhancement on a vector of Y~ (or Y).
int epsilon_sign(const LanglandsDualData& dd, const IntVector& y);

/// The cover G_m x dual group -> dual-data group, read off from the lattice map
/// Z + X -> X~, (n, x) -> n j + (x, 0).
struct QuotientDecomposition {
    std::vector<Int> cokernel_invariants;  // nontrivial Smith invariants; always {2}
    IntVector cokernel_generator;          // r, whose class generates the cokernel
    RationalVector preimage;               // rational u with u |-> r; exp(2 pi i u) is the kernel element
    int central_sign = -1;                 // G_m component of the kernel element
    IntVector epsilon_t;                   // epsilon = t(-1)
    int epsilon_order = 1;

    std::string describe() const;
};

QuotientDecomposition decompose_quotient(const LanglandsDualData& dd);

}  // namespace langdual
