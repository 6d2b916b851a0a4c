/**
 * @file smith.hpp
 * @brief Smith and Hermite normal forms over Z, and integer linear systems.
 */
#pragma once

#include <optional>
#include <vector>

#include "langdual/lattice.hpp"

namespace langdual {

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... , d_i >= 0.
struct SmithForm {
    IntMatrix u;
    IntMatrix v;
    IntMatrix d;
    std::size_t rank = 0;

    std::vector<Int> diagonal() const;
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Integer solution set of A x = b: `particular + span_Z(kernel)`.
struct IntegerSolution {
    IntVector particular;
    std::vector<IntVector> kernel;
};

/// Solves A x = b over Z. The particular solution is reduced against the
/// Hermite basis of the kernel so the answer does not depend on elimination order.
std::optional<IntegerSolution> solve_integer(const IntMatrix& a, const IntVector& b);

/// Row Hermite normal form of the lattice spanned by `rows` (zero rows dropped):
/// positive pivots, strictly increasing pivot columns, entries above each pivot reduced.
std::vector<IntVector> hermite_basis(const std::vector<IntVector>& rows);

/// Canonical representative of `x` modulo the lattice with Hermite basis `hnf`.
IntVector reduce_modulo(IntVector x, const std::vector<IntVector>& hnf);

}  // namespace langdual
