/**
 * @file rootdatum.hpp
 * @brief Based root data, duality, Weyl groups and the dominance order.
 *
 * A datum is presented on X = Z^n (weights) and Y = Z^n (coweights) with the
 * standard dot product as pairing. Swapping the two vector lists is the
 * Langlands dual.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "langdual/laurent.hpp"
#include "langdual/lattice.hpp"

namespace langdual {

inline constexpr std::size_t kDefaultWeylCap = 1'000'000;

struct RootDatum {
    std::string name;
    std::size_t rank = 0;  // ambient rank of X and Y
    std::vector<IntVector> simple_roots;
    std::vector<IntVector> simple_coroots;

    std::size_t semisimple_rank() const noexcept { return simple_roots.size(); }

    /// C[i][j] = <alpha_j, coroot_i>.
    IntMatrix cartan_matrix() const;

    /// Matrix of the i-th simple reflection on X: x - <x, coroot_i> alpha_i.
    IntMatrix reflection_x(std::size_t i) const;
    /// Matrix of the i-th simple reflection on Y: y - <alpha_i, y> coroot_i.
    IntMatrix reflection_y(std::size_t i) const;

    /// Equality of presentations; the name is ignored.
    friend bool operator==(const RootDatum& a, const RootDatum& b)
    {
        return a.rank == b.rank && a.simple_roots == b.simple_roots && a.simple_coroots == b.simple_coroots;
    }
};

/// Empty iff the datum is a based root datum of finite type.
std::vector<std::string> validate_datum(const RootDatum& d);

/// Throws ValidationError listing every violation.
void require_valid(const RootDatum& d);

RootDatum dual_datum(const RootDatum& d);

struct RootSystem {
    std::vector<IntVector> positive_roots;    // in X, sorted by height then lexicographically
    std::vector<IntVector> positive_coroots;  // positive_coroots[k] is the coroot of positive_roots[k]
    std::vector<IntVector> root_coefficients; // positive_roots[k] in the simple-root basis

    std::size_t size() const noexcept { return positive_roots.size(); }
    /// Sum of all positive roots.
    IntVector sum_of_positive_roots(std::size_t rank) const;
};

RootSystem generate_roots(const RootDatum& d, std::size_t cap = 100'000);

struct WeylElement {
    std::vector<std::size_t> word;  // reduced word in simple reflections
    IntMatrix mat_x;
    IntMatrix mat_y;

    std::size_t length() const noexcept { return word.size(); }
};

/// All Weyl group elements in breadth-first (length) order; identity first.
std::vector<WeylElement> enumerate_weyl(const RootDatum& d, std::size_t cap = kDefaultWeylCap);

/// The element with the longest reduced word.
const WeylElement& longest_element(const std::vector<WeylElement>& group);

/// Number of positive roots sent to negative roots by w.
std::size_t inversion_count(const RootDatum& d, const RootSystem& roots, const WeylElement& w);

bool is_dominant(const RootDatum& d, const IntVector& coweight);

/// nu <= lambda iff lambda - nu is a nonnegative integer combination of simple coroots.
bool dominance_leq(const RootDatum& d, const IntVector& nu, const IntVector& lambda);

/// Dominant nu <= lambda, listed so that every element precedes those below it
/// (lambda first). Throws ValidationError when lambda is not dominant.
std::vector<IntVector> dominant_below(const RootDatum& d, const IntVector& lambda,
                                      std::size_t cap = 1'000'000);

/// Sum over the stabilizer of lambda of t^{length}, as a polynomial in t.
LaurentScalar stabilizer_poincare(const RootDatum& d, const IntVector& lambda,
                                  std::size_t cap = kDefaultWeylCap);

/// Extra correspondence an isomorphism must respect: vector `in_second` of the
/// second datum maps to `in_first` of the first one.
struct IsoAnchor {
    enum class Side { weight, coweight } side = Side::weight;
    IntVector in_first;
    IntVector in_second;
};

/// A matrix M: X2 -> X1, invertible over Z, carrying the simple roots of d2 to
/// those of d1 (up to a Dynkin diagram permutation) whose contragredient
/// carries coroots to coroots. Absent when none is found.
std::optional<IntMatrix> datum_isomorphic(const RootDatum& d1, const RootDatum& d2,
                                          const std::vector<IsoAnchor>& anchors = {});

}  // namespace langdual
