// Seeded generators shared by the property tests.
#pragma once

#include <random>

#include "langdual/group_algebra.hpp"

namespace langdual::testing {

inline std::mt19937_64& rng()
{
    static std::mt19937_64 engine(20261016);
    return engine;
}

inline Int uniform(Int lo, Int hi)
{
    return std::uniform_int_distribution<Int>(lo, hi)(rng());
}

inline IntVector random_vector(std::size_t n, Int bound)
{
    IntVector v(n);
    for (auto& x : v) x = uniform(-bound, bound);
    return v;
}

inline LaurentScalar random_scalar(int terms = 3)
{
    LaurentScalar s;
    for (int i = 0; i < terms; ++i) s += LaurentScalar::monomial(uniform(-2, 2), uniform(-3, 3));
    return s;
}

inline GroupAlgebraElement random_element(std::size_t rank, int terms = 4)
{
    GroupAlgebraElement a(rank);
    for (int i = 0; i < terms; ++i) a.add_term(random_vector(rank, 2), random_scalar(2));
    return a;
}

inline GroupAlgebraElement random_nonzero_element(std::size_t rank, int terms = 3)
{
    for (;;) {
        auto a = random_element(rank, terms);
        if (!a.is_zero()) return a;
    }
}

}  // namespace langdual::testing
