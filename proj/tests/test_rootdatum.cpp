#include "doctest.h"

#include <set>

#include "langdual/builtins.hpp"
#include "langdual/errors.hpp"
#include "langdual/rootdatum.hpp"
#include "random_gen.hpp"

using namespace langdual;

namespace {

RootDatum rank_one(Int root, Int coroot)
{
    return RootDatum{"A1", 1, {{root}}, {{coroot}}};
}

}  // namespace

TEST_CASE("validate_datum")
{
    for (const auto& name : builtin_names()) CHECK(validate_datum(builtin_datum(name)).empty());

    const auto bad = validate_datum(rank_one(1, 1));
    REQUIRE(bad.size() == 1);
    CHECK(bad[0].find("pairing") != std::string::npos);
    CHECK(bad[0].find("= 1") != std::string::npos);
    CHECK_FALSE(validate_datum(rank_one(1, 3)).empty());

    // Affine A1: Cartan matrix [[2,-2],[-2,2]] has infinite Weyl group.
    RootDatum affine{"affineA1", 2, {{2, 0}, {-2, 0}}, {{1, 0}, {-1, 0}}};
    CHECK_FALSE(validate_datum(affine).empty());
    RootDatum affine2{"affineA1b", 2, {{1, 1}, {-1, 1}}, {{1, 1}, {-1, 1}}};
    CHECK(affine2.cartan_matrix()(0, 1) == 0);

    RootDatum ragged{"ragged", 2, {{1}}, {{1, -1}}};
    CHECK_FALSE(validate_datum(ragged).empty());

    CHECK(validate_datum(trivial_datum()).empty());
}

TEST_CASE("a datum whose pairing forces an infinite Weyl group is rejected")
{
    // Cartan matrix [[2,-3],[-3,2]] is hyperbolic.
    RootDatum hyper{"hyper", 2, {{2, -3}, {-3, 2}}, {{1, 0}, {0, 1}}};
    const auto v = validate_datum(hyper);
    REQUIRE_FALSE(v.empty());
    CHECK(v.back().find("finite type") != std::string::npos);
    CHECK_THROWS_AS(enumerate_weyl(hyper), ValidationError);
}

TEST_CASE("dual_datum")
{
    CHECK(dual_datum(builtin_datum("SL2")) == builtin_datum("PGL2"));
    CHECK(dual_datum(builtin_datum("GL2")) == builtin_datum("GL2"));
    CHECK(dual_datum(builtin_datum("Sp4")) == builtin_datum("SO5"));
    CHECK(dual_datum(builtin_datum("SL3")) == builtin_datum("PGL3"));
    for (const auto& name : builtin_names()) {
        const auto d = builtin_datum(name);
        CHECK(dual_datum(dual_datum(d)) == d);
        CHECK(validate_datum(dual_datum(d)).empty());
    }
    CHECK_THROWS_AS(dual_datum(rank_one(1, 1)), ValidationError);
}

TEST_CASE("generate_roots")
{
    CHECK(generate_roots(builtin_datum("PGL2")).positive_roots == std::vector<IntVector>{{1}});

    const auto gl3 = generate_roots(builtin_datum("GL3"));
    CHECK(gl3.size() == 3);
    CHECK(std::set<IntVector>(gl3.positive_roots.begin(), gl3.positive_roots.end()) ==
          std::set<IntVector>{{1, -1, 0}, {0, 1, -1}, {1, 0, -1}});

    const auto sp4 = generate_roots(builtin_datum("Sp4"));
    CHECK(std::set<IntVector>(sp4.positive_roots.begin(), sp4.positive_roots.end()) ==
          std::set<IntVector>{{1, -1}, {0, 2}, {1, 1}, {2, 0}});
    // Coroots track roots: the long root (2,0) has coroot (1,0).
    for (std::size_t k = 0; k < sp4.size(); ++k) {
        CHECK(dot(sp4.positive_roots[k], sp4.positive_coroots[k]) == 2);
        if (sp4.positive_roots[k] == IntVector{2, 0}) CHECK(sp4.positive_coroots[k] == IntVector{1, 0});
        if (sp4.positive_roots[k] == IntVector{1, 1}) CHECK(sp4.positive_coroots[k] == IntVector{1, 1});
    }
}

TEST_CASE("enumerate_weyl")
{
    CHECK(enumerate_weyl(builtin_datum("PGL2")).size() == 2);
    CHECK(enumerate_weyl(builtin_datum("GL3")).size() == 6);
    CHECK(enumerate_weyl(builtin_datum("Sp4")).size() == 8);
    CHECK(enumerate_weyl(trivial_datum()).size() == 1);
    CHECK_THROWS_AS(enumerate_weyl(builtin_datum("Sp4"), 5), ResourceCapError);

    for (const auto& name : builtin_names()) {
        const auto d = builtin_datum(name);
        const auto roots = generate_roots(d);
        const auto group = enumerate_weyl(d);
        std::set<IntVector> all(roots.positive_roots.begin(), roots.positive_roots.end());
        for (const auto& a : roots.positive_roots) all.insert(-a);
        for (const auto& w : group) {
            std::set<IntVector> image;
            for (const auto& a : all) image.insert(w.mat_x.apply(a));
            CHECK(image == all);
            CHECK(inversion_count(d, roots, w) == w.length());
            // Contragredient pair.
            const auto x = testing::random_vector(d.rank, 3);
            const auto y = testing::random_vector(d.rank, 3);
            CHECK(dot(w.mat_x.apply(x), w.mat_y.apply(y)) == dot(x, y));
        }
        CHECK(group.front().length() == 0);
        CHECK(longest_element(group).length() == roots.size());
    }
}

TEST_CASE("dominance order")
{
    const auto pgl2 = builtin_datum("PGL2");
    CHECK(dominance_leq(pgl2, {2}, {2}));
    CHECK(dominance_leq(pgl2, {0}, {2}));
    CHECK_FALSE(dominance_leq(pgl2, {1}, {2}));
    CHECK_FALSE(dominance_leq(pgl2, {2}, {0}));

    // Partial order on dominant coweights of GL3 in a small box.
    const auto gl3 = builtin_datum("GL3");
    std::vector<IntVector> dom;
    for (Int a = -1; a <= 2; ++a)
        for (Int b = -1; b <= a; ++b)
            for (Int c = -1; c <= b; ++c) dom.push_back({a, b, c});
    for (const auto& x : dom)
        for (const auto& y : dom) {
            if (dominance_leq(gl3, x, y) && dominance_leq(gl3, y, x)) CHECK(x == y);
            for (const auto& z : dom)
                if (dominance_leq(gl3, x, y) && dominance_leq(gl3, y, z)) CHECK(dominance_leq(gl3, x, z));
        }
}

TEST_CASE("dominant_below")
{
    const auto pgl2 = builtin_datum("PGL2");
    CHECK(dominant_below(pgl2, {2}) == std::vector<IntVector>{{2}, {0}});
    CHECK(dominant_below(pgl2, {1}) == std::vector<IntVector>{{1}});
    CHECK(dominant_below(pgl2, {5}) == std::vector<IntVector>{{5}, {3}, {1}});
    for (const auto& name : builtin_names()) {
        const auto d = builtin_datum(name);
        CHECK(dominant_below(d, zero_vector(d.rank)) == std::vector<IntVector>{zero_vector(d.rank)});
    }
    CHECK_THROWS_AS(dominant_below(pgl2, {-1}), ValidationError);

    // Brute force over a box for GL3 and Sp4.
    for (const char* name : {"GL3", "Sp4", "SL3"}) {
        const auto d = builtin_datum(name);
        IntVector lambda = d.rank == 3 ? IntVector{2, 1, -1} : IntVector{2, 1};
        if (std::string(name) == "SL3") lambda = {1, 2};
        REQUIRE(is_dominant(d, lambda));
        std::set<IntVector> expected;
        IntVector v(d.rank, -5);
        for (;;) {
            if (is_dominant(d, v) && dominance_leq(d, v, lambda)) expected.insert(v);
            std::size_t i = 0;
            while (i < v.size() && v[i] == 5) v[i++] = -5;
            if (i == v.size()) break;
            ++v[i];
        }
        const auto got = dominant_below(d, lambda);
        CHECK(std::set<IntVector>(got.begin(), got.end()) == expected);
        CHECK(got.front() == lambda);
        for (std::size_t i = 0; i < got.size(); ++i)
            for (std::size_t j = i + 1; j < got.size(); ++j) CHECK_FALSE(dominance_leq(d, got[i], got[j]));
    }
}

TEST_CASE("stabilizer_poincare")
{
    const auto t = [](Int k) { return LaurentScalar::monomial(k); };
    CHECK(stabilizer_poincare(builtin_datum("PGL2"), {3}) == LaurentScalar(1));
    CHECK(stabilizer_poincare(builtin_datum("PGL2"), {0}) == 1 + t(1));
    CHECK(stabilizer_poincare(builtin_datum("GL3"), {0, 0, 0}) == (1 + t(1)) * (1 + t(1) + t(2)));
    CHECK(stabilizer_poincare(builtin_datum("GL3"), {1, 1, 0}) == 1 + t(1));
    CHECK(stabilizer_poincare(builtin_datum("GL3"), {2, 1, 0}) == LaurentScalar(1));
}

TEST_CASE("datum_isomorphic")
{
    for (const auto& name : builtin_names()) {
        const auto d = builtin_datum(name);
        const auto m = datum_isomorphic(d, d);
        REQUIRE(m.has_value());
        CHECK(*m == IntMatrix::identity(d.rank));
    }
    CHECK_FALSE(datum_isomorphic(builtin_datum("SL2"), builtin_datum("PGL2")).has_value());
    CHECK_FALSE(datum_isomorphic(builtin_datum("Sp4"), builtin_datum("SO5")).has_value());
    CHECK_FALSE(datum_isomorphic(builtin_datum("SL3"), builtin_datum("PGL3")).has_value());

    // A relabelled GL2 (X coordinates swapped) is found, including the diagram action.
    RootDatum swapped{"GL2'", 2, {{-1, 1}}, {{-1, 1}}};
    const auto m = datum_isomorphic(builtin_datum("GL2"), swapped);
    REQUIRE(m.has_value());
    CHECK(m->apply({-1, 1}) == IntVector{1, -1});
    CHECK(m->transpose().apply({1, -1}) == IntVector{-1, 1});

    // SL3 with its two simple roots listed in the other order.
    const auto sl3 = builtin_datum("SL3");
    RootDatum sl3_swapped{"SL3'", 2, {sl3.simple_roots[1], sl3.simple_roots[0]},
                          {sl3.simple_coroots[1], sl3.simple_coroots[0]}};
    CHECK(datum_isomorphic(sl3, sl3_swapped).has_value());
}
