#include <doctest.h>

#include <random>

#include <dyndeg/int_poly.hpp>

#include "test_util.hpp"

using namespace dyndeg;
using dyndeg::testutil::lehmer;

TEST_CASE("basic arithmetic") {
    IntPoly xm1({-1, 1}), xp1({1, 1});
    CHECK(xm1 * xp1 == IntPoly({-1, 0, 1}));
    CHECK(xm1 + xp1 == IntPoly({0, 2}));
    CHECK(xm1 - xp1 == IntPoly({-2}));
    CHECK((xm1 * Int(3)) == IntPoly({-3, 3}));
    CHECK(-xm1 == IntPoly({1, -1}));
    CHECK(IntPoly::zero().is_zero());
    CHECK(IntPoly::x() == IntPoly({0, 1}));
    CHECK(IntPoly::monomial(3, Int(2)) == IntPoly({0, 0, 0, 2}));
}

TEST_CASE("gcd and exact division") {
    IntPoly a({-1, 0, 1});      // x^2 - 1
    IntPoly b({1, -2, 1});      // (x-1)^2
    CHECK(poly_gcd(a, b) == IntPoly({-1, 1}));
    CHECK(a.divide_exact(IntPoly({-1, 1})) == IntPoly({1, 1}));
    CHECK_THROWS_AS(a.divide_exact(IntPoly({1, 1, 1})), DivisionNotExact);
    IntPoly quot;
    CHECK(a.try_divide(IntPoly({1, 1}), &quot));
    CHECK(quot == IntPoly({-1, 1}));
    CHECK_FALSE(a.try_divide(IntPoly({2, 1})));
    // gcd normalization: primitive, positive leading coefficient
    CHECK(poly_gcd(IntPoly({-2, 2}), IntPoly({-4, 4})) == IntPoly({-1, 1}));
}

TEST_CASE("palindromic and reciprocal") {
    CHECK(lehmer().is_palindromic());
    CHECK_FALSE(IntPoly({-1, -1, 0, 1}).is_palindromic());
    IntPoly p({2, -3, 1});
    CHECK(p.reciprocal() == IntPoly({1, -3, 2}));
    CHECK(p.reflect() == IntPoly({2, 3, 1}));
}

TEST_CASE("evaluation and signs") {
    IntPoly p({1, -3, 1});
    CHECK(p.eval(Int(0)) == 1);
    CHECK(p.eval(Int(3)) == 1);
    CHECK(p.eval(Rat(1, 2)) == Rat(-1, 4));
    CHECK(p.sign_at(Rat(1, 2)) == -1);
    CHECK(p.sign_at(Rat(0)) == 1);
    CHECK(p.sign_at(Rat(3, 1) - Rat(1, 2)) == -1);
}

TEST_CASE("scale_arg clears denominators") {
    IntPoly p({1, -3, 1});
    // 4 p(x/2) = x^2 - 6x + 4
    CHECK(p.scale_arg(Rat(1, 2)) == IntPoly({4, -6, 1}));
    // p(2x) = 4x^2 - 6x + 1
    CHECK(p.scale_arg(Rat(2)) == IntPoly({1, -6, 4}));
}

TEST_CASE("content and primitive part") {
    IntPoly p({-4, 0, 8});
    CHECK(p.content() == 4);
    CHECK(p.primitive_part() == IntPoly({-1, 0, 2}));
    CHECK(IntPoly({2, 0, -4}).primitive_part() == IntPoly({-1, 0, 2}));
}

TEST_CASE("height and cauchy bound") {
    IntPoly p({1, -3, 1});
    CHECK(p.height() == 3);
    CHECK(p.cauchy_bound() == Rat(4));
    CHECK(lehmer().cauchy_bound() == Rat(2));
}

TEST_CASE("squarefree decomposition") {
    IntPoly p = IntPoly({-1, 1}) * IntPoly({-1, 1}) * IntPoly({-1, 1}) * IntPoly({2, 1}) * IntPoly({2, 1});
    auto dec = squarefree_decomposition(p);
    REQUIRE(dec.size() == 2);
    CHECK(dec[0].first == IntPoly({2, 1}));
    CHECK(dec[0].second == 2);
    CHECK(dec[1].first == IntPoly({-1, 1}));
    CHECK(dec[1].second == 3);
    // re-multiplication reproduces the input
    IntPoly prod = IntPoly::one();
    for (const auto& [f, m] : dec)
        for (int i = 0; i < m; ++i) prod = prod * f;
    CHECK(prod == p);
    CHECK(squarefree_part(p) == IntPoly({-2, 1, 1}));
}

TEST_CASE("ordering is total and consistent") {
    CHECK(IntPoly({-1, -1, 0, 1}) < IntPoly({1, -1, 0, 1}));
    CHECK(IntPoly({5, 1}) < IntPoly({0, 0, 1}));
    CHECK(IntPoly({1, 1}) == IntPoly({1, 1}));
}

TEST_CASE("random product/division roundtrip") {
    std::mt19937 rng(12345);
    for (int iter = 0; iter < 200; ++iter) {
        IntPoly a = dyndeg::testutil::random_monic(rng, 1 + iter % 5, 4);
        IntPoly b = dyndeg::testutil::random_monic(rng, 1 + (iter / 5) % 5, 4);
        CHECK((a * b).divide_exact(b) == a);
    }
}
