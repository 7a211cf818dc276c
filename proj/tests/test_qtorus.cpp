#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qcl/qtorus.hpp"
#include "random_elements.hpp"

using namespace qcl;

TEST_SUITE("qtorus") {

TEST_CASE("Laurent coefficients") {
    const QLaurent a = QLaurent::monomial(1) + QLaurent::monomial(-1);
    const QLaurent b = QLaurent::monomial(2, 3) - QLaurent(1);
    CHECK((a * b).coefficient(3) == 3);
    CHECK((a * b).coefficient(1) == 2);
    CHECK((a * b).coefficient(-1) == -1);
    CHECK(a.at_one() == 2);
    CHECK((a - a).is_zero());
    CHECK(*(a * b).divide_exact(b) == a);
    CHECK_FALSE(QLaurent::monomial(0, 3).divide_exact(QLaurent(2)).has_value());
    CHECK_FALSE(QLaurent(1).divide_exact(a).has_value());
}

TEST_CASE("basis monomials") {
    const auto L = std::make_shared<const IntMatrix>(IntMatrix{{0, 1}, {-1, 0}});
    CHECK(x_pow(L, {0, 0}) == TorusElement::unit(L));
    const auto x1 = x_pow(L, {1, 0});
    CHECK(x1.size() == 1);
    CHECK(x1.coefficient({1, 0}) == QLaurent(1));
    CHECK(x_pow(L, {3, -2}).coefficient({3, -2}) == QLaurent(1));
}

TEST_CASE("closed-form products") {
    const auto L = std::make_shared<const IntMatrix>(IntMatrix{{0, 1}, {-1, 0}});
    CHECK(x_pow(L, {1, 0}) * x_pow(L, {0, 1}) == x_pow(L, {1, 1}).shifted(1));
    CHECK(x_pow(L, {0, 1}) * x_pow(L, {1, 0}) == x_pow(L, {1, 1}).shifted(-1));
    const IntVector a{2, -3};
    CHECK(x_pow(L, a) * x_pow(L, -a) == TorusElement::unit(L));
    CHECK(x_pow(L, a) * TorusElement::unit(L) == x_pow(L, a));
}

TEST_CASE("multiplication agrees with generator-word normal ordering") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 2 + trial % 3;
        const auto L = testing::random_skew(rng, n, 2);
        const auto p = testing::random_element(rng, L, 3, 2);
        const auto r = testing::random_element(rng, L, 3, 2);
        CHECK(oracle::from_element(p * r) == oracle::multiply(*L, oracle::from_element(p), oracle::from_element(r)));
    }
}

TEST_CASE("associativity and distributivity") {
    std::mt19937 rng(19);
    for (int trial = 0; trial < 200; ++trial) {
        const auto L = testing::random_skew(rng, 3, 3);
        const auto a = testing::random_element(rng, L, 3, 2);
        const auto b = testing::random_element(rng, L, 3, 2);
        const auto c = testing::random_element(rng, L, 3, 2);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("exact right division") {
    const auto L = std::make_shared<const IntMatrix>(IntMatrix{{0, 2, -1}, {-2, 0, 3}, {1, -3, 0}});
    const IntVector a{1, -2, 0};
    const IntVector b{0, 1, 1};
    CHECK(exact_div_right(x_pow(L, a + b), x_pow(L, b)) == x_pow(L, a).shifted(-torus_form(*L, a, b)));

    const auto L2 = std::make_shared<const IntMatrix>(IntMatrix{{0, 1}, {-1, 0}});
    try {
        (void)exact_div_right(x_pow(L2, {1, 0}), x_pow(L2, {1, 0}) + x_pow(L2, {0, 1}));
        FAIL("expected not-divisible");
    } catch (const Error& e) {
        CHECK(e.code() == "not-divisible");
    }
    CHECK_THROWS_AS(exact_div_right(x_pow(L2, {1, 0}), TorusElement(L2)), Error);

    std::mt19937 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        const auto Lr = testing::random_skew(rng, 3, 2);
        const auto r = testing::random_element(rng, Lr, 4, 2);
        const auto q = testing::random_element(rng, Lr, 3, 2);
        if (q.is_zero()) continue;
        CHECK(exact_div_right(r * q, q) == r);
    }
}

TEST_CASE("positivity") {
    const auto L = std::make_shared<const IntMatrix>(IntMatrix{{0, 1}, {-1, 0}});
    CHECK(is_positive(x_pow(L, {1, 0}) + x_pow(L, {0, 1})));
    CHECK_FALSE(is_positive(x_pow(L, {1, 0}) - x_pow(L, {0, 1})));
    CHECK(is_positive(TorusElement(L)));
}

TEST_CASE("torus validation") {
    CHECK_THROWS_AS(TorusElement(std::make_shared<const IntMatrix>(IntMatrix{{0, 1}, {1, 0}})), Error);
    const auto L = std::make_shared<const IntMatrix>(IntMatrix{{0, 1}, {-1, 0}});
    CHECK_THROWS_AS(x_pow(L, {1, 0, 0}), Error);
    const auto other = std::make_shared<const IntMatrix>(IntMatrix{{0, 2}, {-2, 0}});
    CHECK_THROWS_AS(x_pow(L, {1, 0}) * x_pow(other, {0, 1}), Error);
    CHECK_THROWS_AS(power(x_pow(L, {1, 0}), -1), Error);
    CHECK(power(x_pow(L, {1, 1}), 3) == x_pow(L, {3, 3}));
}

}
