#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qcl/cluster.hpp"
#include "qcl/gls.hpp"
#include "random_elements.hpp"

using namespace qcl;

namespace {

GlsSeed gls_of(const char* type, std::vector<std::size_t> letters) {
    auto D = std::make_shared<const CartanDatum>(CartanDatum::preset(type));
    return build_gls(WeylWord(D, std::move(letters)));
}

} // namespace

TEST_SUITE("cluster_core") {

TEST_CASE("compatibility of hand-made pairs") {
    // Rank 2 with one frozen index: B^T L = [2 | 0].
    const IntMatrix L{{0, -2}, {2, 0}};
    const IntMatrix B{{0}, {1}};
    const auto pair = make_compatible_pair(L, B, {0});
    CHECK(pair.d == IntVector{2});
    CHECK(pair.frozen() == std::vector<std::size_t>{1});
    CHECK_THROWS_AS(make_compatible_pair(L, IntMatrix{{0}, {-1}}, {0}), Error);
    CHECK_THROWS_AS(make_compatible_pair(IntMatrix{{0, 1}, {1, 0}}, B, {0}), Error);
    CHECK_THROWS_AS(pair.exchange_column(1), Error);
    CHECK_THROWS_AS(pair.exchange_column(5), Error);
}

TEST_CASE("A2 GLS pair mutation") {
    const auto gls = gls_of("A2", {0, 1, 0});
    const auto mu = mutate_pair(gls.pair(), 0);
    CHECK(mu.b(0, 0) == 0);
    CHECK(mu.b(1, 0) == 1);
    CHECK(mu.b(2, 0) == -1);
    CHECK(is_compatible(mu));
    CHECK(mu.d == gls.pair().d);
    CHECK(mutate_pair(mu, 0) == gls.pair());
}

TEST_CASE("A2 first mutation") {
    const auto gls = gls_of("A2", {0, 1, 0});
    const auto seed = mutate_seed(gls.seed, 0);
    const auto& L0 = gls.seed.initial_L();
    CHECK(seed.vars[0] == x_pow(L0, {-1, 0, 1}) + x_pow(L0, {-1, 1, 0}));
    CHECK(seed.vars[1] == gls.seed.vars[1]);
    CHECK(degree(gls.pair(), seed.vars[0]) == IntVector{-1, 0, 1});
    CHECK(codegree(gls.pair(), seed.vars[0]) == IntVector{-1, 1, 0});
    CHECK(seed.history == std::vector<std::size_t>{0});
    CHECK(vars_quasi_commute(seed));
}

TEST_CASE("dominance order") {
    const auto gls = gls_of("A2", {0, 1, 0});
    const auto& pair = gls.pair();
    CHECK(dominance_leq(pair, {1, 2, 3}, {1, 2, 3}));
    CHECK(*dominance_witness(pair, {-1, 1, 0}, {-1, 0, 1}) == IntVector{1});
    CHECK(dominance_leq(pair, {-1, 1, 0}, {-1, 0, 1}));
    CHECK(*dominance_witness(pair, {-1, 0, 1}, {-1, 1, 0}) == IntVector{-1});
    CHECK_FALSE(dominance_leq(pair, {-1, 0, 1}, {-1, 1, 0}));
    CHECK_FALSE(dominance_leq(pair, {0, 0, 0}, {1, 0, 0}));
}

TEST_CASE("frame monomials of the initial seed") {
    const auto gls = gls_of("B2", {0, 1, 0, 1});
    const auto& L0 = gls.seed.initial_L();
    CHECK(frame_monomial(gls.seed, {0, 0, 0, 0}) == TorusElement::unit(L0));
    CHECK(frame_monomial(gls.seed, {0, 1, 0, 0}) == gls.seed.vars[1]);
    CHECK(frame_monomial(gls.seed, {2, 1, 0, 3}) == x_pow(L0, {2, 1, 0, 3}));
    CHECK_THROWS_AS(frame_monomial(gls.seed, {0, -1, 0, 0}), Error);
}

TEST_CASE("not pointed") {
    const auto gls = gls_of("A2", {0, 1, 0});
    const auto& L0 = gls.seed.initial_L();
    // Two exponents that are incomparable in the dominance order.
    const auto p = x_pow(L0, {1, 0, 0}) + x_pow(L0, {0, 1, 0});
    try {
        (void)degree(gls.pair(), p);
        FAIL("expected not-pointed");
    } catch (const Error& e) {
        CHECK(e.code() == "not-pointed");
        CHECK(e.kind() == ErrorKind::refusal);
    }
    CHECK_THROWS_AS(codegree(gls.pair(), p), Error);
    CHECK_THROWS_AS(degree(gls.pair(), TorusElement(L0)), Error);
}

TEST_CASE("expansions specialize to classical cluster variables at v = 1") {
    std::mt19937 rng(29);
    std::uniform_int_distribution<std::uint64_t> value(1, oracle::prime - 1);
    const std::vector<std::pair<const char*, std::vector<std::size_t>>> words{
        {"A2", {0, 1, 0}}, {"B2", {0, 1, 0, 1}}, {"G2", {1, 0, 1, 0, 1, 0}}, {"A3", {0, 1, 0, 2, 1, 0}}};
    for (const auto& [type, letters] : words) {
        CAPTURE(type);
        const auto gls = gls_of(type, letters);
        for (int walk = 0; walk < 10; ++walk) {
            std::vector<std::uint64_t> point(gls.size());
            for (auto& x : point) x = value(rng);
            auto classical = oracle::classical(gls.pair(), point);
            QuantumSeed seed = gls.seed;
            std::uniform_int_distribution<std::size_t> pick(0, gls.pair().exchangeable.size() - 1);
            for (int step = 0; step < 5; ++step) {
                const std::size_t k = gls.pair().exchangeable[pick(rng)];
                seed = mutate_seed(seed, k);
                classical.mutate(k);
                for (std::size_t i = 0; i < seed.rank(); ++i) {
                    CHECK(oracle::evaluate_at_one(seed.vars[i], point) == classical.x[i]);
                }
                for (std::size_t c = 0; c < seed.pair.exchangeable.size(); ++c) {
                    for (std::size_t i = 0; i < seed.rank(); ++i) {
                        CHECK(seed.pair.B(i, c) == classical.b[i][seed.pair.exchangeable[c]]);
                    }
                }
            }
        }
    }
}

TEST_CASE("mutation laws on random compatible pairs") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        const auto pair = testing::random_pair(rng, 1 + trial % 3, 1 + trial % 2);
        const auto start = testing::random_walk(rng, QuantumSeed::initial(pair), trial % 4);
        for (std::size_t k : pair.exchangeable) {
            const auto once = mutate_seed(start, k);
            CHECK(is_compatible(once.pair));
            CHECK(once.pair.d == start.pair.d);
            const auto twice = mutate_seed(once, k);
            CHECK(twice.pair == start.pair);
            CHECK(twice.vars == start.vars);
            CHECK(vars_quasi_commute(once));
        }
    }
}

TEST_CASE("A2 positivity along random sequences") {
    std::mt19937 rng(37);
    const auto gls = gls_of("A2", {0, 1, 0});
    for (int trial = 0; trial < 20; ++trial) {
        const auto seed = testing::random_walk(rng, gls.seed, 6);
        for (const auto& v : seed.vars) {
            CHECK(is_positive(v));
        }
    }
}

TEST_CASE("positivity along random sequences of length 6 in rank 2 and 3") {
    std::mt19937 rng(47);
    const std::vector<std::pair<const char*, std::vector<std::size_t>>> words{
        {"B2", {0, 1, 0, 1}}, {"G2", {0, 1, 0, 1, 0, 1}}, {"A3", {0, 1, 0, 2, 1, 0}}, {"A3", {1, 0, 2, 1, 0, 2}}};
    for (const auto& [type, letters] : words) {
        CAPTURE(type);
        const auto gls = gls_of(type, letters);
        for (int trial = 0; trial < 15; ++trial) {
            const auto seed = testing::random_walk(rng, gls.seed, 6);
            for (const auto& v : seed.vars) {
                CHECK(is_positive(v));
                CHECK_NOTHROW((void)degree(gls.pair(), v));
                CHECK_NOTHROW((void)codegree(gls.pair(), v));
            }
        }
    }
}

TEST_CASE("dominance is a partial order") {
    std::mt19937 rng(53);
    std::uniform_int_distribution<Int> entry(-2, 2);
    std::uniform_int_distribution<Int> step(0, 2);
    const auto gls = gls_of("A3", {0, 1, 0, 2, 1, 0});
    const auto& pair = gls.pair();
    auto random_vector = [&] {
        IntVector x(pair.rank());
        for (auto& e : x) e = entry(rng);
        return x;
    };
    // Walk upward by non-negative combinations of B columns.
    auto above = [&](IntVector x) {
        for (std::size_t c = 0; c < pair.exchangeable.size(); ++c) {
            const Int s = step(rng);
            for (std::size_t i = 0; i < pair.rank(); ++i) x[i] += s * pair.B(i, c);
        }
        return x;
    };
    for (int trial = 0; trial < 300; ++trial) {
        const IntVector a = random_vector();
        const IntVector b = above(a);
        const IntVector c = above(b);
        CHECK(dominance_leq(pair, a, a));
        CHECK(dominance_leq(pair, a, b));
        CHECK(dominance_leq(pair, b, c));
        CHECK(dominance_leq(pair, a, c));
        if (dominance_leq(pair, b, a)) {
            CHECK(a == b);
        }
        const IntVector d = random_vector();
        if (dominance_leq(pair, a, d) && dominance_leq(pair, d, a)) {
            CHECK(a == d);
        }
    }
}

TEST_CASE("mutation of a frozen index is rejected") {
    const auto gls = gls_of("A2", {0, 1, 0});
    CHECK_THROWS_AS(mutate_seed(gls.seed, 1), Error);
    CHECK_THROWS_AS(mutate_seed(gls.seed, 7), Error);
}

}
