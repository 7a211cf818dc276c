#include <doctest.h>

#include <random>

#include "qcl/pbw.hpp"

using namespace qcl;

namespace {

std::shared_ptr<const CartanDatum> datum(const char* name) {
    return std::make_shared<const CartanDatum>(CartanDatum::preset(name));
}

} // namespace

TEST_SUITE("pbw_g") {

TEST_CASE("A2 PBW and g-vectors") {
    const WeylWord word(datum("A2"), {0, 1, 0});
    CHECK(pbw_to_g(word, PbwVector{{0, 0, 1}}) == GVector{{-1, 0, 1}});
    CHECK(pbw_to_g(word, PbwVector{{1, 0, 0}}) == GVector{{1, 0, 0}});
    CHECK(pbw_to_g(word, PbwVector{{0, 0, 0}}) == GVector{{0, 0, 0}});

    auto back = g_to_pbw(word, GVector{{-1, 0, 1}});
    CHECK(back.pbw == PbwVector{{0, 0, 1}});
    CHECK(back.in_cw);
    back = g_to_pbw(word, GVector{{-1, 0, 0}});
    CHECK(back.pbw == PbwVector{{-1, 0, 0}});
    CHECK_FALSE(back.in_cw);
}

TEST_CASE("cluster monomials") {
    const WeylWord word(datum("A2"), {0, 1, 0});
    CHECK(pbw_of_cluster_monomial(word, {0, 0, 1}) == PbwVector{{1, 0, 1}});
    CHECK(pbw_of_cluster_monomial(word, {0, 1, 0}) == PbwVector{{0, 1, 0}});
    CHECK(pbw_of_cluster_monomial(word, {0, 0, 0}) == PbwVector{{0, 0, 0}});
    CHECK_THROWS_AS(pbw_of_cluster_monomial(word, {-1, 0, 0}), Error);
}

TEST_CASE("pairings on A2") {
    const GlsSeed gls = build_gls(WeylWord(datum("A2"), {0, 1, 0}));
    CHECK(l_pairing(gls, PbwVector{{1, 0, 0}}, PbwVector{{0, 0, 1}}) == -1);
    CHECK(gr_pairing(gls, GVector{{1, 0, 0}}, GVector{{-1, 0, 1}}) == -1);
    CHECK(gl_pairing(gls, GVector{{1, 0, 0}}, GVector{{-1, 1, 0}}) == 1);
    // The word (2,1,2) swaps the roles: there <1> is the third PBW
    // generator and <2> is the first.
    const GlsSeed other = build_gls(WeylWord(datum("A2"), {1, 0, 1}));
    CHECK(gr_pairing(other, GVector{{-1, 0, 1}}, GVector{{1, 0, 0}}) == 1);
    CHECK(gl_pairing(other, GVector{{-1, 1, 0}}, GVector{{1, 0, 0}}) == -1);
}

TEST_CASE("pbw_to_g and g_to_pbw are mutually inverse") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<Int> entry(-6, 6);
    for (const char* type : {"A3", "B3", "G2"}) {
        const auto D = datum(type);
        const auto words = reduced_words_of_longest(*D);
        for (int trial = 0; trial < 200; ++trial) {
            const WeylWord word(D, words[static_cast<std::size_t>(trial) % words.size()]);
            IntVector x(word.size());
            for (auto& e : x) e = entry(rng);
            CHECK(g_to_pbw(word, pbw_to_g(word, PbwVector{x})).pbw == PbwVector{x});
            CHECK(pbw_to_g(word, g_to_pbw(word, GVector{x}).pbw) == GVector{x});
        }
    }
}

TEST_CASE("PBW vectors of GLS variables are the columns of the transfer matrix") {
    const auto D = datum("C3");
    for (const auto& letters : reduced_words_of_longest(*D)) {
        const WeylWord word(D, letters);
        const IntMatrix T = g_to_pbw_matrix(word);
        for (std::size_t k = 0; k < word.size(); ++k) {
            IntVector e(word.size(), 0);
            e[k] = 1;
            CHECK(pbw_of_cluster_monomial(word, e).entries == T.col(k));
        }
    }
}

TEST_CASE("L pairing is additive on cluster monomials") {
    std::mt19937 rng(43);
    std::uniform_int_distribution<Int> entry(0, 3);
    const auto D = datum("B3");
    const auto words = reduced_words_of_longest(*D);
    for (int trial = 0; trial < 100; ++trial) {
        const GlsSeed gls = build_gls(WeylWord(D, words[static_cast<std::size_t>(trial) % words.size()]));
        IntVector m1(gls.size());
        IntVector m2(gls.size());
        IntVector y(gls.size());
        for (auto& e : m1) e = entry(rng);
        for (auto& e : m2) e = entry(rng);
        for (auto& e : y) e = entry(rng);
        const auto a1 = pbw_of_cluster_monomial(gls.word, m1);
        const auto a2 = pbw_of_cluster_monomial(gls.word, m2);
        const auto a12 = pbw_of_cluster_monomial(gls.word, m1 + m2);
        CHECK(a12.entries == a1.entries + a2.entries);
        CHECK(l_pairing(gls, a12, PbwVector{y}) == l_pairing(gls, a1, PbwVector{y}) + l_pairing(gls, a2, PbwVector{y}));
    }
}

TEST_CASE("word mismatch") {
    const WeylWord word(datum("A2"), {0, 1, 0});
    CHECK_THROWS_AS(pbw_to_g(word, PbwVector{{1, 0}}), Error);
    CHECK_THROWS_AS(g_to_pbw(word, GVector{{1, 0, 0, 0}}), Error);
}

}
