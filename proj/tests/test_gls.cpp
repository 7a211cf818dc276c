#include <doctest.h>

#include "oracles.hpp"
#include "qcl/gls.hpp"
#include "qcl/pbw.hpp"

using namespace qcl;

namespace {

std::shared_ptr<const CartanDatum> datum(const char* name) {
    return std::make_shared<const CartanDatum>(CartanDatum::preset(name));
}

} // namespace

TEST_SUITE("gls") {

TEST_CASE("A2 (1,2,1) seed") {
    const GlsSeed gls = build_gls(WeylWord(datum("A2"), {0, 1, 0}));
    CHECK(gls_exchangeable(gls.word) == std::vector<std::size_t>{0});
    CHECK(gls.pair().frozen() == std::vector<std::size_t>{1, 2});
    CHECK(gls.pair().B == IntMatrix{{0}, {-1}, {1}});
    CHECK(gls.printed_l == IntMatrix{{0, -1, 1}, {1, 0, 0}, {-1, 0, 0}});
    CHECK(gls.orientation == LOrientation::transposed);
    CHECK(gls.pair().L == lambda_vars_matrix(gls));
    CHECK(satisfies_gls_identity(gls));
    CHECK(gls.pair().d == IntVector{2});
    CHECK(gls.var_weights[2] == Weight{{-1, -1}});
}

TEST_CASE("A2 Lambda values") {
    const GlsSeed gls = build_gls(WeylWord(datum("A2"), {0, 1, 0}));
    CHECK(lambda_vars(gls, 0, 1) == 1);
    CHECK(lambda_vars(gls, 0, 2) == -1);
    CHECK(lambda_vars(gls, 1, 2) == 0);
    CHECK(lambda_vars(gls, 2, 0) == 1);
    for (std::size_t s = 0; s < 3; ++s) {
        CHECK(lambda_vars(gls, s, s) == 0);
    }
}

TEST_CASE("lambda matrix from the beta sequence") {
    const GlsSeed gls = build_gls(WeylWord(datum("A2"), {0, 1, 0}));
    CHECK(gls.lambda == IntMatrix{{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}});
    // Independent check through the Euclidean realization.
    for (const char* type : {"A2", "A3", "B2", "G2"}) {
        CAPTURE(type);
        const auto D = datum(type);
        const auto E = oracle::euclid(type);
        for (const auto& letters : reduced_words_of_longest(*D)) {
            const WeylWord word(D, letters);
            const auto betas = word.beta_roots();
            const IntMatrix lam = lambda_matrix(word);
            for (std::size_t a = 0; a < word.size(); ++a) {
                for (std::size_t b = 0; b < word.size(); ++b) {
                    const Rational form = E.form(E.of_root(betas[a].coords), E.of_root(betas[b].coords));
                    const Rational expected = a == b ? Rational(0) : (a < b ? form : -form);
                    CHECK(Rational(lam(a, b)) == expected);
                }
            }
        }
    }
}

TEST_CASE("lambda_tilde") {
    const GlsSeed gls = build_gls(WeylWord(datum("A2"), {0, 1, 0}));
    // (Lambda(M1,M2) + (wt1, wt2)) / 2 with (wt1, wt2) = (alpha1, alpha1 + alpha2) = 1.
    CHECK(lambda_tilde(gls, 0, 1) == 1);
    for (const char* type : {"A2", "A3", "B2", "G2"}) {
        const auto D = datum(type);
        const auto E = oracle::euclid(type);
        for (const auto& letters : reduced_words_of_longest(*D)) {
            const GlsSeed g = build_gls(WeylWord(D, letters));
            for (std::size_t s = 0; s < g.size(); ++s) {
                const auto ws = E.of_weight(g.var_weights[s].coords);
                CHECK(Rational(2 * lambda_tilde(g, s, s)) == E.form(ws, ws));
                for (std::size_t t = 0; t < g.size(); ++t) {
                    const auto wt = E.of_weight(g.var_weights[t].coords);
                    const Int value = lambda_tilde(g, s, t);
                    CHECK(value >= 0);
                    CHECK(Rational(2 * value) == Rational(lambda_vars(g, s, t)) + E.form(ws, wt));
                }
            }
        }
    }
}

TEST_CASE("compatibility identity for every reduced word") {
    for (const char* type : {"A2", "A3", "B2", "G2", "B3", "C3"}) {
        CAPTURE(type);
        const auto D = datum(type);
        for (const auto& letters : reduced_words_of_longest(*D)) {
            const GlsSeed gls = build_gls(WeylWord(D, letters));
            CHECK(satisfies_gls_identity(gls));
            for (std::size_t c = 0; c < gls.pair().exchangeable.size(); ++c) {
                CHECK(gls.pair().d[c] == 2 * D->d(letters[gls.pair().exchangeable[c]]));
            }
        }
    }
}

TEST_CASE("exchange matrix entries for a non-longest word") {
    // A3 word (2,1,3,2): only position 1 has a later copy of its letter.
    const WeylWord word(datum("A3"), {1, 0, 2, 1});
    CHECK(gls_exchangeable(word) == std::vector<std::size_t>{0});
    const GlsSeed gls = build_gls(word);
    CHECK(satisfies_gls_identity(gls));
}

TEST_CASE("non-reduced words are rejected") {
    try {
        (void)build_gls(WeylWord(datum("A2"), {0, 1, 0, 1}));
        FAIL("expected not-reduced");
    } catch (const Error& e) {
        CHECK(e.code() == "not-reduced");
        CHECK(e.kind() == ErrorKind::input);
    }
}

TEST_CASE("transfer identity") {
    for (const char* type : {"A2", "A3", "B2", "G2", "C3"}) {
        const auto D = datum(type);
        for (const auto& letters : reduced_words_of_longest(*D)) {
            const WeylWord word(D, letters);
            const GlsSeed gls = build_gls(word);
            const IntMatrix T = g_to_pbw_matrix(word);
            CHECK(T.transpose() * gls.lambda * T == lambda_vars_matrix(gls));
        }
    }
}

}
