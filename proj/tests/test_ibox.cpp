#include <doctest.h>

#include "qcl/ibox.hpp"

using namespace qcl;

namespace {

std::shared_ptr<const CartanDatum> datum(const char* name) {
    return std::make_shared<const CartanDatum>(CartanDatum::preset(name));
}

} // namespace

TEST_SUITE("ibox") {

TEST_CASE("supports and PBW vectors") {
    const WeylWord a2(datum("A2"), {0, 1, 0});
    CHECK(support(a2, IBox{0, 2}) == std::vector<std::size_t>{0, 2});
    CHECK(support(a2, IBox{1, 1}) == std::vector<std::size_t>{1});
    CHECK(pbw_of_box(a2, IBox{0, 2}) == PbwVector{{1, 0, 1}});
    CHECK(pbw_of_box(a2, IBox{1, 1}) == PbwVector{{0, 1, 0}});
    const WeylWord a3(datum("A3"), {0, 1, 0, 2, 1, 0});
    CHECK(support(a3, IBox{0, 5}) == std::vector<std::size_t>{0, 2, 5});
    for (std::size_t k = 0; k < a3.size(); ++k) {
        IntVector e(a3.size(), 0);
        e[k] = 1;
        CHECK(pbw_of_box(a3, cluster_box(a3, k)) == pbw_of_cluster_monomial(a3, e));
    }
}

TEST_CASE("box validation") {
    const WeylWord a2(datum("A2"), {0, 1, 0});
    CHECK_THROWS_AS(validate_box(a2, IBox{0, 1}), Error);
    CHECK_THROWS_AS(validate_box(a2, IBox{2, 0}), Error);
    CHECK_THROWS_AS(validate_box(a2, IBox{0, 3}), Error);
    CHECK(all_boxes(a2).size() == 4);
}

TEST_CASE("commutation predicate") {
    const WeylWord a2(datum("A2"), {0, 1, 0});
    CHECK(boxes_commute(a2, IBox{0, 2}, IBox{1, 1}));
    CHECK_FALSE(boxes_commute(a2, IBox{0, 0}, IBox{2, 2}));
    for (const IBox& b : all_boxes(a2)) {
        CHECK(boxes_commute(a2, b, b));
    }
}

TEST_CASE("lambda on boxes") {
    const GlsSeed gls = build_gls(WeylWord(datum("A2"), {0, 1, 0}));
    CHECK(lambda_boxes(gls, IBox{0, 0}, IBox{1, 1}) == 1);
    CHECK(lambda_boxes(gls, IBox{0, 0}, IBox{0, 2}) == -1);
    for (const IBox& b : all_boxes(gls.word)) {
        CHECK(lambda_boxes(gls, b, b) == 0);
    }
}

TEST_CASE("formula outside its range is refused") {
    // Some pairs of boxes in this word meet none of the three conditions.
    const GlsSeed gls = build_gls(WeylWord(datum("A3"), {0, 1, 0, 2, 1, 0}));
    bool refused = false;
    for (const IBox& x : all_boxes(gls.word)) {
        for (const IBox& y : all_boxes(gls.word)) {
            if (lambda_formula_applies(gls.word, x, y)) {
                continue;
            }
            try {
                (void)lambda_boxes(gls, x, y);
                FAIL("expected formula-not-applicable");
            } catch (const Error& e) {
                CHECK(e.code() == "formula-not-applicable");
                CHECK(e.kind() == ErrorKind::refusal);
                refused = true;
            }
        }
    }
    CHECK(refused);
}

}
