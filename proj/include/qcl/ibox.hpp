#pragma once

#include <cstddef>
#include <vector>

#include "qcl/cartan.hpp"
#include "qcl/gls.hpp"
#include "qcl/pbw.hpp"

namespace qcl {

/// An interval [first, last] of word positions (0-based) with equal end
/// letters.
struct IBox {
    std::size_t first;
    std::size_t last;
    friend bool operator==(const IBox&, const IBox&) = default;
};

void validate_box(const WeylWord& word, const IBox& box);
std::vector<IBox> all_boxes(const WeylWord& word);
/// The box [k_min, k] labelling the k-th GLS cluster variable.
IBox cluster_box(const WeylWord& word, std::size_t k);

/// Positions u in [first, last] carrying the same letter.
std::vector<std::size_t> support(const WeylWord& word, const IBox& box);
PbwVector pbw_of_box(const WeylWord& word, const IBox& box);

/// (first_1)_- < first_2 <= last_2 < (last_1)_+, in either nesting order.
bool boxes_commute(const WeylWord& word, const IBox& box1, const IBox& box2);

/// Whether the double lambda-sum is known to compute Lambda for the pair:
/// x > x'_-, or y_+ > y', or the boxes commute.
bool lambda_formula_applies(const WeylWord& word, const IBox& box1, const IBox& box2);

/// Lambda(M[box1], M[box2]) as the double lambda-sum over the supports.
/// Throws formula-not-applicable outside the proven range.
Int lambda_boxes(const GlsSeed& gls, const IBox& box1, const IBox& box2);

} // namespace qcl
