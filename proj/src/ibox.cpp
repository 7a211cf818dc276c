#include "qcl/ibox.hpp"

namespace qcl {

void validate_box(const WeylWord& word, const IBox& box) {
    if (box.first > box.last || box.last >= word.size()) {
        fail_input("invalid-box", "box [" + std::to_string(box.first + 1) + "," + std::to_string(box.last + 1) +
                                      "] is not an interval inside the word");
    }
    if (word.letter(box.first) != word.letter(box.last)) {
        fail_input("invalid-box", "box end points carry different letters");
    }
}

std::vector<IBox> all_boxes(const WeylWord& word) {
    std::vector<IBox> out;
    for (std::size_t a = 0; a < word.size(); ++a) {
        for (std::size_t b = a; b < word.size(); ++b) {
            if (word.letter(a) == word.letter(b)) {
                out.push_back(IBox{a, b});
            }
        }
    }
    return out;
}

IBox cluster_box(const WeylWord& word, std::size_t k) {
    const auto maps = word.position_maps(k);
    return IBox{static_cast<std::size_t>(maps.k_min), k};
}

std::vector<std::size_t> support(const WeylWord& word, const IBox& box) {
    validate_box(word, box);
    std::vector<std::size_t> out;
    for (std::size_t u = box.first; u <= box.last; ++u) {
        if (word.letter(u) == word.letter(box.first)) {
            out.push_back(u);
        }
    }
    return out;
}

PbwVector pbw_of_box(const WeylWord& word, const IBox& box) {
    PbwVector a{IntVector(word.size(), 0)};
    for (std::size_t u : support(word, box)) {
        a.entries[u] = 1;
    }
    return a;
}

bool boxes_commute(const WeylWord& word, const IBox& box1, const IBox& box2) {
    validate_box(word, box1);
    validate_box(word, box2);
    auto nested = [&](const IBox& outer, const IBox& inner) {
        const long a_minus = word.k_minus(outer.first);
        const long b_plus = word.k_plus(outer.last);
        return a_minus < static_cast<long>(inner.first) && inner.first <= inner.last &&
               static_cast<long>(inner.last) < b_plus;
    };
    return nested(box1, box2) || nested(box2, box1);
}

bool lambda_formula_applies(const WeylWord& word, const IBox& box1, const IBox& box2) {
    validate_box(word, box1);
    validate_box(word, box2);
    const bool left = static_cast<long>(box1.first) > word.k_minus(box2.first);
    const bool right = word.k_plus(box1.last) > static_cast<long>(box2.last);
    return left || right || boxes_commute(word, box1, box2);
}

Int lambda_boxes(const GlsSeed& gls, const IBox& box1, const IBox& box2) {
    if (!lambda_formula_applies(gls.word, box1, box2)) {
        refuse("formula-not-applicable", "neither x > x'_- nor y_+ > y' holds and the boxes do not commute");
    }
    Int sum = 0;
    const auto s1 = support(gls.word, box1);
    const auto s2 = support(gls.word, box2);
    for (std::size_t u : s1) {
        for (std::size_t v : s2) {
            sum = checked_add(sum, gls.lambda(u, v));
        }
    }
    return sum;
}

} // namespace qcl
