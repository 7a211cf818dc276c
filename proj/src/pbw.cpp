#include "qcl/pbw.hpp"

namespace qcl {

namespace {

void check_length(const WeylWord& word, const IntVector& v) {
    if (v.size() != word.size()) {
        fail_input("word-mismatch", "vector of length " + std::to_string(v.size()) + " for a word of length " +
                                        std::to_string(word.size()));
    }
}

Int pairing(const IntMatrix& form, const IntVector& x, const IntVector& y) {
    if (x.size() != form.rows() || y.size() != form.rows()) {
        fail_input("word-mismatch", "pairing arguments do not match the word length");
    }
    return form.bilinear(x, y);
}

} // namespace

GVector pbw_to_g(const WeylWord& word, const PbwVector& a) {
    check_length(word, a.entries);
    const std::size_t r = word.size();
    GVector g{IntVector(r, 0)};
    for (std::size_t k = 0; k < r; ++k) {
        const long next = word.k_plus(k);
        const Int a_next = next < static_cast<long>(r) ? a.entries[static_cast<std::size_t>(next)] : 0;
        g.entries[k] = checked_add(a.entries[k], -a_next);
    }
    return g;
}

PbwFromG g_to_pbw(const WeylWord& word, const GVector& g) {
    check_length(word, g.entries);
    const std::size_t r = word.size();
    PbwVector a{IntVector(r, 0)};
    // Accumulate from the right along each letter's chain of positions.
    for (std::size_t k = r; k-- > 0;) {
        const long next = word.k_plus(k);
        const Int tail = next < static_cast<long>(r) ? a.entries[static_cast<std::size_t>(next)] : 0;
        a.entries[k] = checked_add(g.entries[k], tail);
    }
    bool in_cw = true;
    for (Int x : a.entries) {
        in_cw = in_cw && x >= 0;
    }
    return PbwFromG{std::move(a), in_cw};
}

IntMatrix g_to_pbw_matrix(const WeylWord& word) {
    const std::size_t r = word.size();
    IntMatrix T(r, r);
    for (std::size_t j = 0; j < r; ++j) {
        for (std::size_t k = j; k < r; ++k) {
            if (word.letter(j) == word.letter(k)) {
                T(j, k) = 1;
            }
        }
    }
    return T;
}

PbwVector pbw_of_cluster_monomial(const WeylWord& word, const IntVector& m) {
    check_length(word, m);
    for (Int x : m) {
        if (x < 0) {
            fail_input("negative-entry", "cluster monomial exponents must be non-negative");
        }
    }
    return g_to_pbw(word, GVector{m}).pbw;
}

Int l_pairing(const IntMatrix& lambda, const PbwVector& x, const PbwVector& y) {
    return pairing(lambda, x.entries, y.entries);
}

Int l_pairing(const GlsSeed& gls, const PbwVector& x, const PbwVector& y) { return l_pairing(gls.lambda, x, y); }

Int gr_pairing(const GlsSeed& gls, const GVector& x, const GVector& y) {
    return pairing(lambda_vars_matrix(gls), x.entries, y.entries);
}

Int gl_pairing(const GlsSeed& gls, const GVector& x, const GVector& y) {
    return pairing(lambda_vars_matrix(gls), x.entries, y.entries);
}

} // namespace qcl
