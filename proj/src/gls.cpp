#include "qcl/gls.hpp"

namespace qcl {

namespace {

void check_position(const WeylWord& word, std::size_t k) {
    if (k >= word.size()) {
        fail_input("out-of-range", "position " + std::to_string(k + 1) + " outside the word");
    }
}

bool identity_holds(const IntMatrix& L, const IntMatrix& B, const std::vector<std::size_t>& ex,
                    const WeylWord& word) {
    const IntMatrix LB = L * B;
    for (std::size_t a = 0; a < LB.rows(); ++a) {
        for (std::size_t j = 0; j < ex.size(); ++j) {
            const Int expected = a == ex[j] ? -2 * word.datum().d(word.letter(a)) : 0;
            if (LB(a, j) != expected) {
                return false;
            }
        }
    }
    return true;
}

} // namespace

std::vector<std::size_t> gls_exchangeable(const WeylWord& word) {
    std::vector<std::size_t> ex;
    for (std::size_t k = 0; k < word.size(); ++k) {
        if (word.k_plus(k) < static_cast<long>(word.size())) {
            ex.push_back(k);
        }
    }
    return ex;
}

IntMatrix gls_exchange_matrix(const WeylWord& word) {
    const auto ex = gls_exchangeable(word);
    const std::size_t r = word.size();
    IntMatrix B(r, ex.size());
    for (std::size_t j = 0; j < ex.size(); ++j) {
        const std::size_t t = ex[j];
        const auto tm = word.position_maps(t);
        for (std::size_t s = 0; s < r; ++s) {
            const auto sm = word.position_maps(s);
            const long ls = static_cast<long>(s);
            const long lt = static_cast<long>(t);
            const Int a_st = word.datum().a(word.letter(s), word.letter(t));
            if (ls == tm.k_plus) {
                B(s, j) = 1;
            } else if (ls == tm.k_minus) {
                B(s, j) = -1;
            } else if (ls < lt && lt < sm.k_plus && sm.k_plus < tm.k_plus) {
                B(s, j) = -a_st;
            } else if (lt < ls && ls < tm.k_plus && tm.k_plus < sm.k_plus) {
                B(s, j) = a_st;
            }
        }
    }
    return B;
}

IntMatrix gls_printed_l(const WeylWord& word) {
    const std::size_t r = word.size();
    const std::size_t n = word.datum().rank();
    std::vector<Root> drops;
    std::vector<Weight> sums;
    for (std::size_t k = 0; k < r; ++k) {
        const Weight fw = Weight::fundamental(n, word.letter(k));
        drops.push_back(word.drop(fw, k + 1));
        sums.push_back(fw + word.act(fw, k + 1));
    }
    IntMatrix l(r, r);
    for (std::size_t s = 0; s < r; ++s) {
        for (std::size_t t = s + 1; t < r; ++t) {
            l(s, t) = pair(word.datum(), drops[s], sums[t]);
            l(t, s) = -l(s, t);
        }
    }
    return l;
}

IntMatrix lambda_matrix(const WeylWord& word) {
    const auto betas = word.beta_roots();
    const std::size_t r = word.size();
    IntMatrix lambda(r, r);
    for (std::size_t a = 0; a < r; ++a) {
        for (std::size_t b = a + 1; b < r; ++b) {
            lambda(a, b) = pair(word.datum(), betas[a], betas[b]);
            lambda(b, a) = -lambda(a, b);
        }
    }
    return lambda;
}

GlsSeed build_gls(const WeylWord& word) {
    if (!word.is_reduced()) {
        fail_input("not-reduced", "GLS seeds need a reduced word");
    }
    const std::size_t r = word.size();
    const std::size_t n = word.datum().rank();
    const auto ex = gls_exchangeable(word);
    IntMatrix B = gls_exchange_matrix(word);
    IntMatrix printed = gls_printed_l(word);

    LOrientation orientation;
    IntMatrix L;
    if (identity_holds(printed, B, ex, word)) {
        orientation = LOrientation::as_printed;
        L = printed;
    } else if (identity_holds(printed.transpose(), B, ex, word)) {
        orientation = LOrientation::transposed;
        L = printed.transpose();
    } else {
        fail_input("not-compatible", "neither orientation of L satisfies L B = -2 diag(d)");
    }

    std::vector<Weight> weights;
    IntVector c_exponents;
    for (std::size_t k = 0; k < r; ++k) {
        const Root drop = word.drop(Weight::fundamental(n, word.letter(k)), k + 1);
        weights.push_back(-word.datum().to_weight(drop));
        c_exponents.push_back(pair(word.datum(), drop, drop) / 2);
    }

    CompatiblePair cp = make_compatible_pair(std::move(L), std::move(B), ex);
    QuantumSeed seed = QuantumSeed::initial(std::move(cp), weights);
    return GlsSeed{word,         std::move(seed),    lambda_matrix(word), std::move(printed),
                   orientation,  std::move(weights), std::move(c_exponents)};
}

Int lambda_vars(const GlsSeed& gls, std::size_t s, std::size_t t) {
    check_position(gls.word, s);
    check_position(gls.word, t);
    if (s == t) {
        return 0;
    }
    return s < t ? -gls.printed_l(s, t) : gls.printed_l(t, s);
}

IntMatrix lambda_vars_matrix(const GlsSeed& gls) {
    IntMatrix m(gls.size(), gls.size());
    for (std::size_t s = 0; s < gls.size(); ++s) {
        for (std::size_t t = 0; t < gls.size(); ++t) {
            m(s, t) = lambda_vars(gls, s, t);
        }
    }
    return m;
}

Int lambda_tilde(const GlsSeed& gls, std::size_t s, std::size_t t) {
    const Int lam = lambda_vars(gls, s, t);
    const CartanDatum& datum = gls.word.datum();
    // wt M_s = -(varpi - w_{<=s} varpi) lies in the root lattice.
    const Root drop_s = gls.word.drop(Weight::fundamental(datum.rank(), gls.word.letter(s)), s + 1);
    const Int form = -pair(datum, drop_s, gls.var_weights[t]);
    const Int sum = checked_add(lam, form);
    if (sum % 2 != 0) {
        refuse("non-integral", "Lambda + (wt, wt) is odd");
    }
    return sum / 2;
}

bool satisfies_gls_identity(const GlsSeed& gls) {
    return identity_holds(gls.seed.pair.L, gls.seed.pair.B, gls.seed.pair.exchangeable, gls.word);
}

} // namespace qcl
