#pragma once

#include <cstddef>
#include <vector>

#include "qcl/cartan.hpp"
#include "qcl/cluster.hpp"

namespace qcl {

/// Which reading of the upper-triangular l_st data produced the seed's L.
enum class LOrientation { as_printed, transposed };

/// The quantum seed attached to a reduced word, plus the bookkeeping that
/// labels its variables. Positions are 0-based.
struct GlsSeed {
    WeylWord word;
    QuantumSeed seed;
    /// lambda_{ab} = (-1)^{[a>b]} [a != b] (beta_a, beta_b).
    IntMatrix lambda;
    /// Skew extension of l_st = (varpi_{i_s} - w_{<=s} varpi_{i_s}, varpi_{i_t} + w_{<=t} varpi_{i_t}), s < t.
    IntMatrix printed_l;
    LOrientation orientation;
    /// wt of the k-th variable: w_{<=k} varpi_{i_k} - varpi_{i_k}.
    std::vector<Weight> var_weights;
    /// 2 c_k, the v-exponent of the normalizing power q^{c_k}.
    IntVector c_exponents;

    std::size_t size() const noexcept { return word.size(); }
    const CompatiblePair& pair() const noexcept { return seed.pair; }
};

std::vector<std::size_t> gls_exchangeable(const WeylWord& word);
/// K x K_ex exchange matrix, columns ordered as gls_exchangeable.
IntMatrix gls_exchange_matrix(const WeylWord& word);
IntMatrix gls_printed_l(const WeylWord& word);
IntMatrix lambda_matrix(const WeylWord& word);

/// Throws not-reduced, or not-compatible when neither orientation of the
/// printed L satisfies (L B~)_{ab} = -2 d_{i_a} delta_ab.
GlsSeed build_gls(const WeylWord& word);

/// Lambda(M_s, M_t) = -l_st for s < t, skew-extended, zero on the diagonal.
Int lambda_vars(const GlsSeed& gls, std::size_t s, std::size_t t);
IntMatrix lambda_vars_matrix(const GlsSeed& gls);
/// (Lambda(M_s, M_t) + (wt M_s, wt M_t)) / 2; throws non-integral.
Int lambda_tilde(const GlsSeed& gls, std::size_t s, std::size_t t);

/// True when L B~ restricted to exchangeable columns is -2 diag(d_{i_a}).
bool satisfies_gls_identity(const GlsSeed& gls);

} // namespace qcl
