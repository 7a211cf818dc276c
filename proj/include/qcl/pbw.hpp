#pragma once

#include <cstddef>

#include "qcl/cartan.hpp"
#include "qcl/gls.hpp"
#include "qcl/int_matrix.hpp"

namespace qcl {

/// PBW-decomposition vector of a simple module relative to a reduced word.
struct PbwVector {
    IntVector entries;
    friend bool operator==(const PbwVector&, const PbwVector&) = default;
};

/// g-vector (degree) or dual g-vector (codegree) relative to the GLS cluster.
struct GVector {
    IntVector entries;
    friend bool operator==(const GVector&, const GVector&) = default;
};

struct PbwFromG {
    PbwVector pbw;
    /// All entries are non-negative, i.e. the module lives in the
    /// unlocalized category.
    bool in_cw;
};

/// g_k = a_k - a_{k+}, with a_{r+1} = 0.
GVector pbw_to_g(const WeylWord& word, const PbwVector& a);
/// a_k = sum of g_j over j >= k with i_j = i_k.
PbwFromG g_to_pbw(const WeylWord& word, const GVector& g);
/// Matrix T of g_to_pbw: T_{jk} = 1 iff k >= j and i_j = i_k. Column k is
/// the PBW vector of the k-th GLS cluster variable.
IntMatrix g_to_pbw_matrix(const WeylWord& word);

/// PBW vector of the cluster monomial prod M_k^{m_k}.
PbwVector pbw_of_cluster_monomial(const WeylWord& word, const IntVector& m);

/// sum_{a,b} aX_a aY_b lambda_{ab}.
Int l_pairing(const IntMatrix& lambda, const PbwVector& x, const PbwVector& y);
Int l_pairing(const GlsSeed& gls, const PbwVector& x, const PbwVector& y);
/// sum_{a,b} gX_a gY_b Lambda(M_a, M_b); the same bilinear form serves for
/// right and left g-vectors.
Int gr_pairing(const GlsSeed& gls, const GVector& x, const GVector& y);
Int gl_pairing(const GlsSeed& gls, const GVector& x, const GVector& y);

} // namespace qcl
