#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qcl/cartan.hpp"
#include "qcl/int_matrix.hpp"
#include "qcl/qtorus.hpp"

namespace qcl {

/// Compatible pair (L, B~). B has one column per exchangeable index, in the
/// order of `exchangeable`. Compatibility means
///     sum_k b_{k,i} l_{k,j} = d_i delta_{i,j}   for i exchangeable, j in K,
/// i.e. (B^T L) restricted to exchangeable rows is [diag(d) | 0].
struct CompatiblePair {
    IntMatrix L;
    IntMatrix B;
    std::vector<std::size_t> exchangeable;
    IntVector d;

    std::size_t rank() const noexcept { return L.rows(); }
    std::optional<std::size_t> column_of(std::size_t k) const;
    std::size_t exchange_column(std::size_t k) const;
    std::vector<std::size_t> frozen() const;
    /// Entry b_{i,k} of the exchange matrix for k exchangeable.
    Int b(std::size_t i, std::size_t k) const { return B(i, exchange_column(k)); }

    friend bool operator==(const CompatiblePair&, const CompatiblePair&) = default;
};

/// Shape and compatibility check; returns the d_i that witness it.
std::optional<IntVector> compatibility_witness(const IntMatrix& L, const IntMatrix& B,
                                               const std::vector<std::size_t>& exchangeable);
bool is_compatible(const CompatiblePair& pair);
/// Builds a pair after verifying compatibility; throws not-compatible.
CompatiblePair make_compatible_pair(IntMatrix L, IntMatrix B, std::vector<std::size_t> exchangeable);

CompatiblePair mutate_pair(const CompatiblePair& pair, std::size_t k);

/// The v with b - b_prime = B~ v, if it is integral; nonnegativity is not checked.
std::optional<IntVector> dominance_witness(const CompatiblePair& pair, const IntVector& b_prime,
                                           const IntVector& b);
/// b_prime <= b iff b - b_prime = B~ v for some v >= 0.
bool dominance_leq(const CompatiblePair& pair, const IntVector& b_prime, const IntVector& b);

/// Dominance-maximal exponent (the g-vector); throws not-pointed.
IntVector degree(const CompatiblePair& pair, const TorusElement& p);
/// Dominance-minimal exponent (the dual g-vector); throws not-copointed.
IntVector codegree(const CompatiblePair& pair, const TorusElement& p);

/// A quantum seed together with the expansion of each of its cluster
/// variables in the torus of the initial seed.
struct QuantumSeed {
    CompatiblePair pair;
    std::vector<TorusElement> vars;
    std::optional<std::vector<Weight>> weights;
    std::vector<std::size_t> history;

    static QuantumSeed initial(CompatiblePair pair, std::optional<std::vector<Weight>> weights = std::nullopt);

    std::size_t rank() const noexcept { return pair.rank(); }
    const LMatrixPtr& initial_L() const { return vars.front().L_ptr(); }
};

/// X^c of the current seed expanded in the initial torus.
TorusElement frame_monomial(const QuantumSeed& seed, const IntVector& c);

QuantumSeed mutate_seed(const QuantumSeed& seed, std::size_t k);
QuantumSeed mutate_seed(const QuantumSeed& seed, const std::vector<std::size_t>& sequence);

/// vars[i] vars[j] == v^{2 L_ij} vars[j] vars[i] for the current L.
bool vars_quasi_commute(const QuantumSeed& seed);

} // namespace qcl
