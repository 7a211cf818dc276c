#include "qcl/cluster.hpp"

#include <algorithm>

namespace qcl {

std::optional<std::size_t> CompatiblePair::column_of(std::size_t k) const {
    auto it = std::find(exchangeable.begin(), exchangeable.end(), k);
    if (it == exchangeable.end()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - exchangeable.begin());
}

std::size_t CompatiblePair::exchange_column(std::size_t k) const {
    if (k >= rank()) {
        fail_input("out-of-range", "index " + std::to_string(k) + " outside the seed");
    }
    auto col = column_of(k);
    if (!col) {
        fail_input("frozen-index", "index " + std::to_string(k) + " is frozen");
    }
    return *col;
}

std::vector<std::size_t> CompatiblePair::frozen() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < rank(); ++k) {
        if (!column_of(k)) {
            out.push_back(k);
        }
    }
    return out;
}

std::optional<IntVector> compatibility_witness(const IntMatrix& L, const IntMatrix& B,
                                               const std::vector<std::size_t>& exchangeable) {
    const std::size_t n = L.rows();
    if (!L.is_skew_symmetric() || B.rows() != n || B.cols() != exchangeable.size()) {
        return std::nullopt;
    }
    for (std::size_t j = 0; j < exchangeable.size(); ++j) {
        if (exchangeable[j] >= n || (j > 0 && exchangeable[j] <= exchangeable[j - 1])) {
            return std::nullopt;
        }
    }
    const IntMatrix product = B.transpose() * L;
    IntVector d(exchangeable.size());
    for (std::size_t j = 0; j < exchangeable.size(); ++j) {
        for (std::size_t x = 0; x < n; ++x) {
            const Int entry = product(j, x);
            if (x == exchangeable[j]) {
                if (entry <= 0) {
                    return std::nullopt;
                }
                d[j] = entry;
            } else if (entry != 0) {
                return std::nullopt;
            }
        }
    }
    return d;
}

bool is_compatible(const CompatiblePair& pair) {
    auto d = compatibility_witness(pair.L, pair.B, pair.exchangeable);
    return d && *d == pair.d;
}

CompatiblePair make_compatible_pair(IntMatrix L, IntMatrix B, std::vector<std::size_t> exchangeable) {
    auto d = compatibility_witness(L, B, exchangeable);
    if (!d) {
        fail_input("not-compatible", "B^T L is not [diag(d) | 0] with positive d");
    }
    return CompatiblePair{std::move(L), std::move(B), std::move(exchangeable), std::move(*d)};
}

CompatiblePair mutate_pair(const CompatiblePair& pair, std::size_t k) {
    const std::size_t kc = pair.exchange_column(k);
    const std::size_t n = pair.rank();
    const IntMatrix& B = pair.B;

    IntMatrix B2(B.rows(), B.cols());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < B.cols(); ++j) {
            if (i == k || j == kc) {
                B2(i, j) = -B(i, j);
                continue;
            }
            const Int bik = B(i, kc);
            const Int bkj = B(k, j);
            Int entry = B(i, j);
            entry = checked_add(entry, checked_mul(std::max<Int>(0, bik), std::max<Int>(0, bkj)));
            entry = checked_add(entry, -checked_mul(std::max<Int>(0, -bik), std::max<Int>(0, -bkj)));
            B2(i, j) = entry;
        }
    }

    IntMatrix E = IntMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) {
        E(i, k) = i == k ? -1 : std::max<Int>(0, -B(i, kc));
    }
    IntMatrix L2 = E.transpose() * pair.L * E;

    return CompatiblePair{std::move(L2), std::move(B2), pair.exchangeable, pair.d};
}

std::optional<IntVector> dominance_witness(const CompatiblePair& pair, const IntVector& b_prime,
                                           const IntVector& b) {
    if (b.size() != pair.rank() || b_prime.size() != pair.rank()) {
        fail_input("dimension-mismatch", "exponent vectors must have one entry per seed index");
    }
    const IntVector diff = b - b_prime;
    // (L B~)_{a, j} = -d_j delta_{a, ex_j}, so v_j = -(L diff)_{ex_j} / d_j is
    // the only candidate; full column rank makes it unique.
    const IntVector Ldiff = pair.L.apply(diff);
    IntVector v(pair.exchangeable.size());
    for (std::size_t j = 0; j < v.size(); ++j) {
        const Int num = -Ldiff[pair.exchangeable[j]];
        if (num % pair.d[j] != 0) {
            return std::nullopt;
        }
        v[j] = num / pair.d[j];
    }
    if (pair.B.apply(v) != diff) {
        return std::nullopt;
    }
    return v;
}

bool dominance_leq(const CompatiblePair& pair, const IntVector& b_prime, const IntVector& b) {
    auto v = dominance_witness(pair, b_prime, b);
    return v && std::all_of(v->begin(), v->end(), [](Int x) { return x >= 0; });
}

namespace {

// Unique extremal exponent under dominance; `upper` selects the maximum.
std::optional<IntVector> extremal_exponent(const CompatiblePair& pair, const TorusElement& p, bool upper) {
    if (p.is_zero()) {
        fail_input("zero-element", "degree of the zero element is undefined");
    }
    auto below = [&](const IntVector& x, const IntVector& y) {
        return upper ? dominance_leq(pair, x, y) : dominance_leq(pair, y, x);
    };
    const IntVector* candidate = &p.terms().begin()->first;
    for (const auto& [a, c] : p.terms()) {
        if (below(*candidate, a)) {
            candidate = &a;
        }
    }
    for (const auto& [a, c] : p.terms()) {
        if (!below(a, *candidate)) {
            return std::nullopt;
        }
    }
    return *candidate;
}

} // namespace

IntVector degree(const CompatiblePair& pair, const TorusElement& p) {
    auto g = extremal_exponent(pair, p, true);
    if (!g) {
        refuse("not-pointed", "no unique dominance-maximal exponent");
    }
    return *g;
}

IntVector codegree(const CompatiblePair& pair, const TorusElement& p) {
    auto g = extremal_exponent(pair, p, false);
    if (!g) {
        refuse("not-copointed", "no unique dominance-minimal exponent");
    }
    return *g;
}

QuantumSeed QuantumSeed::initial(CompatiblePair pair, std::optional<std::vector<Weight>> weights) {
    if (!is_compatible(pair)) {
        fail_input("not-compatible", "initial seed needs a compatible pair");
    }
    if (weights && weights->size() != pair.rank()) {
        fail_input("dimension-mismatch", "need one weight per cluster variable");
    }
    auto L = std::make_shared<const IntMatrix>(pair.L);
    std::vector<TorusElement> vars;
    vars.reserve(pair.rank());
    for (std::size_t k = 0; k < pair.rank(); ++k) {
        IntVector e(pair.rank(), 0);
        e[k] = 1;
        vars.push_back(TorusElement::x_pow(L, e));
    }
    return QuantumSeed{std::move(pair), std::move(vars), std::move(weights), {}};
}

TorusElement frame_monomial(const QuantumSeed& seed, const IntVector& c) {
    const std::size_t n = seed.rank();
    if (c.size() != n) {
        fail_input("dimension-mismatch", "frame exponent must have one entry per seed index");
    }
    Int prefactor = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (c[i] < 0) {
            fail_input("negative-entry", "frame monomials need non-negative exponents");
        }
        for (std::size_t j = 0; j < i; ++j) {
            prefactor = checked_add(prefactor, checked_mul(checked_mul(c[i], c[j]), seed.pair.L(i, j)));
        }
    }
    TorusElement out = TorusElement::unit(seed.initial_L());
    for (std::size_t i = 0; i < n; ++i) {
        for (Int e = 0; e < c[i]; ++e) {
            out = out * seed.vars[i];
        }
    }
    return out.shifted(static_cast<long>(prefactor));
}

QuantumSeed mutate_seed(const QuantumSeed& seed, std::size_t k) {
    const std::size_t kc = seed.pair.exchange_column(k);
    const std::size_t n = seed.rank();
    IntVector a1(n);
    IntVector a2(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Int bik = seed.pair.B(i, kc);
        a1[i] = i == k ? -1 : std::max<Int>(0, bik);
        a2[i] = i == k ? -1 : std::max<Int>(0, -bik);
    }
    IntVector ek(n, 0);
    ek[k] = 1;

    // In the current torus X^a X_k = v^{L(a,e_k)} X^{a+e_k}, hence
    // X^a = v^{L(a,e_k)} X^{a+e_k} X_k^{-1}.
    auto numerator_term = [&](const IntVector& a) {
        const long shift = static_cast<long>(torus_form(seed.pair.L, a, ek));
        return frame_monomial(seed, a + ek).shifted(shift);
    };
    TorusElement numerator = numerator_term(a1) + numerator_term(a2);

    QuantumSeed out = seed;
    out.vars[k] = exact_div_right(numerator, seed.vars[k]);
    out.pair = mutate_pair(seed.pair, k);
    if (out.weights) {
        Weight w = Weight::zero((*seed.weights)[0].rank());
        for (std::size_t i = 0; i < n; ++i) {
            w = w + a1[i] * (*seed.weights)[i];
        }
        (*out.weights)[k] = w;
    }
    out.history.push_back(k);
    return out;
}

QuantumSeed mutate_seed(const QuantumSeed& seed, const std::vector<std::size_t>& sequence) {
    QuantumSeed out = seed;
    for (std::size_t k : sequence) {
        out = mutate_seed(out, k);
    }
    return out;
}

bool vars_quasi_commute(const QuantumSeed& seed) {
    for (std::size_t i = 0; i < seed.rank(); ++i) {
        for (std::size_t j = i + 1; j < seed.rank(); ++j) {
            const TorusElement lhs = seed.vars[i] * seed.vars[j];
            const TorusElement rhs = (seed.vars[j] * seed.vars[i]).shifted(static_cast<long>(2 * seed.pair.L(i, j)));
            if (lhs != rhs) {
                return false;
            }
        }
    }
    return true;
}

} // namespace qcl
