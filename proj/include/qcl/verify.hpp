#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "qcl/cartan.hpp"
#include "qcl/cluster.hpp"
#include "qcl/gls.hpp"

namespace qcl {

struct CheckResult {
    std::string name;
    bool passed = true;
    std::size_t cases = 0;
    std::string detail;

    CheckResult() = default;
    explicit CheckResult(std::string check_name) : name(std::move(check_name)) {}

    void record(bool ok, const std::string& what);
    void merge(const CheckResult& other);
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    std::size_t seeds_visited = 0;

    bool passed() const;
    const CheckResult& at(const std::string& name) const;
};

struct VerifyOptions {
    /// Longest mutation sequence explored from the GLS seed.
    std::size_t depth = 4;
    bool quasi_commutation = true;
    bool boxes = true;
    /// 0 picks one worker per first mutation direction.
    unsigned threads = 0;
};

/// Visits every seed reached by a mutation sequence of length <= depth with
/// no immediate repetition. The callback receives the child, its parent and
/// the direction used. Sequences are visited in lexicographic order.
void for_each_mutation(const QuantumSeed& root, std::size_t depth,
                       const std::function<void(const QuantumSeed&, const QuantumSeed&, std::size_t)>& visit);

struct MutationChecks {
    CheckResult positivity{"positivity"};
    CheckResult pointedness{"pointedness"};
    CheckResult involution{"involution"};
    CheckResult compatibility{"compatibility"};
    CheckResult quasi_commutation{"quasi_commutation"};

    void merge(const MutationChecks& other);
    std::vector<CheckResult> list() const;
};

/// Invariant checks on a seed reached by mutating `parent` in direction k:
/// positivity, (co)pointedness, involution, compatibility and q-commutation
/// of the new variable. `initial` is the pair the expansions refer to.
void check_mutation_step(const CompatiblePair& initial, const QuantumSeed& parent, const QuantumSeed& child,
                         std::size_t k, bool quasi_commutation, MutationChecks& checks);

/// Runs the full invariant suite for one reduced word.
VerifyReport verify_word(const WeylWord& word, const VerifyOptions& options = {});

} // namespace qcl
