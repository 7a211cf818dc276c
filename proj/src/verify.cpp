#include "qcl/verify.hpp"

#include <future>
#include <sstream>

#include "qcl/ibox.hpp"
#include "qcl/pbw.hpp"

namespace qcl {

namespace {

std::string sequence_label(const std::vector<std::size_t>& history) {
    std::ostringstream os;
    os << "seq(";
    for (std::size_t i = 0; i < history.size(); ++i) {
        os << (i ? "," : "") << history[i] + 1;
    }
    os << ')';
    return os.str();
}

void explore(const QuantumSeed& seed, std::size_t depth,
             const std::function<void(const QuantumSeed&, const QuantumSeed&, std::size_t)>& visit) {
    if (depth == 0) {
        return;
    }
    for (std::size_t k : seed.pair.exchangeable) {
        if (!seed.history.empty() && seed.history.back() == k) {
            continue;
        }
        const QuantumSeed child = mutate_seed(seed, k);
        visit(child, seed, k);
        explore(child, depth - 1, visit);
    }
}

} // namespace

void CheckResult::record(bool ok, const std::string& what) {
    ++cases;
    if (!ok && passed) {
        passed = false;
        detail = what;
    }
}

void CheckResult::merge(const CheckResult& other) {
    cases += other.cases;
    if (!other.passed && passed) {
        passed = false;
        detail = other.detail;
    }
}

bool VerifyReport::passed() const {
    for (const auto& c : checks) {
        if (!c.passed) {
            return false;
        }
    }
    return true;
}

const CheckResult& VerifyReport::at(const std::string& name) const {
    for (const auto& c : checks) {
        if (c.name == name) {
            return c;
        }
    }
    fail_input("unknown-check", name);
}

void MutationChecks::merge(const MutationChecks& other) {
    positivity.merge(other.positivity);
    pointedness.merge(other.pointedness);
    involution.merge(other.involution);
    compatibility.merge(other.compatibility);
    quasi_commutation.merge(other.quasi_commutation);
}

std::vector<CheckResult> MutationChecks::list() const {
    return {positivity, pointedness, involution, compatibility, quasi_commutation};
}

void for_each_mutation(const QuantumSeed& root, std::size_t depth,
                       const std::function<void(const QuantumSeed&, const QuantumSeed&, std::size_t)>& visit) {
    explore(root, depth, visit);
}

void check_mutation_step(const CompatiblePair& initial, const QuantumSeed& parent, const QuantumSeed& child,
                         std::size_t k, bool quasi_commutation, MutationChecks& checks) {
    const std::string where = sequence_label(child.history);
    const TorusElement& fresh = child.vars[k];

    checks.positivity.record(is_positive(fresh), where + ": negative coefficient in variable " + std::to_string(k + 1));

    bool pointed = true;
    try {
        const IntVector g = degree(initial, fresh);
        const IntVector h = codegree(initial, fresh);
        // A single-term expansion has equal degree and codegree, and conversely.
        pointed = (g == h) == (fresh.size() == 1);
    } catch (const Error&) {
        pointed = false;
    }
    checks.pointedness.record(pointed, where + ": variable " + std::to_string(k + 1) + " is not (co)pointed");

    const QuantumSeed back = mutate_seed(child, k);
    checks.involution.record(back.pair == parent.pair && back.vars == parent.vars,
                             where + ": mutating twice does not return the parent seed");

    checks.compatibility.record(is_compatible(child.pair) && child.pair.d == parent.pair.d,
                                where + ": mutated pair is not compatible with the same d");

    if (quasi_commutation) {
        bool ok = true;
        for (std::size_t j = 0; j < child.rank() && ok; ++j) {
            if (j == k) {
                continue;
            }
            const TorusElement lhs = fresh * child.vars[j];
            const TorusElement rhs = (child.vars[j] * fresh).shifted(static_cast<long>(2 * child.pair.L(k, j)));
            ok = lhs == rhs;
        }
        checks.quasi_commutation.record(ok, where + ": variable " + std::to_string(k + 1) +
                                                " does not q-commute as the mutated L prescribes");
    }
}

VerifyReport verify_word(const WeylWord& word, const VerifyOptions& options) {
    VerifyReport report;
    const GlsSeed gls = build_gls(word);

    CheckResult identity{"gls_identity"};
    identity.record(satisfies_gls_identity(gls), "(L B) restricted to K_ex differs from -2 diag(d)");
    report.checks.push_back(identity);

    CheckResult transfer{"transfer_identity"};
    const IntMatrix T = g_to_pbw_matrix(word);
    transfer.record(T.transpose() * gls.lambda * T == lambda_vars_matrix(gls),
                    "T^T lambda T differs from the Lambda matrix of the cluster variables");
    report.checks.push_back(transfer);

    const QuantumSeed& root = gls.seed;
    const CompatiblePair& initial = root.pair;
    std::vector<std::future<std::pair<MutationChecks, std::size_t>>> branches;
    for (std::size_t k : root.pair.exchangeable) {
        if (options.depth == 0) {
            break;
        }
        const auto policy = options.threads == 1 ? std::launch::deferred : std::launch::async;
        branches.push_back(std::async(policy, [&, k]() {
            MutationChecks checks;
            std::size_t visited = 1;
            const QuantumSeed child = mutate_seed(root, k);
            check_mutation_step(initial, root, child, k, options.quasi_commutation, checks);
            for_each_mutation(child, options.depth - 1,
                              [&](const QuantumSeed& c, const QuantumSeed& p, std::size_t dir) {
                                  ++visited;
                                  check_mutation_step(initial, p, c, dir, options.quasi_commutation, checks);
                              });
            return std::make_pair(checks, visited);
        }));
    }
    MutationChecks all;
    for (auto& branch : branches) {
        auto [checks, visited] = branch.get();
        all.merge(checks);
        report.seeds_visited += visited;
    }
    for (auto& c : all.list()) {
        if (c.name != "quasi_commutation" || options.quasi_commutation) {
            report.checks.push_back(c);
        }
    }

    if (options.boxes) {
        CheckResult boxes{"ibox"};
        const auto every = all_boxes(word);
        for (const IBox& x : every) {
            for (const IBox& y : every) {
                if (!lambda_formula_applies(word, x, y)) {
                    continue;
                }
                const Int value = lambda_boxes(gls, x, y);
                const std::string where = "boxes [" + std::to_string(x.first + 1) + "," + std::to_string(x.last + 1) +
                                          "] and [" + std::to_string(y.first + 1) + "," +
                                          std::to_string(y.last + 1) + "]";
                boxes.record(value == l_pairing(gls, pbw_of_box(word, x), pbw_of_box(word, y)),
                             where + ": double sum disagrees with the L pairing");
                if (boxes_commute(word, x, y)) {
                    boxes.record(lambda_formula_applies(word, y, x) && value == -lambda_boxes(gls, y, x),
                                 where + ": commuting boxes give a non-skew Lambda");
                }
            }
        }
        for (std::size_t s = 0; s < word.size(); ++s) {
            for (std::size_t t = 0; t < word.size(); ++t) {
                const IBox x = cluster_box(word, s);
                const IBox y = cluster_box(word, t);
                boxes.record(lambda_formula_applies(word, x, y) && lambda_boxes(gls, x, y) == lambda_vars(gls, s, t),
                             "cluster boxes " + std::to_string(s + 1) + "," + std::to_string(t + 1) +
                                 ": double sum disagrees with Lambda(M_s, M_t)");
            }
        }
        report.checks.push_back(boxes);
    }
    return report;
}

} // namespace qcl
