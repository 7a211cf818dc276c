#include "qcl/serialize.hpp"

namespace qcl::json_io {

namespace {

IntVector int_vector(const json& j, const char* what) {
    if (!j.is_array()) {
        fail_input("malformed-json", std::string(what) + " must be an array of integers");
    }
    IntVector out;
    for (const auto& x : j) {
        if (!x.is_number_integer()) {
            fail_input("malformed-json", std::string(what) + " must contain integers only");
        }
        out.push_back(x.get<Int>());
    }
    return out;
}

} // namespace

json one_based(const std::vector<std::size_t>& positions) {
    json out = json::array();
    for (std::size_t p : positions) {
        out.push_back(p + 1);
    }
    return out;
}

std::vector<std::size_t> zero_based(const json& j, std::size_t bound, const char* what) {
    std::vector<std::size_t> out;
    for (Int x : int_vector(j, what)) {
        if (x < 1 || static_cast<std::size_t>(x) > bound) {
            fail_input("out-of-range", std::string(what) + " entry " + std::to_string(x) + " outside 1.." +
                                           std::to_string(bound));
        }
        out.push_back(static_cast<std::size_t>(x - 1));
    }
    return out;
}

json to_json(const IntMatrix& m) {
    json out = json::array();
    for (const auto& row : m.to_rows()) {
        out.push_back(row);
    }
    return out;
}

IntMatrix matrix_from_json(const json& j) {
    if (!j.is_array()) {
        fail_input("malformed-json", "matrix must be an array of rows");
    }
    std::vector<IntVector> rows;
    for (const auto& row : j) {
        rows.push_back(int_vector(row, "matrix row"));
    }
    return IntMatrix::from_rows(rows);
}

json to_json(const QLaurent& c) {
    json out = json::array();
    for (const auto& [p, x] : c.terms()) {
        out.push_back(json::array({p, x}));
    }
    return out;
}

QLaurent laurent_from_json(const json& j) {
    if (!j.is_array()) {
        fail_input("malformed-json", "coefficient must be a list of [v_power, int] pairs");
    }
    QLaurent out;
    for (const auto& term : j) {
        const IntVector pc = int_vector(term, "coefficient term");
        if (pc.size() != 2) {
            fail_input("malformed-json", "coefficient terms are [v_power, int] pairs");
        }
        out.add_term(static_cast<long>(pc[0]), pc[1]);
    }
    return out;
}

json to_json(const TorusElement& p) {
    json out = json::array();
    for (const auto& [a, c] : p.terms()) {
        out.push_back(json{{"exp", a}, {"coef", to_json(c)}});
    }
    return out;
}

TorusElement torus_from_json(const json& j, const LMatrixPtr& L) {
    if (!j.is_array()) {
        fail_input("malformed-json", "torus element must be a list of terms");
    }
    TorusElement out(L);
    for (const auto& term : j) {
        if (!term.is_object() || !term.contains("exp") || !term.contains("coef")) {
            fail_input("malformed-json", "torus terms need \"exp\" and \"coef\"");
        }
        out.add_term(int_vector(term.at("exp"), "exp"), laurent_from_json(term.at("coef")));
    }
    return out;
}

json to_json(const Weight& w) { return w.coords; }

json to_json(const QuantumSeed& seed) {
    json vars = json::array();
    for (const auto& v : seed.vars) {
        vars.push_back(to_json(v));
    }
    json out{{"L", to_json(seed.pair.L)},
             {"B", to_json(seed.pair.B)},
             {"ex", one_based(seed.pair.exchangeable)},
             {"d", seed.pair.d},
             {"vars", vars},
             {"history", one_based(seed.history)}};
    if (seed.vars.front().L() != seed.pair.L) {
        out["L0"] = to_json(seed.vars.front().L());
    }
    if (seed.weights) {
        json w = json::array();
        for (const auto& x : *seed.weights) {
            w.push_back(to_json(x));
        }
        out["weights"] = w;
    }
    return out;
}

QuantumSeed seed_from_json(const json& j) {
    if (!j.is_object()) {
        fail_input("malformed-json", "seed must be a JSON object");
    }
    for (const char* key : {"L", "B", "ex", "vars"}) {
        if (!j.contains(key)) {
            fail_input("malformed-json", std::string("seed is missing \"") + key + "\"");
        }
    }
    IntMatrix L = matrix_from_json(j.at("L"));
    IntMatrix B = matrix_from_json(j.at("B"));
    if (B.rows() == 0) {
        B = IntMatrix(L.rows(), 0);
    }
    auto ex = zero_based(j.at("ex"), L.rows(), "ex");
    CompatiblePair pair = make_compatible_pair(std::move(L), std::move(B), std::move(ex));
    if (j.contains("d") && int_vector(j.at("d"), "d") != pair.d) {
        fail_input("not-compatible", "stored d does not match B^T L");
    }
    // Expansions live in the initial torus, which differs from the current
    // one once the seed has been mutated.
    auto L0 = std::make_shared<const IntMatrix>(j.contains("L0") ? matrix_from_json(j.at("L0")) : pair.L);
    std::vector<TorusElement> vars;
    for (const auto& v : j.at("vars")) {
        vars.push_back(torus_from_json(v, L0));
    }
    if (vars.size() != pair.rank()) {
        fail_input("malformed-json", "need one variable expansion per seed index");
    }
    std::optional<std::vector<Weight>> weights;
    if (j.contains("weights")) {
        weights.emplace();
        for (const auto& w : j.at("weights")) {
            weights->push_back(Weight{int_vector(w, "weight")});
        }
    }
    std::vector<std::size_t> history;
    if (j.contains("history")) {
        history = zero_based(j.at("history"), pair.rank(), "history");
    }
    return QuantumSeed{std::move(pair), std::move(vars), std::move(weights), std::move(history)};
}

json to_json(const CartanDatum& datum) {
    json out{{"cartan", to_json(datum.cartan())}, {"symmetrizers", datum.symmetrizers()}};
    if (!datum.type_label().empty()) {
        out["type"] = datum.type_label();
    }
    return out;
}

CartanDatum datum_from_json(const json& j) {
    if (!j.is_object() || !j.contains("cartan")) {
        fail_input("malformed-json", "Cartan datum needs a \"cartan\" matrix");
    }
    IntMatrix A = matrix_from_json(j.at("cartan"));
    IntVector d = j.contains("symmetrizers") ? int_vector(j.at("symmetrizers"), "symmetrizers") : IntVector(A.rows(), 1);
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        labels = j.at("labels").get<std::vector<std::string>>();
    }
    std::string type = j.contains("type") && j.at("type").is_string() ? j.at("type").get<std::string>() : "";
    return CartanDatum(std::move(A), std::move(d), std::move(labels), std::move(type));
}

json gls_report(const GlsSeed& gls) {
    std::vector<std::size_t> letters = gls.word.letters();
    const auto& pair = gls.pair();
    json weights = json::array();
    for (const auto& w : gls.var_weights) {
        weights.push_back(to_json(w));
    }
    IntMatrix expected(pair.rank(), pair.exchangeable.size());
    for (std::size_t j = 0; j < pair.exchangeable.size(); ++j) {
        const std::size_t a = pair.exchangeable[j];
        expected(a, j) = -2 * gls.word.datum().d(gls.word.letter(a));
    }
    const IntMatrix LB = pair.L * pair.B;
    return json{
        {"word", one_based(letters)},
        {"B", to_json(pair.B)},
        {"L", to_json(pair.L)},
        {"lambda", to_json(gls.lambda)},
        {"exchangeable", one_based(pair.exchangeable)},
        {"frozen", one_based(pair.frozen())},
        {"d", pair.d},
        {"weights", weights},
        {"c_exponents", gls.c_exponents},
        {"orientation", gls.orientation == LOrientation::as_printed ? "as_printed" : "transposed"},
        {"compatibility", json{{"LB", to_json(LB)}, {"expected", to_json(expected)}, {"holds", LB == expected}}},
    };
}

} // namespace qcl::json_io
