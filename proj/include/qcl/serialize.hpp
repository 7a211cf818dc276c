#pragma once

#include <json.hpp>

#include "qcl/cartan.hpp"
#include "qcl/cluster.hpp"
#include "qcl/gls.hpp"
#include "qcl/qtorus.hpp"

// JSON forms. Word letters, seed indices and positions are 1-based here,
// matching the command-line interface; the C++ API is 0-based.
namespace qcl::json_io {

using nlohmann::json;

json to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const json& j);

json to_json(const QLaurent& c);
QLaurent laurent_from_json(const json& j);

/// [{"exp": [...], "coef": [[v_power, int], ...]}, ...] with exponents in
/// lexicographic order and v-powers ascending.
json to_json(const TorusElement& p);
TorusElement torus_from_json(const json& j, const LMatrixPtr& L);

/// {"L", "B", "ex", "d", "vars", "history"} plus "weights" when present.
json to_json(const QuantumSeed& seed);
QuantumSeed seed_from_json(const json& j);

/// {"type": optional label, "cartan": [[...]], "symmetrizers": [...]}.
json to_json(const CartanDatum& datum);
CartanDatum datum_from_json(const json& j);

json to_json(const Weight& w);
json gls_report(const GlsSeed& gls);

json one_based(const std::vector<std::size_t>& positions);
std::vector<std::size_t> zero_based(const json& j, std::size_t bound, const char* what);

} // namespace qcl::json_io
