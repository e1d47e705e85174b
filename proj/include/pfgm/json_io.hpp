#pragma once

#include <string>

#include "json.hpp"
#include "pfgm/applications.hpp"
#include "pfgm/graph.hpp"
#include "pfgm/weights.hpp"

namespace pfgm {

/// {"vertices": n, "edges": [[u, v], ...]} with 0-based endpoints.
Graph graph_from_json(const nlohmann::json& doc);
nlohmann::json graph_to_json(const Graph& g);

/// Same format as graph_from_json, but an empty edge list is allowed.
HostGraph host_from_json(const nlohmann::json& doc);

/// {"k": k, "uniform": [[z, ...], ...]} or {"k": k, "per_edge": [block, ...]}
/// with blocks in canonical edge order. z is a number or {"re": x, "im": y}.
EdgeWeights weights_from_json(const nlohmann::json& doc, const Graph& g);

/// {"n": n, "entries": [[z, ...], ...]}; must be square and symmetric.
SymmetricMatrix parse_matrix(const nlohmann::json& doc);

Complex complex_from_json(const nlohmann::json& value, const std::string& where);
nlohmann::json complex_to_json(Complex z);

/// Reads and parses a JSON file; InputError names the file on failure.
nlohmann::json load_json_file(const std::string& path);

/// Compact serialization with every floating-point number printed to 17
/// significant digits. Non-finite numbers become null.
std::string dump_json(const nlohmann::json& value);

}  // namespace pfgm
