#include "pfgm/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "pfgm/errors.hpp"

namespace pfgm {

using nlohmann::json;

namespace {

const json& require(const json& doc, const char* key, const std::string& where) {
  if (!doc.is_object()) throw InputError(where + ": expected a JSON object");
  auto it = doc.find(key);
  if (it == doc.end()) throw InputError(where + ": missing field \"" + key + "\"");
  return *it;
}

long long require_integer(const json& value, const std::string& where) {
  if (!value.is_number_integer()) throw InputError(where + ": expected an integer");
  return value.get<long long>();
}

std::pair<int, std::vector<Edge>> read_vertices_and_edges(const json& doc) {
  const long long n = require_integer(require(doc, "vertices", "graph"), "vertices");
  if (n < 1 || n > 1'000'000) throw InputError("vertices: must be a positive count");
  const json& list = require(doc, "edges", "graph");
  if (!list.is_array()) throw InputError("edges: expected an array of pairs");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    const json& pair = list[i];
    if (!pair.is_array() || pair.size() != 2) throw InputError(where + ": expected [u, v]");
    const long long u = require_integer(pair[0], where + "[0]");
    const long long v = require_integer(pair[1], where + "[1]");
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InputError(where + ": endpoint out of range [0, " + std::to_string(n) + ")");
    }
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  return {static_cast<int>(n), std::move(edges)};
}

std::vector<std::vector<Complex>> read_square(const json& rows, int k, const std::string& where) {
  if (!rows.is_array() || static_cast<int>(rows.size()) != k) {
    throw InputError(where + ": expected " + std::to_string(k) + " rows");
  }
  std::vector<std::vector<Complex>> out(k);
  for (int i = 0; i < k; ++i) {
    const std::string row_where = where + "[" + std::to_string(i) + "]";
    const json& row = rows[i];
    if (!row.is_array() || static_cast<int>(row.size()) != k) {
      throw InputError(row_where + ": expected " + std::to_string(k) + " entries");
    }
    for (int j = 0; j < k; ++j) {
      out[i].push_back(complex_from_json(row[j], row_where + "[" + std::to_string(j) + "]"));
    }
  }
  return out;
}

void write_json(const json& value, std::string& out) {
  switch (value.type()) {
    case json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = value.begin(); it != value.end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += json(it.key()).dump();
        out += ':';
        write_json(it.value(), out);
      }
      out += '}';
      break;
    }
    case json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < value.size(); ++i) {
        if (i > 0) out += ',';
        write_json(value[i], out);
      }
      out += ']';
      break;
    }
    case json::value_t::number_float: {
      const double x = value.get<double>();
      if (!std::isfinite(x)) {
        out += "null";
        break;
      }
      char buffer[32];
      std::snprintf(buffer, sizeof buffer, "%.17g", x);
      out += buffer;
      break;
    }
    default:
      out += value.dump();
  }
}

}  // namespace

Graph graph_from_json(const json& doc) {
  auto [n, edges] = read_vertices_and_edges(doc);
  return Graph::build(n, std::move(edges));
}

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"vertices", g.vertex_count()}, {"edges", edges}};
}

HostGraph host_from_json(const json& doc) {
  auto [n, edges] = read_vertices_and_edges(doc);
  return HostGraph::build(n, std::move(edges));
}

Complex complex_from_json(const json& value, const std::string& where) {
  if (value.is_number()) return {value.get<double>(), 0.0};
  if (value.is_object()) {
    auto re = value.find("re");
    auto im = value.find("im");
    if (re == value.end() || !re->is_number()) throw InputError(where + ": \"re\" must be a number");
    if (im != value.end() && !im->is_number()) throw InputError(where + ": \"im\" must be a number");
    for (const auto& item : value.items()) {
      if (item.key() != "re" && item.key() != "im") {
        throw InputError(where + ": unexpected field \"" + item.key() + "\"");
      }
    }
    return {re->get<double>(), im == value.end() ? 0.0 : im->get<double>()};
  }
  throw InputError(where + ": expected a number or {\"re\", \"im\"} object");
}

json complex_to_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

EdgeWeights weights_from_json(const json& doc, const Graph& g) {
  const long long k = require_integer(require(doc, "k", "weights"), "k");
  if (k < 1 || k > 4096) throw InputError("k: must be a positive color count");
  const int colors = static_cast<int>(k);
  const bool has_uniform = doc.contains("uniform");
  const bool has_per_edge = doc.contains("per_edge");
  if (has_uniform == has_per_edge) {
    throw InputError("weights: exactly one of \"uniform\" or \"per_edge\" is required");
  }
  if (has_uniform) {
    const auto rows = read_square(doc["uniform"], colors, "uniform");
    return uniform_weights(g, colors, SymmetricMatrix::from_rows(rows));
  }
  const json& blocks = doc["per_edge"];
  if (!blocks.is_array() || blocks.size() != g.edge_count()) {
    throw InputError("per_edge: expected " + std::to_string(g.edge_count()) + " blocks");
  }
  std::vector<Complex> values;
  values.reserve(g.edge_count() * colors * colors);
  for (std::size_t e = 0; e < blocks.size(); ++e) {
    const auto rows = read_square(blocks[e], colors, "per_edge[" + std::to_string(e) + "]");
    for (const auto& row : rows) values.insert(values.end(), row.begin(), row.end());
  }
  return EdgeWeights::from_blocks(g.edge_count(), colors, std::move(values));
}

SymmetricMatrix parse_matrix(const json& doc) {
  const long long n = require_integer(require(doc, "n", "matrix"), "n");
  if (n < 1 || n > 4096) throw InputError("n: must be a positive dimension");
  const json& entries = require(doc, "entries", "matrix");
  return SymmetricMatrix::from_rows(read_square(entries, static_cast<int>(n), "entries"));
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    throw InputError(path + ": malformed JSON: " + e.what());
  }
}

std::string dump_json(const json& value) {
  std::string out;
  write_json(value, out);
  return out;
}

}  // namespace pfgm
