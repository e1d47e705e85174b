#include "pfgm/graph.hpp"

#include <algorithm>
#include <string>

#include "pfgm/errors.hpp"

namespace pfgm {

namespace {

std::string describe(const Edge& e) {
  return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

}  // namespace

Graph Graph::build(int vertex_count, std::vector<Edge> edges) {
  if (vertex_count < 1) throw InputError("graph: vertex count must be positive");
  if (edges.empty()) throw InputError("graph: edge list is empty (max degree must be >= 1)");

  for (std::size_t i = 0; i < edges.size(); ++i) {
    Edge& e = edges[i];
    const std::string where = "edges[" + std::to_string(i) + "]";
    if (e.u < 0 || e.u >= vertex_count || e.v < 0 || e.v >= vertex_count) {
      throw InputError(where + ": endpoint out of range in " + describe(e) + " for " +
                       std::to_string(vertex_count) + " vertices");
    }
    if (e.u == e.v) throw InputError(where + ": loop edge " + describe(e));
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    throw InputError("edges: duplicate edge " + describe(*dup));
  }

  Graph g;
  g.vertex_count_ = vertex_count;
  g.adjacency_.assign(vertex_count, {});
  for (const Edge& e : edges) {
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  for (auto& nb : g.adjacency_) {
    std::sort(nb.begin(), nb.end());
    g.max_degree_ = std::max(g.max_degree_, static_cast<int>(nb.size()));
  }
  g.edges_ = std::move(edges);
  return g;
}

std::optional<std::size_t> Graph::edge_index(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  const Edge key{u, v};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

MultiplicityVector validate_multiplicities(int vertex_count, std::span<const long long> counts) {
  if (counts.empty()) throw InputError("multiplicities: list is empty");
  MultiplicityVector m;
  long long sum = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] < 0) {
      throw InputError("multiplicities[" + std::to_string(i) + "]: negative entry " +
                       std::to_string(counts[i]));
    }
    if (counts[i] > vertex_count) {
      throw InputError("multiplicities[" + std::to_string(i) + "]: entry exceeds vertex count");
    }
    sum += counts[i];
    m.counts_.push_back(static_cast<int>(counts[i]));
    if (counts[i] == 0) m.has_zero_ = true;
  }
  if (sum != vertex_count) {
    throw InputError("multiplicities: sum " + std::to_string(sum) + " != " +
                     std::to_string(vertex_count) + " vertices");
  }
  m.total_ = vertex_count;
  return m;
}

MultiplicityVector validate_multiplicities(const Graph& g, std::initializer_list<long long> counts) {
  return validate_multiplicities(g.vertex_count(), std::span<const long long>(counts.begin(), counts.size()));
}

}  // namespace pfgm
