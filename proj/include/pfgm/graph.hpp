#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace pfgm {

using Vertex = int;

/// Unordered edge stored with u < v.
struct Edge {
  Vertex u;
  Vertex v;

  auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph with at least one edge. Isolated vertices are
/// allowed. Edges are kept in canonical order (sorted pairs, then
/// lexicographic), and that order defines the edge index used by
/// EdgeWeights.
class Graph {
 public:
  /// Throws InputError on loops, duplicate edges, out-of-range endpoints,
  /// vertex_count < 1 or an empty edge list.
  static Graph build(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(std::size_t e) const { return edges_[e]; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }

  /// Delta(G).
  int max_degree() const { return max_degree_; }

  /// Canonical index of edge {u, v}, if present.
  std::optional<std::size_t> edge_index(Vertex u, Vertex v) const;

 private:
  Graph() = default;

  int vertex_count_ = 0;
  int max_degree_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

inline int max_degree(const Graph& g) { return g.max_degree(); }

/// Color-class sizes (mu_1, ..., mu_k). Zero entries are permitted and
/// flagged through has_zero().
class MultiplicityVector {
 public:
  int k() const { return static_cast<int>(counts_.size()); }
  int total() const { return total_; }
  int operator[](int i) const { return counts_[i]; }
  std::span<const int> counts() const { return counts_; }
  bool has_zero() const { return has_zero_; }

 private:
  friend MultiplicityVector validate_multiplicities(int vertex_count,
                                                    std::span<const long long> counts);
  std::vector<int> counts_;
  int total_ = 0;
  bool has_zero_ = false;
};

/// Throws InputError on an empty list, negative entries, or a sum different
/// from vertex_count.
MultiplicityVector validate_multiplicities(int vertex_count, std::span<const long long> counts);

inline MultiplicityVector validate_multiplicities(const Graph& g,
                                                  std::span<const long long> counts) {
  return validate_multiplicities(g.vertex_count(), counts);
}

MultiplicityVector validate_multiplicities(const Graph& g, std::initializer_list<long long> counts);

}  // namespace pfgm
