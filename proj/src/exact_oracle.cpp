#include "pfgm/exact_oracle.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <optional>
#include <string>

#include "pfgm/combinatorics.hpp"
#include "pfgm/detail/parallel.hpp"
#include "pfgm/errors.hpp"

namespace pfgm {

namespace {

// Below this many partial assignments the search is split one level deeper
// before blocks are handed to workers.
constexpr std::size_t kMinBlocks = 64;

void check_shapes(const Graph& g, const EdgeWeights& w) {
  if (w.edge_count() != g.edge_count()) {
    throw InputError("weights: " + std::to_string(w.edge_count()) + " blocks for a graph with " +
                     std::to_string(g.edge_count()) + " edges");
  }
}

void check_shapes(const Graph& g, const MultiplicityVector& m, const EdgeWeights& w) {
  check_shapes(g, w);
  if (m.k() != w.k()) {
    throw InputError("multiplicities have k = " + std::to_string(m.k()) + " but weights have k = " +
                     std::to_string(w.k()));
  }
  if (m.total() != g.vertex_count()) throw InputError("multiplicities do not sum to |V|");
}

// Depth-first enumeration of colorings in vertex order. Each vertex
// contributes the weights of its edges to lower-numbered neighbors, so a
// complete assignment carries the full edge product.
class ColoringSearch {
 public:
  struct State {
    int depth = 0;
    Complex product{1.0};
    std::vector<int> color;
    std::vector<int> remaining;  // empty when unconstrained
  };

  ColoringSearch(const Graph& g, const EdgeWeights& w, std::vector<int> fixed)
      : w_(w), fixed_(std::move(fixed)), back_(g.vertex_count()) {
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      const Edge& edge = g.edge(e);
      back_[edge.v].push_back({e, edge.u});
    }
  }

  Complex run(State root, unsigned threads) const {
    std::vector<State> frontier{std::move(root)};
    const int n = static_cast<int>(back_.size());
    while (frontier.size() < kMinBlocks && !frontier.empty() && frontier.front().depth < n) {
      std::vector<State> next;
      for (State& s : frontier) expand(s, [&](State child) { next.push_back(std::move(child)); });
      frontier = std::move(next);
    }
    auto partial = detail::map_blocks<Complex>(frontier.size(), threads, [&](std::size_t i) {
      State s = frontier[i];
      Complex acc{0.0};
      descend(s, acc);
      return acc;
    });
    Complex total{0.0};
    for (const Complex& z : partial) total += z;
    return total;
  }

 private:
  struct BackEdge {
    std::size_t edge;
    Vertex earlier;
  };

  template <class Sink>
  void expand(const State& s, Sink&& sink) const {
    const int v = s.depth;
    const int k = w_.k();
    const int first = fixed_[v] >= 0 ? fixed_[v] : 0;
    const int last = fixed_[v] >= 0 ? fixed_[v] + 1 : k;
    for (int c = first; c < last; ++c) {
      if (fixed_[v] < 0 && !s.remaining.empty() && s.remaining[c] == 0) continue;
      Complex p = s.product;
      for (const BackEdge& be : back_[v]) p *= w_.at(be.edge, c, s.color[be.earlier]);
      if (p == Complex(0.0)) continue;
      State child = s;
      child.depth = v + 1;
      child.product = p;
      child.color[v] = c;
      if (fixed_[v] < 0 && !child.remaining.empty()) --child.remaining[c];
      sink(std::move(child));
    }
  }

  void descend(State& s, Complex& acc) const {
    const int n = static_cast<int>(back_.size());
    if (s.depth == n) {
      acc += s.product;
      return;
    }
    const int v = s.depth;
    const int k = w_.k();
    const bool is_fixed = fixed_[v] >= 0;
    const int first = is_fixed ? fixed_[v] : 0;
    const int last = is_fixed ? fixed_[v] + 1 : k;
    const Complex saved = s.product;
    for (int c = first; c < last; ++c) {
      if (!is_fixed && !s.remaining.empty() && s.remaining[c] == 0) continue;
      Complex p = saved;
      for (const BackEdge& be : back_[v]) p *= w_.at(be.edge, c, s.color[be.earlier]);
      if (p == Complex(0.0)) continue;
      s.color[v] = c;
      s.product = p;
      if (!is_fixed && !s.remaining.empty()) --s.remaining[c];
      s.depth = v + 1;
      descend(s, acc);
      s.depth = v;
      if (!is_fixed && !s.remaining.empty()) ++s.remaining[c];
    }
    s.product = saved;
  }

  const EdgeWeights& w_;
  std::vector<int> fixed_;
  std::vector<std::vector<BackEdge>> back_;
};

void check_cap(double count, const ComputeOptions& options, const char* what) {
  if (count > options.enumeration_cap) {
    throw CapExceeded(std::string(what) + ": " + std::to_string(count) +
                      " maps exceed the enumeration cap of " +
                      std::to_string(options.enumeration_cap));
  }
}

Complex constrained_sum(const Graph& g, const EdgeWeights& w, std::vector<int> fixed,
                        std::vector<int> remaining, const ComputeOptions& options) {
  check_cap(multinomial(remaining), options, "exact enumeration");
  ColoringSearch search(g, w, std::move(fixed));
  ColoringSearch::State root;
  root.color.assign(g.vertex_count(), -1);
  root.remaining = std::move(remaining);
  return search.run(std::move(root), options.threads);
}

}  // namespace

bool is_admissible(const Graph& g, const MultiplicityVector& m, const RestrictedPrefix& p) {
  if (p.vertices.size() != p.colors.size()) return false;
  std::vector<bool> seen(g.vertex_count(), false);
  for (Vertex v : p.vertices) {
    if (v < 0 || v >= g.vertex_count() || seen[v]) return false;
    seen[v] = true;
  }
  std::vector<int> used(m.k(), 0);
  for (int c : p.colors) {
    if (c < 0 || c >= m.k()) return false;
    if (++used[c] > m[c]) return false;
  }
  return true;
}

Complex exact_partition(const Graph& g, const MultiplicityVector& m, const EdgeWeights& w,
                        const ComputeOptions& options) {
  return exact_restricted(g, m, w, RestrictedPrefix{}, options);
}

Complex exact_partition_unrestricted(const Graph& g, const EdgeWeights& w,
                                     const ComputeOptions& options) {
  check_shapes(g, w);
  check_cap(std::pow(static_cast<double>(w.k()), g.vertex_count()), options,
            "unrestricted enumeration");
  ColoringSearch search(g, w, std::vector<int>(g.vertex_count(), -1));
  ColoringSearch::State root;
  root.color.assign(g.vertex_count(), -1);
  return search.run(std::move(root), options.threads);
}

Complex exact_restricted(const Graph& g, const MultiplicityVector& m, const EdgeWeights& w,
                         const RestrictedPrefix& prefix, const ComputeOptions& options) {
  check_shapes(g, m, w);
  if (!is_admissible(g, m, prefix)) throw InputError("restricted prefix is not admissible");
  std::vector<int> fixed(g.vertex_count(), -1);
  std::vector<int> remaining(m.counts().begin(), m.counts().end());
  for (std::size_t j = 0; j < prefix.vertices.size(); ++j) {
    fixed[prefix.vertices[j]] = prefix.colors[j];
    --remaining[prefix.colors[j]];
  }
  return constrained_sum(g, w, std::move(fixed), std::move(remaining), options);
}

std::vector<Complex> g_polynomial(const Graph& g, const MultiplicityVector& m, const EdgeWeights& b,
                                  const ComputeOptions& options) {
  check_shapes(g, m, b);
  const std::size_t degree = b.support_edges().size();
  const std::size_t nodes = degree + 1;
  const double turn = 2.0 * std::numbers::pi / static_cast<double>(nodes);
  // nodes on |t| = 1 / deviation keep c_j R^j on a common scale
  const double dev = deviation(b);
  const double radius = dev > 0.0 ? 1.0 / dev : 1.0;

  std::vector<Complex> samples(nodes);
  for (std::size_t p = 0; p < nodes; ++p) {
    samples[p] = exact_partition(g, m, interpolate(b, std::polar(radius, turn * p)), options);
  }

  std::vector<Complex> coeffs(nodes);
  double power = 1.0;
  for (std::size_t j = 0; j < nodes; ++j) {
    Complex acc{0.0};
    for (std::size_t p = 0; p < nodes; ++p) {
      acc += samples[p] * std::polar(1.0, -turn * static_cast<double>((j * p) % nodes));
    }
    coeffs[j] = acc / (static_cast<double>(nodes) * power);
    power *= radius;
  }
  coeffs[0] = multinomial(m.counts());
  return coeffs;
}

}  // namespace pfgm
