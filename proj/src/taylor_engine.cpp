#include "pfgm/taylor_engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "pfgm/combinatorics.hpp"
#include "pfgm/detail/parallel.hpp"
#include "pfgm/errors.hpp"
#include "pfgm/zero_analysis.hpp"

namespace pfgm {

namespace {

constexpr int kMaxSelectableOrder = 100000;

void check_shapes(const Graph& g, const MultiplicityVector& m, const EdgeWeights& b) {
  if (b.edge_count() != g.edge_count()) throw InputError("weights do not match the graph's edge count");
  if (b.k() != m.k()) throw InputError("multiplicities and weights disagree on k");
  if (m.total() != g.vertex_count()) throw InputError("multiplicities do not sum to |V|");
}

// Sum over colorings of the endpoints of one edge subset of
// extension_count_ratio * prod (b - 1). The ratio is accumulated one vertex
// at a time as (mu_c - nu_c) / (|V| - position).
class SubsetEvaluator {
 public:
  SubsetEvaluator(const Graph& g, const MultiplicityVector& m, const EdgeWeights& b)
      : g_(g), m_(m), b_(b) {}

  Complex evaluate(std::span<const std::size_t> subset) {
    vertices_.clear();
    for (std::size_t e : subset) {
      vertices_.push_back(g_.edge(e).u);
      vertices_.push_back(g_.edge(e).v);
    }
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());

    const std::size_t s = vertices_.size();
    back_.assign(s, {});
    auto position = [&](Vertex v) {
      return static_cast<int>(std::lower_bound(vertices_.begin(), vertices_.end(), v) -
                              vertices_.begin());
    };
    for (std::size_t e : subset) {
      // u < v, so the v endpoint is assigned last
      back_[position(g_.edge(e).v)].push_back({e, position(g_.edge(e).u)});
    }
    color_.assign(s, -1);
    used_.assign(m_.k(), 0);
    Complex acc{0.0};
    descend(0, Complex(1.0), acc);
    return acc;
  }

 private:
  struct BackEdge {
    std::size_t edge;
    int earlier;
  };

  void descend(std::size_t p, Complex product, Complex& acc) {
    if (p == vertices_.size()) {
      acc += product;
      return;
    }
    const double remaining_vertices = static_cast<double>(m_.total() - static_cast<int>(p));
    for (int c = 0; c < m_.k(); ++c) {
      const int available = m_[c] - used_[c];
      if (available == 0) continue;
      Complex q = product * (available / remaining_vertices);
      for (const BackEdge& be : back_[p]) q *= b_.at(be.edge, c, color_[be.earlier]) - 1.0;
      if (q == Complex(0.0)) continue;
      color_[p] = c;
      ++used_[c];
      descend(p + 1, q, acc);
      --used_[c];
    }
  }

  const Graph& g_;
  const MultiplicityVector& m_;
  const EdgeWeights& b_;
  std::vector<Vertex> vertices_;
  std::vector<std::vector<BackEdge>> back_;
  std::vector<int> color_;
  std::vector<int> used_;
};

}  // namespace

double extension_count_ratio(const MultiplicityVector& m, std::span<const int> nu, int s) {
  if (static_cast<int>(nu.size()) != m.k()) throw InputError("usage counts must have length k");
  if (s < 0 || s > m.total()) throw InputError("s must lie in [0, |V|]");
  int sum = 0;
  for (int i = 0; i < m.k(); ++i) {
    if (nu[i] < 0 || nu[i] > m[i]) {
      throw InputError("usage count for color " + std::to_string(i) + " exceeds its multiplicity");
    }
    sum += nu[i];
  }
  if (sum != s) throw InputError("usage counts do not sum to s");

  double ratio = 1.0;
  int t = 0;
  for (int i = 0; i < m.k(); ++i) {
    for (int r = 0; r < nu[i]; ++r, ++t) {
      ratio *= static_cast<double>(m[i] - r) / static_cast<double>(m.total() - t);
    }
  }
  return ratio;
}

std::vector<Complex> taylor_coefficients(const Graph& g, const MultiplicityVector& m,
                                         const EdgeWeights& b, int n,
                                         const ComputeOptions& options) {
  check_shapes(g, m, b);
  if (n < 0) throw InputError("order must be non-negative");
  const std::vector<std::size_t> support = b.support_edges();
  const int depth = std::min<int>(n, static_cast<int>(support.size()));

  // One block per leading support edge; each block walks the subsets whose
  // smallest member is that edge.
  auto blocks = detail::map_blocks<std::vector<Complex>>(
      depth > 0 ? support.size() : 0, options.threads, [&](std::size_t first) {
        std::vector<Complex> acc(depth + 1, Complex(0.0));
        SubsetEvaluator evaluator(g, m, b);
        std::vector<std::size_t> subset{support[first]};
        std::vector<std::size_t> cursor{first};
        while (!subset.empty()) {
          acc[subset.size()] += evaluator.evaluate(subset);
          // next subset in lexicographic order: extend, else advance, else pop
          if (static_cast<int>(subset.size()) < depth && cursor.back() + 1 < support.size()) {
            cursor.push_back(cursor.back() + 1);
            subset.push_back(support[cursor.back()]);
            continue;
          }
          while (!subset.empty()) {
            if (subset.size() > 1 && cursor.back() + 1 < support.size()) {
              ++cursor.back();
              subset.back() = support[cursor.back()];
              break;
            }
            cursor.pop_back();
            subset.pop_back();
          }
        }
        return acc;
      });

  std::vector<Complex> coeffs(n, Complex(0.0));
  for (const auto& acc : blocks) {
    for (int j = 1; j <= depth; ++j) coeffs[j - 1] += acc[j];
  }
  return coeffs;
}

Complex normalized_derivative(const Graph& g, const MultiplicityVector& m, const EdgeWeights& b,
                              int j, const ComputeOptions& options) {
  if (j < 1) throw InputError("derivative index must be >= 1");
  const std::vector<Complex> a = taylor_coefficients(g, m, b, j, options);
  return a[j - 1] * falling_factorial(j, j);
}

std::vector<Complex> log_derivatives(std::span<const Complex> h) {
  const int n = static_cast<int>(h.size());
  const auto pascal = pascal_triangle(n);
  std::vector<Complex> f(n);
  for (int j = 1; j <= n; ++j) {
    Complex value = h[j - 1];
    for (int i = 1; i < j; ++i) value -= pascal[j - 1][i] * h[i - 1] * f[j - i - 1];
    f[j - 1] = value;
  }
  return f;
}

std::vector<Complex> log_series(std::span<const Complex> a) {
  const int n = static_cast<int>(a.size());
  std::vector<Complex> out(n);
  for (int j = 1; j <= n; ++j) {
    Complex value{0.0};
    for (int i = 1; i < j; ++i) value += static_cast<double>(j - i) * out[j - i - 1] * a[i - 1];
    out[j - 1] = a[j - 1] - value / static_cast<double>(j);
  }
  return out;
}

std::optional<double> error_bound(std::size_t edge_count, double beta, int n) {
  if (!(beta > 1.0)) return std::nullopt;
  if (edge_count == 0 || std::isinf(beta)) return 0.0;
  return static_cast<double>(edge_count) /
         ((n + 1.0) * std::pow(beta, n) * (beta - 1.0));
}

int select_order(std::size_t edge_count, double beta, double epsilon) {
  if (!(epsilon > 0.0)) throw InputError("epsilon must be positive");
  if (!(beta > 1.0)) throw NoCertificate("beta <= 1: no zero-free disc of radius > 1 is known");
  for (int n = 0; n <= kMaxSelectableOrder; ++n) {
    if (*error_bound(edge_count, beta, n) <= epsilon) return n;
  }
  throw CapExceeded("no order up to " + std::to_string(kMaxSelectableOrder) +
                    " reaches the requested epsilon");
}

double taylor_work(std::size_t support_edges, int k, int vertex_count, int n) {
  double work = 0.0;
  const int top = std::min<int>(n, static_cast<int>(support_edges));
  for (int j = 1; j <= top; ++j) {
    work += binomial(static_cast<int>(support_edges), j) *
            std::pow(static_cast<double>(k), std::min(2 * j, vertex_count));
  }
  return work;
}

int max_feasible_order(std::size_t support_edges, int k, int vertex_count, double budget,
                       int max_order) {
  int n = 0;
  while (n < max_order && taylor_work(support_edges, k, vertex_count, n + 1) <= budget) ++n;
  return n;
}

ApproximationResult approximate_log_partition(const Graph& g, const MultiplicityVector& m,
                                              const EdgeWeights& b, OrderMode mode,
                                              const ComputeOptions& options) {
  check_shapes(g, m, b);
  ApproximationResult result;
  result.support_edges = b.support_edges().size();
  result.beta = compute_beta(g, b);
  result.log_at_j = log_multinomial(m.counts());

  if (const auto* fixed = std::get_if<FixedOrder>(&mode)) {
    if (fixed->n < 0) throw InputError("order must be non-negative");
    result.order = fixed->n;
  } else {
    result.order = select_order(result.support_edges, result.beta,
                                std::get<TargetEpsilon>(mode).epsilon);
  }

  const double work = taylor_work(result.support_edges, m.k(), g.vertex_count(), result.order);
  if (work > options.work_cap) {
    const int feasible = max_feasible_order(result.support_edges, m.k(), g.vertex_count(),
                                            options.work_cap, result.order);
    throw CapExceeded("order " + std::to_string(result.order) + " needs about " +
                      std::to_string(work) + " operations; the work cap " +
                      std::to_string(options.work_cap) + " allows order " +
                      std::to_string(feasible));
  }

  const std::vector<Complex> a = taylor_coefficients(g, m, b, result.order, options);
  Complex log_value{result.log_at_j};
  for (const Complex& term : log_series(a)) log_value += term;
  result.log_value = log_value;
  result.error_bound = error_bound(result.support_edges, result.beta, result.order);
  return result;
}

}  // namespace pfgm
