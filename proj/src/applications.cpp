#include "pfgm/applications.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pfgm/combinatorics.hpp"
#include "pfgm/errors.hpp"
#include "pfgm/exact_oracle.hpp"
#include "pfgm/zero_analysis.hpp"

namespace pfgm {

namespace {

std::vector<long long> ones(int k) { return std::vector<long long>(k, 1); }

// Under m = (1, ..., 1) every map is a bijection, so no edge ever sees a
// repeated color and the diagonal of A is irrelevant.
SymmetricMatrix with_unit_diagonal(const SymmetricMatrix& a) {
  std::vector<std::vector<Complex>> rows(a.size(), std::vector<Complex>(a.size()));
  for (int i = 0; i < a.size(); ++i) {
    for (int j = 0; j < a.size(); ++j) rows[i][j] = i == j ? Complex(1.0) : a(i, j);
  }
  return SymmetricMatrix::from_rows(rows);
}

SymmetricMatrix matrix_from(int k, auto&& entry) {
  std::vector<std::vector<Complex>> rows(k, std::vector<Complex>(k));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) rows[i][j] = entry(i, j);
  }
  return SymmetricMatrix::from_rows(rows);
}

std::vector<std::string> soft_warnings(double gamma) {
  if (gamma >= kZeroRegion.alpha) {
    return {"gamma = " + std::to_string(gamma) + " >= alpha = " +
            std::to_string(kZeroRegion.alpha) + ": no error certificate"};
  }
  return {};
}

void check_gamma(double gamma) {
  if (!(gamma > 0.0)) throw InputError("gamma must be positive");
}

}  // namespace

CountResult evaluate(const ApplicationInstance& instance, const Evaluation& evaluation,
                     const ComputeOptions& options) {
  CountResult result;
  result.warnings = instance.warnings;
  if (std::holds_alternative<Exact>(evaluation)) {
    const Complex q = exact_partition(instance.graph, instance.mult, instance.weights, options);
    result.value = q / instance.normalizer;
    if (result.value != Complex(0.0)) result.log_value = std::log(result.value);
    return result;
  }
  const double epsilon = std::get<Approximate>(evaluation).epsilon;
  ApproximationResult approx = approximate_log_partition(
      instance.graph, instance.mult, instance.weights, TargetEpsilon{epsilon}, options);
  result.log_value = approx.log_value - instance.normalizer_log;
  result.value = std::exp(*result.log_value);
  result.approximation = approx;
  return result;
}

HostGraph HostGraph::build(int vertex_count, std::vector<Edge> edges) {
  if (vertex_count < 1) throw InputError("host: vertex count must be positive");
  HostGraph host;
  host.vertex_count = vertex_count;
  host.adjacent.assign(static_cast<std::size_t>(vertex_count) * vertex_count, false);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    Edge& e = edges[i];
    const std::string where = "edges[" + std::to_string(i) + "]";
    if (e.u < 0 || e.u >= vertex_count || e.v < 0 || e.v >= vertex_count) {
      throw InputError(where + ": endpoint out of range");
    }
    if (e.u == e.v) throw InputError(where + ": loop edge");
    if (e.u > e.v) std::swap(e.u, e.v);
    if (host.has_edge(e.u, e.v)) throw InputError(where + ": duplicate edge");
    host.adjacent[e.u * vertex_count + e.v] = true;
    host.adjacent[e.v * vertex_count + e.u] = true;
  }
  std::sort(edges.begin(), edges.end());
  host.edges = std::move(edges);
  return host;
}

ApplicationInstance independent_set_instance(const Graph& g, int s, WeightMode mode) {
  const int n = g.vertex_count();
  if (s < 1 || s > n - 1) {
    throw InputError("independent set size must lie in [1, |V|-1] so both multiplicities are positive");
  }
  const std::vector<long long> counts{s, n - s};
  MultiplicityVector m = validate_multiplicities(g, counts);

  if (std::holds_alternative<Hard>(mode)) {
    auto a = matrix_from(2, [](int i, int j) { return (i == 0 && j == 0) ? 0.0 : 1.0; });
    return {g, m, uniform_weights(g, 2, a), 1.0, 0.0, "independent sets (hard)", {}};
  }
  const double gamma = std::get<Soft>(mode).gamma;
  check_gamma(gamma);
  const double step = gamma / g.max_degree();
  auto a = matrix_from(2, [&](int i, int j) { return (i == 0 && j == 0) ? 1.0 - step : 1.0 + step; });
  const double log_norm = static_cast<double>(g.edge_count()) * std::log1p(step);
  return {g, m, uniform_weights(g, 2, a), std::exp(log_norm), log_norm,
          "independent sets (soft)", soft_warnings(gamma)};
}

IndependenceVerdict distinguish_independent(const Graph& g, int s, double x, double gamma,
                                            const Evaluation& evaluation,
                                            const ComputeOptions& options) {
  if (x < 0.0) throw InputError("edge threshold x must be non-negative");
  const bool approximate = std::holds_alternative<Approximate>(evaluation);
  if (approximate && gamma >= kZeroRegion.alpha) {
    throw NoCertificate("gamma must be below alpha for a certified comparison");
  }
  const ApplicationInstance instance = independent_set_instance(g, s, Soft{gamma});
  const CountResult count = evaluate(instance, evaluation, options);

  IndependenceVerdict verdict;
  verdict.weighted_sum = count.value.real();
  verdict.threshold =
      binomial(g.vertex_count(), s) * std::exp(-2.0 * gamma * x / g.max_degree());
  if (approximate) {
    verdict.rel_err = std::get<Approximate>(evaluation).epsilon;
    verdict.approximation = count.approximation;
  }
  verdict.sparse_subset_exists =
      verdict.weighted_sum > verdict.threshold * std::exp(verdict.rel_err);
  verdict.few_independent =
      verdict.weighted_sum < 2.0 * verdict.threshold * std::exp(-verdict.rel_err);
  return verdict;
}

ApplicationInstance hafnian_instance(const SymmetricMatrix& a) {
  const int dim = a.size();
  if (dim % 2 != 0) throw InputError("hafnian: matrix dimension must be even");
  const int n = dim / 2;
  std::vector<Edge> edges;
  for (int p = 0; p < n; ++p) edges.push_back({2 * p, 2 * p + 1});
  Graph g = Graph::build(dim, std::move(edges));
  MultiplicityVector m = validate_multiplicities(g, ones(dim));
  const double log_norm = n * std::log(2.0) + log_factorial(n);
  const double norm = std::ldexp(falling_factorial(n, n), n);
  return {g, m, uniform_weights(g, dim, with_unit_diagonal(a)), norm, log_norm, "hafnian", {}};
}

CountResult hafnian(const SymmetricMatrix& a, const Evaluation& evaluation,
                    const ComputeOptions& options) {
  return evaluate(hafnian_instance(a), evaluation, options);
}

ApplicationInstance hamiltonian_instance(const SymmetricMatrix& a, HamiltonianTarget target) {
  const int n = a.size();
  if (n < 3) throw InputError("Hamiltonian permanent: need n >= 3");
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  Graph g = Graph::build(n, std::move(edges));
  MultiplicityVector m = validate_multiplicities(g, ones(n));
  const double norm = target == HamiltonianTarget::kCycles ? 2.0 * n : static_cast<double>(n);
  return {g, m, uniform_weights(g, n, with_unit_diagonal(a)), norm, std::log(norm),
          target == HamiltonianTarget::kCycles ? "Hamiltonian cycles" : "Hamiltonian permanent",
          {}};
}

CountResult hamiltonian_permanent(const SymmetricMatrix& a, const Evaluation& evaluation,
                                  HamiltonianTarget target, const ComputeOptions& options) {
  return evaluate(hamiltonian_instance(a, target), evaluation, options);
}

ApplicationInstance clique_instance(const HostGraph& host, int n, WeightMode mode) {
  const int k = host.vertex_count;
  if (n < 3 || n > k) throw InputError("clique size must satisfy 3 <= n <= host size");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  Graph g = Graph::build(k, std::move(edges));
  MultiplicityVector m = validate_multiplicities(g, ones(k));
  const double log_count_norm = log_factorial(n) + log_factorial(k - n);
  const double count_norm = falling_factorial(n, n) * falling_factorial(k - n, k - n);

  if (std::holds_alternative<Hard>(mode)) {
    auto a = matrix_from(k, [&](int i, int j) { return i == j || host.has_edge(i, j) ? 1.0 : 0.0; });
    return {g, m, uniform_weights(g, k, a), count_norm, log_count_norm, "cliques (hard)", {}};
  }
  const double gamma = std::get<Soft>(mode).gamma;
  check_gamma(gamma);
  const double step = gamma / (n - 1);
  auto a = matrix_from(k, [&](int i, int j) {
    if (i == j) return 1.0;
    return host.has_edge(i, j) ? 1.0 + step : 1.0 - step;
  });
  const double pairs = n * (n - 1) / 2.0;
  const double log_norm = log_count_norm + pairs * std::log1p(step);
  return {g, m, uniform_weights(g, k, a), count_norm * std::exp(pairs * std::log1p(step)),
          log_norm, "clique density (soft)", soft_warnings(gamma)};
}

CountResult clique_density_sum(const HostGraph& host, int n, WeightMode mode,
                               const Evaluation& evaluation, const ComputeOptions& options) {
  return evaluate(clique_instance(host, n, mode), evaluation, options);
}

ApplicationInstance coloring_instance(const Graph& g, const MultiplicityVector& m,
                                      WeightMode mode) {
  if (m.total() != g.vertex_count()) throw InputError("multiplicities do not sum to |V|");
  const int k = m.k();
  if (std::holds_alternative<Hard>(mode)) {
    auto a = matrix_from(k, [](int i, int j) { return i == j ? 0.0 : 1.0; });
    return {g, m, uniform_weights(g, k, a), 1.0, 0.0, "proper colorings (hard)", {}};
  }
  const double gamma = std::get<Soft>(mode).gamma;
  check_gamma(gamma);
  const double step = gamma / g.max_degree();
  auto a = matrix_from(k, [&](int i, int j) { return i == j ? 1.0 - step : 1.0 + step; });
  const double log_norm = static_cast<double>(g.edge_count()) * std::log1p(step);
  return {g, m, uniform_weights(g, k, a), std::exp(log_norm), log_norm, "colorings (soft)",
          soft_warnings(gamma)};
}

CountResult coloring_partition(const Graph& g, const MultiplicityVector& m, WeightMode mode,
                               const Evaluation& evaluation, const ComputeOptions& options) {
  return evaluate(coloring_instance(g, m, mode), evaluation, options);
}

}  // namespace pfgm
