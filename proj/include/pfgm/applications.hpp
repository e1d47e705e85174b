#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pfgm/graph.hpp"
#include "pfgm/options.hpp"
#include "pfgm/taylor_engine.hpp"
#include "pfgm/weights.hpp"

namespace pfgm {

/// 0/1 weights that count structures exactly.
struct Hard {};
/// Weights 1 +- gamma / Delta that down-weight near misses exponentially.
struct Soft {
  double gamma = 0.1;
};
using WeightMode = std::variant<Hard, Soft>;

/// Brute-force enumeration.
struct Exact {};
/// Taylor approximation certified to additive log error epsilon.
struct Approximate {
  double epsilon = 0.1;
};
using Evaluation = std::variant<Exact, Approximate>;

/// A counting problem expressed as Q_{G,m}(B). The target quantity is
/// Q / normalizer; normalizer_log = ln(normalizer).
struct ApplicationInstance {
  Graph graph;
  MultiplicityVector mult;
  EdgeWeights weights;
  double normalizer = 1.0;
  double normalizer_log = 0.0;
  std::string description;
  std::vector<std::string> warnings;
};

struct CountResult {
  Complex value;
  /// ln(value); absent when an exact value is zero.
  std::optional<Complex> log_value;
  /// Present in Approximate mode; log_value then carries its error bound.
  std::optional<ApproximationResult> approximation;
  std::vector<std::string> warnings;
};

/// Evaluates Q / normalizer. In Approximate mode the value is
/// exp(log Q - normalizer_log) and NoCertificate is thrown when the instance
/// lies outside the zero-free region.
CountResult evaluate(const ApplicationInstance& instance, const Evaluation& evaluation,
                     const ComputeOptions& options = {});

/// Simple graph that may have no edges; used as the target of embeddings.
struct HostGraph {
  int vertex_count = 0;
  std::vector<Edge> edges;
  std::vector<bool> adjacent;  // vertex_count^2, row-major

  /// Throws InputError on loops, duplicates or out-of-range endpoints.
  static HostGraph build(int vertex_count, std::vector<Edge> edges);
  bool has_edge(int i, int j) const { return adjacent[i * vertex_count + j]; }
};

/// k = 2, m = (s, |V| - s). Hard: Q counts independent s-sets. Soft: Q over
/// the normalizer is sum_{|S| = s} ((1 - g/D) / (1 + g/D))^{e(S)}.
/// Requires 1 <= s <= |V| - 1.
ApplicationInstance independent_set_instance(const Graph& g, int s, WeightMode mode);

struct IndependenceVerdict {
  double weighted_sum = 0.0;  // N
  double threshold = 0.0;     // T = C(|V|, s) exp(-2 gamma x / Delta)
  double rel_err = 0.0;       // certified additive log error folded into the tests
  bool sparse_subset_exists = false;  // N > T e^{rel_err}
  bool few_independent = false;       // N < 2 T e^{-rel_err}
  std::optional<ApproximationResult> approximation;
};

/// Tells apart graphs where every s-subset spans at least x edges from graphs
/// with many independent s-sets. Both flags may hold in the inconclusive band.
IndependenceVerdict distinguish_independent(const Graph& g, int s, double x, double gamma,
                                            const Evaluation& evaluation,
                                            const ComputeOptions& options = {});

/// G = n disjoint edges, k = 2n, m = (1, ..., 1); Q / (2^n n!) = haf(A).
/// Diagonal entries never contribute and are replaced by 1.
ApplicationInstance hafnian_instance(const SymmetricMatrix& a);
CountResult hafnian(const SymmetricMatrix& a, const Evaluation& evaluation,
                    const ComputeOptions& options = {});

enum class HamiltonianTarget {
  kPermanent,  // Q / n: sum over single-cycle permutations
  kCycles,     // Q / (2n): undirected Hamiltonian cycles for 0/1 input
};

/// G = cycle on n >= 3 vertices, k = n, m = (1, ..., 1).
ApplicationInstance hamiltonian_instance(const SymmetricMatrix& a, HamiltonianTarget target);
CountResult hamiltonian_permanent(const SymmetricMatrix& a, const Evaluation& evaluation,
                                  HamiltonianTarget target = HamiltonianTarget::kPermanent,
                                  const ComputeOptions& options = {});

/// G-hat = K_n plus (k - n) isolated vertices, k = host size, m = (1, ..., 1).
/// Hard: the number of n-cliques of the host. Soft: sum over n-subsets of
/// ((1 - g/(n-1)) / (1 + g/(n-1)))^{t(S)}, t(S) = missing pairs in S.
ApplicationInstance clique_instance(const HostGraph& host, int n, WeightMode mode);
CountResult clique_density_sum(const HostGraph& host, int n, WeightMode mode,
                               const Evaluation& evaluation, const ComputeOptions& options = {});

/// Hard: proper colorings using color i exactly mu_i times. Soft: sum over
/// maps of ((1 - g/D) / (1 + g/D))^{e(phi)}, e(phi) = monochromatic edges.
ApplicationInstance coloring_instance(const Graph& g, const MultiplicityVector& m,
                                      WeightMode mode);
CountResult coloring_partition(const Graph& g, const MultiplicityVector& m, WeightMode mode,
                               const Evaluation& evaluation, const ComputeOptions& options = {});

}  // namespace pfgm
