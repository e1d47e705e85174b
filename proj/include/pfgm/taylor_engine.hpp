#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "pfgm/graph.hpp"
#include "pfgm/options.hpp"
#include "pfgm/weights.hpp"

namespace pfgm {

struct FixedOrder {
  int n = 0;
};

struct TargetEpsilon {
  double epsilon = 0.1;
};

using OrderMode = std::variant<FixedOrder, TargetEpsilon>;

/// Degree-n Taylor approximation of ln Q_{G,m}(B) along t -> J + t(B - J).
struct ApproximationResult {
  /// ln Q on the branch that is real at B = J.
  Complex log_value;
  int order = 0;
  /// Certified additive error on log_value; nullopt when beta <= 1.
  std::optional<double> error_bound;
  /// Zero-free radius used for the bound; +infinity when B = J.
  double beta = 0.0;
  /// ln multinomial(|V|; m) = f(0).
  double log_at_j = 0.0;
  /// |E'|: edges whose block is not all-ones.
  std::size_t support_edges = 0;
};

/// prod_i (mu_i)_{nu_i} / (|V|)_s with falling factorials: the number of ways
/// to extend a partial map with usage counts nu on s vertices, divided by the
/// multinomial g(0). Throws InputError if nu_i > mu_i, s > |V| or
/// sum(nu) != s.
double extension_count_ratio(const MultiplicityVector& m, std::span<const int> nu, int s);

/// a_j = g^{(j)}(0) / (j! g(0)) for j = 1..n, i.e. the normalized Taylor
/// coefficients of g. Enumerates unordered subsets of support edges and the
/// colorings of their endpoints.
std::vector<Complex> taylor_coefficients(const Graph& g, const MultiplicityVector& m,
                                         const EdgeWeights& b, int n,
                                         const ComputeOptions& options = {});

/// h_j = g^{(j)}(0) / g(0). Exactly zero when j exceeds |E'|.
Complex normalized_derivative(const Graph& g, const MultiplicityVector& m, const EdgeWeights& b,
                              int j, const ComputeOptions& options = {});

/// Solves h_j = sum_{i<j} C(j-1, i) h_i f_{j-i} (h_0 = 1) for f_1..f_n.
std::vector<Complex> log_derivatives(std::span<const Complex> h);

/// Same system on the normalized scale: given a_j = h_j / j!, returns
/// f_j / j!. Stays finite for orders where j! overflows.
std::vector<Complex> log_series(std::span<const Complex> a);

/// |E| / ((n+1) beta^n (beta-1)); nullopt when beta <= 1. Zero for
/// beta = +infinity or edge_count = 0.
std::optional<double> error_bound(std::size_t edge_count, double beta, int n);

/// Smallest n >= 0 with error_bound(...) <= epsilon. Throws NoCertificate
/// when beta <= 1 and InputError when epsilon <= 0.
int select_order(std::size_t edge_count, double beta, double epsilon);

/// Number of (subset, map) pairs visited for orders 1..n:
/// sum_j C(|E'|, j) k^{min(2j, |V|)}.
double taylor_work(std::size_t support_edges, int k, int vertex_count, int n);

/// Largest n whose taylor_work fits the budget (capped at max_order).
int max_feasible_order(std::size_t support_edges, int k, int vertex_count, double budget,
                       int max_order);

/// f(0) + sum_{j=1}^n f^{(j)}(0) / j!. In TargetEpsilon mode n comes from
/// select_order and NoCertificate is thrown unless beta > 1. Throws
/// CapExceeded when the order's work exceeds options.work_cap.
ApproximationResult approximate_log_partition(const Graph& g, const MultiplicityVector& m,
                                              const EdgeWeights& b, OrderMode mode,
                                              const ComputeOptions& options = {});

}  // namespace pfgm
