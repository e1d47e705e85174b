#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pfgm/graph.hpp"
#include "pfgm/options.hpp"
#include "pfgm/weights.hpp"

namespace pfgm {

/// Constants of the zero-free region. alpha is the radius constant: for
/// positive multiplicities, Q_{G,m}(Z) != 0 whenever every |z - 1| is at most
/// alpha / Delta(G). The remaining values are the auxiliary quantities from
/// which alpha is derived:
///   theta = arcsin(epsilon_proof / cos(theta / 2)),  tau = cos(theta / 2),
///   alpha = xi_cap tau / (4 + xi_cap tau).
struct ZeroRegionConstants {
  double alpha;
  double alpha_published;
  double gamma_default;
  double epsilon_proof;
  double theta;
  double tau;
  double xi_cap;
};

inline constexpr ZeroRegionConstants kZeroRegion{
    .alpha = 0.1074337498,
    .alpha_published = 0.107,
    .gamma_default = 0.1,
    .epsilon_proof = 0.76,
    .theta = 1.101463960,
    .tau = 0.8521416971,
    .xi_cap = 0.565,
};

constexpr const ZeroRegionConstants& constants() { return kZeroRegion; }

/// beta = alpha / (Delta(G) * deviation(w)); +infinity when deviation is 0.
/// Every z with |z| <= beta keeps J + z(B - J) inside the zero-free polydisc.
double compute_beta(const Graph& g, const EdgeWeights& w);

/// Roots of c_0 + c_1 z + ... + c_d z^d via companion-matrix eigenvalues,
/// refined by Newton steps. The variable is first rescaled so that the lowest
/// and highest nonzero coefficients have equal modulus; leading coefficients
/// below 1e-13 of the largest rescaled one are then treated as zero.
std::vector<Complex> polynomial_roots(std::span<const Complex> coeffs);

/// Horner evaluation of c_0 + c_1 z + ...
Complex evaluate_polynomial(std::span<const Complex> coeffs, Complex z);

/// Smallest root modulus of g(z) = Q_{G,m}(J + z(B - J)); +infinity when g
/// is constant. Throws Refusal if the root fails the residual check
/// |g(root)| / |c_0| <= 1e-8.
double root_margin(const Graph& g, const MultiplicityVector& m, const EdgeWeights& b,
                   const ComputeOptions& options = {});

struct ScanReport {
  int trials = 0;
  double delta = 0.0;
  /// min over trials of |Q(Z)| / multinomial(|V|; m)
  double min_abs_ratio = 0.0;
  int zero_count = 0;
  std::uint64_t seed = 0;
};

/// Draws `trials` arrays Z with independent entries 1 + r e^{i phi},
/// r ~ U[0, delta], phi ~ U[0, 2 pi), and evaluates Q_{G,m}(Z) exactly.
/// Trial t uses its own generator seeded from (seed, t), so reports do not
/// depend on the thread count.
ScanReport polydisc_scan(const Graph& g, const MultiplicityVector& m, double delta, int trials,
                         std::uint64_t seed, const ComputeOptions& options = {});

/// The random array used by trial `trial` of polydisc_scan.
EdgeWeights polydisc_sample(const Graph& g, int k, double delta, std::uint64_t seed,
                            std::uint64_t trial);

}  // namespace pfgm
