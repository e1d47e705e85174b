#include "pfgm/zero_analysis.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include "pfgm/combinatorics.hpp"
#include "pfgm/detail/parallel.hpp"
#include "pfgm/errors.hpp"
#include "pfgm/exact_oracle.hpp"

namespace pfgm {

namespace {

constexpr double kTrimRelative = 1e-13;
constexpr double kResidualTolerance = 1e-8;
constexpr double kZeroRelative = 1e-12;

Complex evaluate_derivative(std::span<const Complex> coeffs, Complex z) {
  Complex acc{0.0};
  for (std::size_t j = coeffs.size(); j-- > 1;) acc = acc * z + static_cast<double>(j) * coeffs[j];
  return acc;
}

double uniform01(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

}  // namespace

double compute_beta(const Graph& g, const EdgeWeights& w) {
  const double dev = deviation(w);
  if (dev == 0.0) return std::numeric_limits<double>::infinity();
  return kZeroRegion.alpha / (g.max_degree() * dev);
}

Complex evaluate_polynomial(std::span<const Complex> coeffs, Complex z) {
  Complex acc{0.0};
  for (std::size_t j = coeffs.size(); j-- > 0;) acc = acc * z + coeffs[j];
  return acc;
}

std::vector<Complex> polynomial_roots(std::span<const Complex> coeffs) {
  std::size_t lo = 0;
  std::size_t hi = coeffs.size();
  while (hi > 0 && coeffs[hi - 1] == Complex(0.0)) --hi;
  while (lo < hi && coeffs[lo] == Complex(0.0)) ++lo;
  if (hi <= lo + 1) return std::vector<Complex>(lo < hi ? lo : 0, Complex(0.0));

  // z = rho s balances the outer coefficients of the polynomial in s
  const double rho =
      std::pow(std::abs(coeffs[lo]) / std::abs(coeffs[hi - 1]), 1.0 / static_cast<double>(hi - 1 - lo));
  std::vector<Complex> scaled(hi);
  double scale = 0.0;
  double power = 1.0;
  for (std::size_t j = 0; j < hi; ++j) {
    scaled[j] = coeffs[j] * power;
    scale = std::max(scale, std::abs(scaled[j]));
    power *= rho;
  }
  std::size_t degree = hi;
  while (degree > 0 && std::abs(scaled[degree - 1]) <= kTrimRelative * scale) --degree;
  if (degree <= 1) return {};
  const auto trimmed = coeffs.first(degree);
  const int d = static_cast<int>(degree) - 1;

  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(d, d);
  for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) companion(i, d - 1) = -scaled[i] / scaled[d];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  if (solver.info() != Eigen::Success) throw Refusal("companion eigenvalue solver did not converge");

  std::vector<Complex> roots(solver.eigenvalues().begin(), solver.eigenvalues().end());
  for (Complex& r : roots) {
    r *= rho;
    for (int step = 0; step < 20; ++step) {
      const Complex slope = evaluate_derivative(trimmed, r);
      if (slope == Complex(0.0)) break;
      const Complex delta = evaluate_polynomial(trimmed, r) / slope;
      r -= delta;
      if (std::abs(delta) <= 1e-15 * std::max(1.0, std::abs(r))) break;
    }
  }
  return roots;
}

double root_margin(const Graph& g, const MultiplicityVector& m, const EdgeWeights& b,
                   const ComputeOptions& options) {
  const std::vector<Complex> coeffs = g_polynomial(g, m, b, options);
  const std::vector<Complex> roots = polynomial_roots(coeffs);
  if (roots.empty()) return std::numeric_limits<double>::infinity();
  const auto nearest = std::min_element(roots.begin(), roots.end(), [](Complex x, Complex y) {
    return std::abs(x) < std::abs(y);
  });
  const double residual = std::abs(evaluate_polynomial(coeffs, *nearest)) / std::abs(coeffs[0]);
  if (residual > kResidualTolerance) {
    throw Refusal("root residual " + std::to_string(residual) + " exceeds tolerance");
  }
  return std::abs(*nearest);
}

EdgeWeights polydisc_sample(const Graph& g, int k, double delta, std::uint64_t seed,
                            std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  std::mt19937_64 gen(seq);
  std::vector<Complex> blocks(g.edge_count() * k * k);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    Complex* block = blocks.data() + e * k * k;
    for (int i = 0; i < k; ++i) {
      for (int j = i; j < k; ++j) {
        const double r = delta * uniform01(gen);
        const double phi = 2.0 * std::numbers::pi * uniform01(gen);
        const Complex z = 1.0 + std::polar(r, phi);
        block[i * k + j] = z;
        block[j * k + i] = z;
      }
    }
  }
  return EdgeWeights::from_blocks(g.edge_count(), k, std::move(blocks));
}

ScanReport polydisc_scan(const Graph& g, const MultiplicityVector& m, double delta, int trials,
                         std::uint64_t seed, const ComputeOptions& options) {
  if (!(delta >= 0.0)) throw InputError("delta must be non-negative");
  if (trials < 1) throw InputError("trials must be positive");
  const double scale = multinomial(m.counts());
  ComputeOptions inner = options;
  inner.threads = 1;

  const auto ratios = detail::map_blocks<double>(
      static_cast<std::size_t>(trials), options.threads, [&](std::size_t t) {
        const EdgeWeights z = polydisc_sample(g, m.k(), delta, seed, t);
        return std::abs(exact_partition(g, m, z, inner)) / scale;
      });

  ScanReport report;
  report.trials = trials;
  report.delta = delta;
  report.seed = seed;
  report.min_abs_ratio = *std::min_element(ratios.begin(), ratios.end());
  report.zero_count = static_cast<int>(
      std::count_if(ratios.begin(), ratios.end(), [](double r) { return r < kZeroRelative; }));
  return report;
}

}  // namespace pfgm
