#include "pfgm/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace pfgm {

double log_factorial(int n) {
  double sum = 0.0;
  for (int t = 2; t <= n; ++t) sum += std::log(static_cast<double>(t));
  return sum;
}

double log_multinomial(std::span<const int> counts) {
  int total = 0;
  double denom = 0.0;
  for (int c : counts) {
    total += c;
    denom += log_factorial(c);
  }
  return log_factorial(total) - denom;
}

std::optional<std::uint64_t> binomial_exact(int n, int r) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  std::uint64_t value = 1;
  for (int i = 1; i <= r; ++i) {
    // value * (n - r + i) is divisible by i; cancel the common factor first
    const std::uint64_t divisor = static_cast<std::uint64_t>(i);
    const std::uint64_t common = std::gcd(value, divisor);
    const std::uint64_t factor = static_cast<std::uint64_t>(n - r + i) / (divisor / common);
    if (__builtin_mul_overflow(value / common, factor, &value)) return std::nullopt;
  }
  return value;
}

std::optional<std::uint64_t> multinomial_exact(std::span<const int> counts) {
  std::uint64_t value = 1;
  int running = 0;
  for (int c : counts) {
    running += c;
    auto b = binomial_exact(running, c);
    if (!b || __builtin_mul_overflow(value, *b, &value)) return std::nullopt;
  }
  return value;
}

double multinomial(std::span<const int> counts) {
  if (auto exact = multinomial_exact(counts); exact && *exact < (std::uint64_t{1} << 53)) {
    return static_cast<double>(*exact);
  }
  return std::exp(log_multinomial(counts));
}

double falling_factorial(int x, int r) {
  double value = 1.0;
  for (int i = 0; i < r; ++i) value *= static_cast<double>(x - i);
  return value;
}

double binomial(int n, int r) {
  if (auto exact = binomial_exact(n, r)) return static_cast<double>(*exact);
  return std::exp(std::lgamma(n + 1.0) - std::lgamma(r + 1.0) - std::lgamma(n - r + 1.0));
}

std::vector<std::vector<double>> pascal_triangle(int rows) {
  std::vector<std::vector<double>> table;
  table.reserve(rows);
  for (int n = 0; n < rows; ++n) {
    std::vector<double> row(n + 1, 1.0);
    for (int r = 1; r < n; ++r) row[r] = table[n - 1][r - 1] + table[n - 1][r];
    table.push_back(std::move(row));
  }
  return table;
}

}  // namespace pfgm
