#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace pfgm {

/// ln(n!) as a plain sum of logarithms of integers.
double log_factorial(int n);

/// ln(total! / prod counts_i!) with total = sum of counts.
double log_multinomial(std::span<const int> counts);

/// Exact multinomial coefficient, or nullopt if it does not fit in 64 bits.
std::optional<std::uint64_t> multinomial_exact(std::span<const int> counts);

/// Multinomial coefficient as a double. Exact whenever the value is below
/// 2^53; otherwise exp(log_multinomial).
double multinomial(std::span<const int> counts);

/// x (x-1) ... (x-r+1); 1 for r == 0.
double falling_factorial(int x, int r);

/// Exact binomial coefficient; nullopt on 64-bit overflow. Zero when r < 0 or r > n.
std::optional<std::uint64_t> binomial_exact(int n, int r);

/// Binomial coefficient as a double (exact below 2^53).
double binomial(int n, int r);

/// Rows 0..rows-1 of Pascal's triangle, built by the additive recurrence.
/// Entries are exact integers while they stay below 2^53.
std::vector<std::vector<double>> pascal_triangle(int rows);

}  // namespace pfgm
