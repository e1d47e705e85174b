#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "pfgm/graph.hpp"

namespace pfgm {

using Complex = std::complex<double>;

/// Dense symmetric complex matrix, row-major. Symmetry is exact: a(i,j) and
/// a(j,i) must compare equal.
class SymmetricMatrix {
 public:
  /// Throws InputError if rows are ragged, non-square, empty or asymmetric.
  static SymmetricMatrix from_rows(const std::vector<std::vector<Complex>>& rows);

  int size() const { return n_; }
  const Complex& operator()(int i, int j) const { return data_[i * n_ + j]; }

 private:
  int n_ = 0;
  std::vector<Complex> data_;
};

/// Per-edge k x k weight blocks b^{uv}_{ij}, indexed by the graph's canonical
/// edge order. Each block is stored in full and is symmetric in (i, j).
class EdgeWeights {
 public:
  /// blocks holds edge_count consecutive row-major k x k blocks.
  /// Throws InputError on size mismatch, k < 1 or an asymmetric block.
  static EdgeWeights from_blocks(std::size_t edge_count, int k, std::vector<Complex> blocks);

  int k() const { return k_; }
  std::size_t edge_count() const { return edge_count_; }

  const Complex& at(std::size_t e, int i, int j) const {
    return values_[(e * k_ + i) * k_ + j];
  }
  std::span<const Complex> block(std::size_t e) const {
    return std::span<const Complex>(values_).subspan(e * k_ * k_, static_cast<std::size_t>(k_ * k_));
  }
  std::span<const Complex> values() const { return values_; }

  /// True when every entry of block e equals 1 exactly.
  bool is_all_ones(std::size_t e) const;

  /// Indices of edges whose block differs from all-ones, in increasing order.
  std::vector<std::size_t> support_edges() const;

 private:
  int k_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<Complex> values_;
};

/// The same matrix on every edge. Throws InputError if k < 1 or the matrix
/// size differs from k.
EdgeWeights uniform_weights(const Graph& g, int k, const SymmetricMatrix& matrix);

/// J: every entry 1.
EdgeWeights all_ones(const Graph& g, int k);

/// max over edges and i <= j of |b_ij - 1|.
double deviation(const EdgeWeights& w);

/// Closed polydisc of radius delta around J.
bool in_polydisc(const EdgeWeights& w, double delta);

/// Entrywise 1 + t (b - 1).
EdgeWeights interpolate(const EdgeWeights& w, Complex t);

}  // namespace pfgm
