#include "pfgm/weights.hpp"

#include <algorithm>
#include <string>

#include "pfgm/errors.hpp"

namespace pfgm {

SymmetricMatrix SymmetricMatrix::from_rows(const std::vector<std::vector<Complex>>& rows) {
  const int n = static_cast<int>(rows.size());
  if (n == 0) throw InputError("matrix: no rows");
  SymmetricMatrix a;
  a.n_ = n;
  a.data_.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) {
      throw InputError("matrix: row " + std::to_string(i) + " has " +
                       std::to_string(rows[i].size()) + " entries, expected " + std::to_string(n));
    }
    a.data_.insert(a.data_.end(), rows[i].begin(), rows[i].end());
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (a(i, j) != a(j, i)) {
        throw InputError("matrix: not symmetric at (" + std::to_string(i) + "," +
                         std::to_string(j) + ")");
      }
    }
  }
  return a;
}

EdgeWeights EdgeWeights::from_blocks(std::size_t edge_count, int k, std::vector<Complex> blocks) {
  if (k < 1) throw InputError("weights: k must be >= 1");
  const std::size_t block_size = static_cast<std::size_t>(k) * k;
  if (blocks.size() != edge_count * block_size) {
    throw InputError("weights: expected " + std::to_string(edge_count) + " blocks of size " +
                     std::to_string(k) + "x" + std::to_string(k));
  }
  EdgeWeights w;
  w.k_ = k;
  w.edge_count_ = edge_count;
  w.values_ = std::move(blocks);
  for (std::size_t e = 0; e < edge_count; ++e) {
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) {
        if (w.at(e, i, j) != w.at(e, j, i)) {
          throw InputError("weights: block " + std::to_string(e) + " not symmetric at (" +
                           std::to_string(i) + "," + std::to_string(j) + ")");
        }
      }
    }
  }
  return w;
}

bool EdgeWeights::is_all_ones(std::size_t e) const {
  auto b = block(e);
  return std::all_of(b.begin(), b.end(), [](const Complex& z) { return z == Complex(1.0); });
}

std::vector<std::size_t> EdgeWeights::support_edges() const {
  std::vector<std::size_t> support;
  for (std::size_t e = 0; e < edge_count_; ++e) {
    if (!is_all_ones(e)) support.push_back(e);
  }
  return support;
}

EdgeWeights uniform_weights(const Graph& g, int k, const SymmetricMatrix& matrix) {
  if (k < 1) throw InputError("weights: k must be >= 1");
  if (matrix.size() != k) {
    throw InputError("weights: matrix is " + std::to_string(matrix.size()) + "x" +
                     std::to_string(matrix.size()) + " but k = " + std::to_string(k));
  }
  std::vector<Complex> blocks;
  blocks.reserve(g.edge_count() * k * k);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) blocks.push_back(matrix(i, j));
    }
  }
  return EdgeWeights::from_blocks(g.edge_count(), k, std::move(blocks));
}

EdgeWeights all_ones(const Graph& g, int k) {
  if (k < 1) throw InputError("weights: k must be >= 1");
  return EdgeWeights::from_blocks(g.edge_count(), k,
                                  std::vector<Complex>(g.edge_count() * k * k, Complex(1.0)));
}

double deviation(const EdgeWeights& w) {
  double worst = 0.0;
  for (const Complex& z : w.values()) worst = std::max(worst, std::abs(z - 1.0));
  return worst;
}

bool in_polydisc(const EdgeWeights& w, double delta) { return deviation(w) <= delta; }

EdgeWeights interpolate(const EdgeWeights& w, Complex t) {
  std::vector<Complex> values(w.values().begin(), w.values().end());
  for (Complex& z : values) z = 1.0 + t * (z - 1.0);
  return EdgeWeights::from_blocks(w.edge_count(), w.k(), std::move(values));
}

}  // namespace pfgm
