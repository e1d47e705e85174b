#pragma once

#include <vector>

#include "pfgm/graph.hpp"
#include "pfgm/options.hpp"
#include "pfgm/weights.hpp"

namespace pfgm {

/// Prescribed values phi(vertices[j]) = colors[j] (colors are 0-based).
struct RestrictedPrefix {
  std::vector<Vertex> vertices;
  std::vector<int> colors;
};

/// Distinct in-range vertices, in-range colors, |W| == |I| and
/// nu_i(I) <= mu_i for every color.
bool is_admissible(const Graph& g, const MultiplicityVector& m, const RestrictedPrefix& p);

/// Q_{G,m}(B) by enumerating every map with color-class sizes m.
/// Throws CapExceeded when the multinomial count exceeds the enumeration cap
/// and InputError when k or the edge count of w disagree with g and m.
Complex exact_partition(const Graph& g, const MultiplicityVector& m, const EdgeWeights& w,
                        const ComputeOptions& options = {});

/// Q_G(B): the same sum over all k^|V| maps.
Complex exact_partition_unrestricted(const Graph& g, const EdgeWeights& w,
                                     const ComputeOptions& options = {});

/// Q^W_I(B): maps with the multiplicity constraint and phi(v_j) = i_j.
/// Throws InputError for an inadmissible prefix.
Complex exact_restricted(const Graph& g, const MultiplicityVector& m, const EdgeWeights& w,
                         const RestrictedPrefix& prefix, const ComputeOptions& options = {});

/// Coefficients c_0..c_d of g(t) = Q_{G,m}(J + t(B - J)) where d is the
/// number of edges whose block is not all-ones. The polynomial is sampled at
/// the (d+1)-th roots of unity scaled by 1 / deviation(b) and recovered by an
/// inverse discrete Fourier sum; c_0 is set to the multinomial coefficient
/// exactly.
std::vector<Complex> g_polynomial(const Graph& g, const MultiplicityVector& m, const EdgeWeights& b,
                                  const ComputeOptions& options = {});

}  // namespace pfgm
