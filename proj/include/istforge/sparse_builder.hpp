#pragma once

#include <cstddef>
#include <optional>

#include "istforge/build_result.hpp"
#include "istforge/graph.hpp"

namespace istforge {

struct SparseParams {
  double low_degree_factor = 0.8;
  bool low_degree_variance = false;  // use np(1-p) under the root in the low-degree threshold
  double path_len_factor = 5.0;      // c_l in l = ceil(c_l log n / (n p^2))
  double path_len_cap_divisor = 10.0; // l <= n / (divisor * k)
  std::optional<double> p_estimate;  // default 2m / (n(n-1))
};

/// The path length the builder will use: max(1, min(ceil(c_l log n / (n p^2)), floor(n / (divisor k)))).
std::size_t sparse_path_length(std::size_t n, double p, std::size_t k, const SparseParams& params);

/// Sparse-regime construction:
///   S  = vertices below the low-degree threshold,
///   Q  = first k neighbours of r outside S and N(S) (any neighbours as fallback),
///   grow k disjoint paths of the chosen length from Q avoiding S, N(S) and r,
///   trees = r - r_i - path, then certify niceness.
/// Throws ParameterError when k > d(r), r is out of range, or a parameter is
/// not positive. k = 0 succeeds vacuously.
BuildResult build_sparse(const Graph& g, Vertex r, std::size_t k, const SparseParams& params = {});

}  // namespace istforge
