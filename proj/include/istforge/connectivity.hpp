#pragma once

#include <cstddef>

#include "istforge/graph.hpp"

namespace istforge {

/// Graphs above this size are accepted but the check becomes slow; the CLI warns.
inline constexpr std::size_t kConnectivityComfortLimit = 2000;

/// Number of internally vertex-disjoint s-t paths, counted up to `cap`
/// (unit vertex capacities via vertex splitting, one BFS per augmentation).
/// s and t must be distinct and non-adjacent.
std::size_t local_vertex_connectivity(const Graph& g, Vertex s, Vertex t, std::size_t cap);

/// True iff n > k and no set of fewer than k vertices disconnects g.
/// Uses Even's reduction: with v_1..v_k the first k vertices, it is enough to
/// check every non-adjacent pair (v_i, v_j) with i <= k and j > i. Pairs are
/// spread across OpenMP threads. Requires k >= 1.
bool is_k_connected(const Graph& g, std::size_t k);

bool is_connected(const Graph& g);

}  // namespace istforge
