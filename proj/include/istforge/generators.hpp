#pragma once

#include <cstddef>

#include "istforge/bipartite.hpp"
#include "istforge/graph.hpp"
#include "istforge/rng.hpp"

namespace istforge {

/// Binomial random graph G(n, p) by geometric skipping over the C(n,2) pairs,
/// so the running time is proportional to n + m rather than n^2.
Graph gen_gnp(std::size_t n, double p, Rng& rng);

/// Binomial random bipartite graph over the a*b left/right pairs.
BipartiteGraph gen_bipartite_gnp(std::size_t a, std::size_t b, double p, Rng& rng);

inline constexpr int kRegularAttemptCap = 200;

/// Simple d-regular graph from the pairing model. Stubs are paired one pair at
/// a time; a pair that would create a loop or a repeated edge is rejected and
/// redrawn, and an attempt that gets stuck (no admissible pair left) is
/// restarted from scratch. Throws ParameterError when n*d is odd or d >= n,
/// GenerationError after kRegularAttemptCap restarts.
Graph gen_random_regular(std::size_t n, std::size_t d, Rng& rng);

}  // namespace istforge
