#pragma once

#include <cstddef>
#include <optional>

#include "istforge/build_result.hpp"
#include "istforge/graph.hpp"
#include "istforge/partition.hpp"
#include "istforge/rng.hpp"

namespace istforge {

/// ceil((1 - epsilon) d), guarded against floating-point noise at integers.
std::size_t pseudo_tree_count(double epsilon, std::size_t d);

/// Overrides that make the pipeline run at desk scale (n in the thousands,
/// d around 50): S_i probability 0.005, reservoir probability 0.4, S_i cap
/// 100, reservoir degree 1, radius-0 resampling for 30 rounds, splice budget
/// 200, certification of the final trees, no spectrum.
PseudoParams desk_pseudo_params(double epsilon);

/// Pipeline for spectral expanders: L = first k neighbours of r, sample the
/// U / R / S_i partition, route one path per branch through the reservoir,
/// and take T_i = r - v_i plus P_i. Connectors come from the partition (they
/// lie in U, which no tree touches); they are re-checked against the final
/// trees before returning.
///
/// k defaults to pseudo_tree_count(epsilon, d(r)). Throws ParameterError when
/// k > d(r). Non-regular input is attempted with a diagnostic.
BuildResult build_pseudorandom(const Graph& g, Vertex r, const PseudoParams& params, Rng& rng,
                               std::optional<std::size_t> k = std::nullopt);

}  // namespace istforge
