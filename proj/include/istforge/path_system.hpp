#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "istforge/graph.hpp"
#include "istforge/matching.hpp"

namespace istforge {

/// Vertex-disjoint paths; paths[i] starts at the i-th start vertex and has
/// exactly length + 1 vertices.
struct PathSystem {
  std::vector<std::vector<Vertex>> paths;
  std::size_t length = 0;
};

/// Round `round` (1-based) could not extend every current endpoint. The
/// violator's set holds path indices, its neighbourhood the free vertices
/// those endpoints can reach.
struct GrowthFailure {
  std::size_t round = 0;
  HallViolator violator;
  std::vector<std::vector<Vertex>> partial;  // paths as grown before the failing round
};

/// Grows one path per start vertex by `length` edges. Each round matches the
/// current endpoints into unused, unforbidden vertices with a matching that
/// saturates the endpoints; the union of the round matchings is the path
/// system. Throws ParameterError when starts hit `forbidden`, repeat, or
/// k * (length + 1) exceeds the number of allowed vertices.
std::variant<PathSystem, GrowthFailure> grow_path_system(const Graph& g, std::span<const Vertex> starts,
                                                         std::size_t length, std::span<const Vertex> forbidden);

/// Independent validator: disjointness, adjacency, exact lengths, starts,
/// and avoidance of `forbidden`.
std::optional<std::string> check_path_system(const Graph& g, const PathSystem& ps, std::span<const Vertex> starts,
                                             std::span<const Vertex> forbidden);

/// Re-checks a growth failure against the graph: the named endpoints of the
/// partial paths see fewer free vertices than their number.
bool check_growth_failure(const Graph& g, const GrowthFailure& f, std::span<const Vertex> forbidden);

}  // namespace istforge
