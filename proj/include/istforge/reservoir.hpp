#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "istforge/graph.hpp"
#include "istforge/partition.hpp"

namespace istforge {

/// No crossing edge was found for set `set_index` within the growth budget.
struct ConnectFailure {
  std::uint32_t set_index = 0;
  std::size_t components = 0;  // pieces of the set's linear forest still apart
  std::size_t budget = 0;      // last per-tree growth budget tried
  std::string reason;
};

/// One path per branch i with S_i and v_i on it and every other vertex in R.
/// Paths are pairwise vertex-disjoint; reservoir vertices used by one set are
/// unavailable to later sets.
///
/// Sets are joined one splice at a time. Starting from the piece holding the
/// smallest member, grow one BFS tree from its endpoints and a second,
/// disjoint one from the endpoints of every other piece, both into unused
/// reservoir vertices. The first edge between the trees gives an
/// endpoint-to-endpoint path; it is kept and everything else grown is
/// released. A splice that finds no edge retries with doubled budget.
std::variant<std::vector<std::vector<Vertex>>, ConnectFailure> connect_through_reservoir(
    const Graph& g, const Partition& part, const PseudoParams& params);

/// Validator: containments S_i + v_i in P_i, P_i within S_i + R + v_i,
/// disjointness, consecutive adjacency.
std::optional<std::string> check_connection(const Graph& g, const Partition& part,
                                            const std::vector<std::vector<Vertex>>& paths);

}  // namespace istforge
