#pragma once

#include <cstddef>

#include "istforge/build_result.hpp"
#include "istforge/graph.hpp"

namespace istforge {

/// Depth-one trees S_i = {r, v_i} over the first k neighbours of r, certified
/// nice vertex by vertex. k = 0 succeeds vacuously. Throws ParameterError
/// when k exceeds d(r) or r is out of range.
///
/// Vertices with |K \ N(v)| > |N(v) \ K| cannot be served by any matching;
/// they are listed in the diagnostics before certification runs.
BuildResult build_dense(const Graph& g, Vertex r, std::size_t k);

}  // namespace istforge
