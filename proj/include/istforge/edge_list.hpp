#pragma once

#include <iosfwd>
#include <string>

#include "istforge/graph.hpp"

namespace istforge {

// Edge-list format: first line "n m", then m lines "u v" with u < v, single
// spaces, ascending lexicographic order, each line newline-terminated.

void write_edge_list(const Graph& g, std::ostream& out);
void write_edge_list(const Graph& g, const std::string& path);

/// Throws ParseError (with the 1-based line number) on malformed lines,
/// out-of-range ids, self-loops, duplicate edges or a wrong edge count.
Graph read_edge_list(std::istream& in);
Graph read_edge_list(const std::string& path);

}  // namespace istforge
