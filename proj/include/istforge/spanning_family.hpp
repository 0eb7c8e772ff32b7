#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "istforge/graph.hpp"
#include "istforge/niceness.hpp"
#include "istforge/tree_collection.hpp"

namespace istforge {

/// k spanning trees of the host graph given as parent arrays; parents[i][root] == kNoVertex.
struct SpanningTreeFamily {
  Vertex root = kNoVertex;
  std::vector<std::vector<Vertex>> parents;

  std::size_t size() const noexcept { return parents.size(); }

  friend bool operator==(const SpanningTreeFamily&, const SpanningTreeFamily&) = default;
};

/// Grows each S_i into a spanning tree T_i. First every vertex of N(S_i) is
/// hung as a leaf from its smallest-id neighbour in S_i; then every v with
/// i in I(v) is hung from its connector u_i, which the first step already
/// attached. Throws IntegrityError when the witness does not fit the graph.
SpanningTreeFamily assemble(const Graph& g, const TreeCollection& tc, const NicenessWitness& w);

enum class VerifyProblem { None, Shape, NonEdge, NotSpanning, SharedVertex };

struct VerifyReport {
  bool ok = true;
  VerifyProblem problem = VerifyProblem::None;
  Vertex vertex = kNoVertex;       // offending vertex
  std::uint32_t tree_a = 0;        // for SharedVertex: tree_a < tree_b
  std::uint32_t tree_b = 0;
  Vertex shared = kNoVertex;       // internal vertex on both r-v paths
  std::string message;
};

/// Checks that every parent edge exists, that every array is a spanning tree
/// rooted at the family root, and that for every v the r-v paths are
/// internally disjoint. Reports the counterexample with the smallest v.
///
/// verify_independent spreads vertices over OpenMP threads;
/// verify_independent_serial is the single-threaded reference.
VerifyReport verify_independent(const Graph& g, const SpanningTreeFamily& fam);
VerifyReport verify_independent_serial(const Graph& g, const SpanningTreeFamily& fam);

/// Vertices of the tree path from v up to the root, v first and root last.
std::vector<Vertex> path_to_root(const SpanningTreeFamily& fam, std::size_t tree, Vertex v);

std::string to_string(VerifyProblem p);

}  // namespace istforge
