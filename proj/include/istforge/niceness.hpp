#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "istforge/graph.hpp"
#include "istforge/matching.hpp"
#include "istforge/tree_collection.hpp"

namespace istforge {

/// v - via - (some vertex of tree `tree`) is a two-edge path with `via` outside every tree.
struct Connector {
  std::uint32_t tree = 0;
  Vertex via = kNoVertex;

  friend bool operator==(const Connector&, const Connector&) = default;
};

/// For every vertex v, one connector per index in I(v), sorted by tree index.
struct NicenessWitness {
  std::vector<std::vector<Connector>> connectors;

  friend bool operator==(const NicenessWitness&, const NicenessWitness&) = default;
};

/// The smallest vertex whose connector problem has no solution, with the Hall
/// violator on the tree side: violator.set are tree indices from I(vertex),
/// violator.neighborhood the candidate connectors (graph ids) adjacent to them.
struct NicenessFailure {
  Vertex vertex = kNoVertex;
  HallViolator violator;
};

using CertifyResult = std::variant<NicenessWitness, NicenessFailure>;

/// Decides niceness vertex by vertex. For each v the candidates are
/// N(v) minus all tree vertices; tree i and candidate u are joined when u has
/// a neighbour in S_i. A matching saturating I(v) gives the connectors.
///
/// The OpenMP kernel partitions vertices across threads; certify_nice_serial
/// is the reference it is tested against. Both report the smallest failing
/// vertex. Throws InvariantError for a malformed collection.
CertifyResult certify_nice(const Graph& g, const TreeCollection& tc);
CertifyResult certify_nice_serial(const Graph& g, const TreeCollection& tc);

/// Independent re-check of a witness: exactly I(v) is covered for every v,
/// connectors are distinct per v, outside all trees, adjacent to v and to
/// their tree. Returns a description of the first problem, if any.
std::optional<std::string> check_witness(const Graph& g, const TreeCollection& tc, const NicenessWitness& w);

/// Re-checks a failure certificate against the graph from scratch.
bool check_niceness_failure(const Graph& g, const TreeCollection& tc, const NicenessFailure& f);

}  // namespace istforge
