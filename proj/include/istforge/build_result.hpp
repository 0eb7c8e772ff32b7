#pragma once

#include <string>
#include <variant>
#include <vector>

#include "istforge/niceness.hpp"
#include "istforge/partition.hpp"
#include "istforge/path_system.hpp"
#include "istforge/reservoir.hpp"
#include "istforge/tree_collection.hpp"

namespace istforge {

enum class FailStage { None, QSelection, PathGrowth, Niceness, Partition, Connection, Other };

/// "", "Q-selection", "path-growth", "niceness", "partition", "connection", "other".
std::string to_string(FailStage s);

/// A nice collection together with its witness; feed both to assemble().
struct BuildSuccess {
  TreeCollection trees;
  NicenessWitness witness;
  std::vector<std::string> diagnostics;
};

/// Failure with the certificate from the stage that failed. `trees` holds the
/// collection a niceness certificate refers to; `forbidden` the vertex set a
/// growth certificate was computed against.
struct BuildFailure {
  FailStage stage = FailStage::Other;
  std::string message;
  std::variant<std::monostate, NicenessFailure, GrowthFailure, PartitionFailure, ConnectFailure> certificate;
  std::vector<std::string> diagnostics;
  TreeCollection trees;
  std::vector<Vertex> forbidden;
};

/// Re-checks the certificate of a failure against the graph. Failures of
/// stages that carry no certificate (Q-selection, other) pass when the message
/// is nonempty.
bool check_failure(const Graph& g, const BuildFailure& f);

using BuildResult = std::variant<BuildSuccess, BuildFailure>;

}  // namespace istforge
