#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "istforge/graph.hpp"
#include "istforge/niceness.hpp"
#include "istforge/rng.hpp"

namespace istforge {

/// Tunables of the pseudorandom pipeline. `epsilon` is the user-facing slack:
/// k = ceil((1 - epsilon) d) trees are built, and the internal parameter
/// epsilon' = epsilon / 10 drives every default below. Unset optionals take
/// the asymptotic defaults, which are infeasible at small d (the S_i cap
/// drops below one); experiments at desk scale override them.
struct PseudoParams {
  double epsilon = 0.1;
  std::optional<double> branch_probability;     // per-class S_i probability; default eps'^11 / (d log d)
  std::optional<double> reservoir_probability;  // default eps' / 100
  std::optional<double> branch_cap;             // max |S_i|; default eps'^10 n / (d log d)
  std::optional<double> reservoir_degree;       // min |N_R(v)|; default eps'^3 d
  std::size_t max_resample_rounds = 0;          // 0 means 50 n
  std::optional<std::size_t> growth_budget;     // per-splice tree size; default ceil(s / (3c)), s = eps' n / 4
  int growth_retries = 2;                       // budget doublings before a splice gives up
  int resample_radius = 2;                      // ball resampled around a bad vertex
  bool restrict_candidates = false;             // keep only connectors with >= eps' d neighbours away from v
  bool record_spectrum = true;                  // spectral profile in the build diagnostics
  bool certify_final = false;                   // on an unfinished partition, connect anyway and certify the final trees

  double internal_epsilon() const noexcept { return epsilon / 10.0; }
};

/// Concrete probabilities and thresholds after defaults are applied.
struct PartitionPlan {
  double branch_probability = 0;
  double reservoir_probability = 0;
  double branch_cap = 0;
  double reservoir_degree = 0;
  std::size_t max_rounds = 0;
};

PartitionPlan plan_partition(const PseudoParams& params, std::size_t n, double d);

inline constexpr std::uint32_t kClassU = UINT32_MAX;
inline constexpr std::uint32_t kClassR = UINT32_MAX - 1;
inline constexpr std::uint32_t kClassRoot = UINT32_MAX - 2;
inline constexpr std::uint32_t kClassBranchRoot = UINT32_MAX - 3;  // member of L

/// For each vertex, the class it belongs to: kClassU, kClassR, kClassRoot,
/// kClassBranchRoot, or a branch index i < k for S_i. `connectors` is the
/// first-invariant witness: per vertex, (i, u_i) with u_i in N_U(v) adjacent to S_i.
struct Partition {
  Vertex root = kNoVertex;
  std::vector<Vertex> branch_roots;  // L = {v_1..v_k}
  std::vector<std::uint32_t> cls;
  std::vector<std::vector<Connector>> connectors;
  std::size_t rounds = 0;  // resampling rounds used

  std::size_t k() const noexcept { return branch_roots.size(); }
  std::vector<Vertex> members(std::uint32_t c) const;
};

/// Bad events that survived the round budget, with the last assignment tried
/// (its connector lists are empty at the bad vertices).
struct PartitionFailure {
  std::size_t rounds = 0;
  std::vector<Vertex> bad_vertices;        // first or second invariant fails
  std::vector<std::uint32_t> oversized;    // |S_i| above the cap
  std::string reason;
  Partition last;
};

/// I(v) as used by the partition: branch indices i with v outside S_i + v_i
/// and not adjacent to it. Empty for the root and its neighbours, which every
/// tree reaches directly. A connector for i may attach to S_i or to v_i.
std::vector<std::uint32_t> partition_index_set(const Graph& g, const Partition& part, Vertex v);

/// Random class assignment of V minus ({r} and L), then parallel Moser-Tardos
/// repair. Each round takes the bad events in random order, keeps those whose
/// resample balls (radius `resample_radius` around a vertex whose connector
/// matching or reservoir degree fails) are pairwise disjoint, and redraws the
/// kept balls; an oversized S_i has all its members redrawn. Stops when every
/// invariant holds or the round budget is spent.
///
/// The per-vertex checks between rounds are spread over OpenMP threads.
std::variant<Partition, PartitionFailure> sample_partition(const Graph& g, Vertex root,
                                                           const std::vector<Vertex>& branch_roots,
                                                           const PseudoParams& params, Rng& rng);

/// Independent validator of all partition invariants against `plan`.
std::optional<std::string> check_partition(const Graph& g, const Partition& part, const PartitionPlan& plan);

}  // namespace istforge
