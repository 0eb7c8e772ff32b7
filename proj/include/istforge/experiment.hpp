#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "istforge/build_result.hpp"
#include "istforge/graph.hpp"
#include "istforge/partition.hpp"
#include "istforge/rng.hpp"
#include "istforge/sparse_builder.hpp"

namespace istforge {

enum class Algo { Dense, Sparse, Pseudo, Auto };
enum class Model { Gnp, Regular, File };
enum class KPolicy { Delta, Fixed, OneMinusEps };

std::string to_string(Algo a);
Algo parse_algo(const std::string& s);  // throws ParameterError

/// pseudo when the graph is regular with d / lambda >= 4; dense when the
/// density is at least min(log^2 n / sqrt n, 0.05); sparse otherwise.
Algo choose_algo(const Graph& g);

/// Runs one builder. k is the number of trees; the caller resolves the policy.
BuildResult run_builder(const Graph& g, Vertex r, Algo algo, std::size_t k, const SparseParams& sparse,
                        const PseudoParams& pseudo, Rng& rng);

/// Tree count for a root under a policy.
std::size_t resolve_k(const Graph& g, Vertex r, KPolicy policy, std::size_t fixed, double epsilon);

SparseParams sparse_params_from_json(const std::string& text);
PseudoParams pseudo_params_from_json(const std::string& text);

struct ExperimentConfig {
  Model model = Model::Gnp;
  std::vector<std::size_t> n;
  std::vector<double> p;            // gnp grid
  std::vector<std::size_t> d;       // regular grid
  std::string file;                 // file model input
  std::size_t roots_per_graph = 1;
  std::size_t seeds_per_cell = 1;
  std::uint64_t seed = 1;
  Algo algo = Algo::Auto;
  KPolicy k_policy = KPolicy::Delta;
  std::size_t k_fixed = 0;
  SparseParams sparse;
  PseudoParams pseudo;
  std::string output;
  int workers = 0;     // 0: OpenMP default
  bool timing = true;  // false writes elapsed_ms = 0 so the CSV is byte-reproducible
};

/// The default global seed: IST_FORGE_SEED when set and numeric, else 1.
std::uint64_t default_seed();

/// Parses and validates a JSON config. Throws ParameterError on any problem,
/// before any work is done.
ExperimentConfig parse_experiment_config(const std::string& text);
void validate_config(const ExperimentConfig& c);

struct ExperimentRecord {
  std::size_t run_id = 0;
  std::string algo;
  std::size_t n = 0;
  double p_or_d = 0;
  std::uint64_t seed = 0;
  Vertex root = 0;
  std::size_t k_target = 0;
  bool built = false;
  bool verified = false;
  FailStage fail_stage = FailStage::None;
  double elapsed_ms = 0;
  std::size_t delta_g = 0;
  std::size_t kappa_lower_bound_certified = 0;
};

/// Frozen column order for downstream tooling.
inline constexpr const char* kCsvHeader =
    "run_id,algo,n,p_or_d,seed,root,k_target,built,verified,fail_stage,elapsed_ms,delta_G,"
    "kappa_lower_bound_certified";

/// One CSV line without the newline. Throws InvariantError when the record
/// breaks verified => built or fail_stage <=> !built.
std::string to_csv_row(const ExperimentRecord& r);

/// A record plus what only in-process callers see.
struct TrialOutcome {
  ExperimentRecord record;
  bool certificate_ok = true;  // failure certificate re-validated (true for successes)
  std::string message;
};

/// Number of graphs the config describes (cells x seeds).
std::size_t graph_count(const ExperimentConfig& c);

/// Generates graph `index` (cell-major, then seed) and runs every root on it.
/// run_ids start at index * roots_per_graph.
std::vector<TrialOutcome> run_graph(const ExperimentConfig& c, std::size_t index);

/// Runs every graph, in parallel over graphs, and writes the CSV to `out` in
/// run_id order. Rows of finished graphs are written as soon as every earlier
/// graph is done. SIGINT stops new graphs from starting; finished rows are
/// still written.
std::vector<TrialOutcome> run_experiment(const ExperimentConfig& c, std::ostream& out);

}  // namespace istforge
