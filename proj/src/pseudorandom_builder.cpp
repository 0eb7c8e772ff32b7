#include "istforge/pseudorandom_builder.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "istforge/errors.hpp"
#include "istforge/reservoir.hpp"
#include "istforge/spectral.hpp"

namespace istforge {

std::size_t pseudo_tree_count(double epsilon, std::size_t d) {
  const double x = (1.0 - epsilon) * static_cast<double>(d);
  const double k = std::ceil(x - 1e-9);
  return k <= 0 ? 0 : static_cast<std::size_t>(k);
}

namespace {

// r - v_i - (path on both sides of v_i).
RootedTree tree_through(Vertex root, Vertex branch, const std::vector<Vertex>& path) {
  RootedTree t;
  t.vertices = {root, branch};
  t.parents = {kNoVertex, root};
  const auto pos = static_cast<std::size_t>(std::find(path.begin(), path.end(), branch) - path.begin());
  for (std::size_t j = pos + 1; j < path.size(); ++j) {
    t.vertices.push_back(path[j]);
    t.parents.push_back(path[j - 1]);
  }
  for (std::size_t j = pos; j-- > 0;) {
    t.vertices.push_back(path[j]);
    t.parents.push_back(path[j + 1]);
  }
  return t;
}

BuildFailure failure(FailStage stage, std::string message, std::vector<std::string> notes) {
  BuildFailure f;
  f.stage = stage;
  f.message = std::move(message);
  f.diagnostics = std::move(notes);
  return f;
}

}  // namespace

PseudoParams desk_pseudo_params(double epsilon) {
  PseudoParams p;
  p.epsilon = epsilon;
  p.branch_probability = 0.005;
  p.reservoir_probability = 0.4;
  p.branch_cap = 100;
  p.reservoir_degree = 1;
  p.resample_radius = 0;
  p.max_resample_rounds = 30;
  p.growth_budget = 200;
  p.certify_final = true;
  p.record_spectrum = false;
  return p;
}

BuildResult build_pseudorandom(const Graph& g, Vertex r, const PseudoParams& params, Rng& rng,
                               std::optional<std::size_t> k_override) {
  if (!g.contains(r)) throw ParameterError("root " + std::to_string(r) + " out of range");
  if (!(params.epsilon > 0 && params.epsilon < 1)) throw ParameterError("epsilon must lie in (0, 1)");
  const std::size_t k = k_override.value_or(pseudo_tree_count(params.epsilon, g.degree(r)));
  if (k > g.degree(r)) {
    throw ParameterError("k = " + std::to_string(k) + " exceeds d(root) = " + std::to_string(g.degree(r)));
  }

  std::vector<std::string> notes;
  if (!is_regular(g)) notes.push_back("graph is not regular");
  if (params.record_spectrum && g.n() > 0) {
    const auto prof = spectral_profile(g);
    std::ostringstream os;
    os << "spectrum: d " << prof.d << " lambda " << prof.lambda << " d/lambda " << prof.ratio;
    notes.push_back(os.str());
    for (const auto& w : prof.warnings) notes.push_back(w);
  }

  const auto nbrs = g.neighbors(r);
  std::vector<Vertex> branch(nbrs.begin(), nbrs.begin() + static_cast<std::ptrdiff_t>(k));
  const double d = g.n() ? 2.0 * static_cast<double>(g.m()) / static_cast<double>(g.n()) : 0.0;
  const auto plan = plan_partition(params, g.n(), d);

  auto sampled = sample_partition(g, r, branch, params, rng);
  bool partition_complete = true;
  Partition part;
  if (auto* pf = std::get_if<PartitionFailure>(&sampled)) {
    const bool usable = params.certify_final && pf->oversized.empty() && pf->last.cls.size() == g.n();
    if (!usable) {
      auto f = failure(FailStage::Partition, pf->reason, std::move(notes));
      f.certificate = std::move(*pf);
      return f;
    }
    notes.push_back(std::to_string(pf->bad_vertices.size()) + " partition events unresolved; certifying final trees");
    part = std::move(pf->last);
    partition_complete = false;
  } else {
    part = std::move(std::get<Partition>(sampled));
    notes.push_back("partition after " + std::to_string(part.rounds) + " resampling rounds");
    if (auto err = check_partition(g, part, plan)) {
      return failure(FailStage::Other, "partition validator: " + *err, std::move(notes));
    }
  }

  auto connected = connect_through_reservoir(g, part, params);
  if (auto* cf = std::get_if<ConnectFailure>(&connected)) {
    auto f = failure(FailStage::Connection, cf->reason, std::move(notes));
    f.certificate = std::move(*cf);
    return f;
  }
  auto& paths = std::get<std::vector<std::vector<Vertex>>>(connected);
  if (auto err = check_connection(g, part, paths)) {
    return failure(FailStage::Other, "connection validator: " + *err, std::move(notes));
  }

  TreeCollection tc;
  tc.root = r;
  tc.trees.reserve(k);
  for (std::size_t i = 0; i < k; ++i) tc.trees.push_back(tree_through(r, branch[i], paths[i]));

  if (!partition_complete) {
    auto cert = certify_nice(g, tc);
    if (auto* w = std::get_if<NicenessWitness>(&cert)) return BuildSuccess{std::move(tc), std::move(*w), std::move(notes)};
    auto& nf = std::get<NicenessFailure>(cert);
    auto f = failure(FailStage::Niceness, "no connector matching at vertex " + std::to_string(nf.vertex), std::move(notes));
    f.certificate = std::move(nf);
    f.trees = std::move(tc);
    return f;
  }

  // The final trees only grow S_i + v_i, so I(v) shrinks and the partition's
  // connectors for the surviving indices stay valid.
  const CoverageIndex cov(g, tc);
  NicenessWitness w;
  w.connectors.resize(g.n());
  for (Vertex v = 0; v < g.n(); ++v) {
    const auto idx = index_set(cov, v);
    const auto& have = part.connectors[v];
    std::size_t j = 0;
    for (auto i : idx) {
      while (j < have.size() && have[j].tree < i) ++j;
      if (j < have.size() && have[j].tree == i) w.connectors[v].push_back(have[j]);
    }
  }
  if (auto err = check_witness(g, tc, w)) {
    return failure(FailStage::Other, "partition connectors do not fit the final trees: " + *err, std::move(notes));
  }
  return BuildSuccess{std::move(tc), std::move(w), std::move(notes)};
}

}  // namespace istforge
