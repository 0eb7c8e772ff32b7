#include "istforge/sparse_builder.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "istforge/errors.hpp"
#include "istforge/path_system.hpp"

namespace istforge {

std::size_t sparse_path_length(std::size_t n, double p, std::size_t k, const SparseParams& params) {
  if (n < 2 || p <= 0.0) return 1;
  const double nd = static_cast<double>(n);
  const double raw = std::ceil(params.path_len_factor * std::log(nd) / (nd * p * p));
  double len = raw;
  if (k > 0) len = std::min(len, std::floor(nd / (params.path_len_cap_divisor * static_cast<double>(k))));
  return len < 1.0 ? 1 : static_cast<std::size_t>(len);
}

BuildResult build_sparse(const Graph& g, Vertex r, std::size_t k, const SparseParams& params) {
  if (!g.contains(r)) throw ParameterError("root " + std::to_string(r) + " out of range");
  if (k > g.degree(r)) {
    throw ParameterError("k = " + std::to_string(k) + " exceeds d(root) = " + std::to_string(g.degree(r)));
  }
  if (!(params.low_degree_factor > 0) || !(params.path_len_factor > 0) || !(params.path_len_cap_divisor > 0)) {
    throw ParameterError("sparse parameters must be positive");
  }
  if (params.p_estimate && !(*params.p_estimate > 0 && *params.p_estimate <= 1)) {
    throw ParameterError("p estimate must lie in (0, 1]");
  }

  const std::size_t n = g.n();
  const double p = params.p_estimate.value_or(edge_density(g));
  std::vector<std::string> notes;

  std::vector<Vertex> low;
  if (n >= 2 && p > 0) {
    low = low_degree_set(g, low_degree_threshold(n, p, params.low_degree_factor, params.low_degree_variance));
  }
  std::vector<char> near_low(n, 0);  // S and N(S)
  for (Vertex s : low) {
    near_low[s] = 1;
    for (Vertex u : g.neighbors(s)) near_low[u] = 1;
  }
  if (!low.empty()) notes.push_back("low-degree set size " + std::to_string(low.size()));

  std::vector<Vertex> q;
  q.reserve(k);
  const auto rn = g.neighbors(r);
  if (near_low[r] && std::binary_search(low.begin(), low.end(), r)) {
    q.assign(rn.begin(), rn.begin() + static_cast<std::ptrdiff_t>(k));
    notes.push_back("root is low-degree; using its first k neighbours");
  } else {
    for (Vertex u : rn) {
      if (q.size() == k) break;
      if (!near_low[u]) q.push_back(u);
    }
    if (q.size() < k) {
      const std::size_t clean = q.size();
      for (Vertex u : rn) {
        if (q.size() == k) break;
        if (near_low[u]) q.push_back(u);
      }
      std::sort(q.begin(), q.end());
      notes.push_back("only " + std::to_string(clean) + " root neighbours avoid S and N(S); filled " +
                      std::to_string(k - clean) + " from the rest");
    }
  }

  std::vector<char> in_q(n, 0);
  for (Vertex u : q) in_q[u] = 1;
  std::vector<Vertex> forbidden;
  for (Vertex v = 0; v < n; ++v) {
    if ((near_low[v] || v == r) && !in_q[v]) forbidden.push_back(v);
  }

  const std::size_t len = sparse_path_length(n, p, k, params);
  notes.push_back("path length " + std::to_string(len));
  if (k * (len + 1) > n - forbidden.size()) {
    BuildFailure fail;
    fail.stage = FailStage::QSelection;
    fail.message = "not enough allowed vertices for " + std::to_string(k) + " paths of length " + std::to_string(len);
    fail.diagnostics = std::move(notes);
    return fail;
  }

  auto grown = grow_path_system(g, q, len, forbidden);
  if (auto* gf = std::get_if<GrowthFailure>(&grown)) {
    BuildFailure fail;
    fail.stage = FailStage::PathGrowth;
    fail.message = "path growth stalled in round " + std::to_string(gf->round);
    fail.certificate = std::move(*gf);
    fail.diagnostics = std::move(notes);
    fail.forbidden = std::move(forbidden);
    return fail;
  }
  auto& ps = std::get<PathSystem>(grown);

  TreeCollection tc;
  tc.root = r;
  tc.trees.reserve(k);
  for (const auto& path : ps.paths) tc.trees.push_back(path_tree(r, path));

  auto cert = certify_nice(g, tc);
  if (auto* w = std::get_if<NicenessWitness>(&cert)) {
    return BuildSuccess{std::move(tc), std::move(*w), std::move(notes)};
  }
  auto& f = std::get<NicenessFailure>(cert);
  BuildFailure fail;
  fail.stage = FailStage::Niceness;
  fail.message = "no connector matching at vertex " + std::to_string(f.vertex);
  fail.certificate = std::move(f);
  fail.diagnostics = std::move(notes);
  fail.trees = std::move(tc);
  return fail;
}

}  // namespace istforge
