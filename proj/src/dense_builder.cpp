#include "istforge/dense_builder.hpp"

#include <algorithm>
#include <string>

#include "istforge/errors.hpp"

namespace istforge {

namespace {

// |K \ N(v)| > |N(v) \ K| for some v outside K and the root.
std::vector<std::string> deficient_vertices(const Graph& g, Vertex r, std::span<const Vertex> branch) {
  std::vector<std::string> notes;
  std::vector<char> in_branch(g.n(), 0);
  for (Vertex b : branch) in_branch[b] = 1;
  std::size_t count = 0;
  Vertex first = kNoVertex;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (v == r || in_branch[v]) continue;
    std::size_t inside = 0;
    for (Vertex u : g.neighbors(v)) inside += in_branch[u];
    const std::size_t missing = branch.size() - inside;
    const std::size_t outside = g.degree(v) - inside;
    if (missing > outside) {
      if (first == kNoVertex) first = v;
      ++count;
    }
  }
  if (count > 0) {
    notes.push_back(std::to_string(count) + " vertices with |K\\N(v)| > |N(v)\\K|, first " + std::to_string(first));
  }
  return notes;
}

}  // namespace

BuildResult build_dense(const Graph& g, Vertex r, std::size_t k) {
  if (!g.contains(r)) throw ParameterError("root " + std::to_string(r) + " out of range");
  if (k > g.degree(r)) {
    throw ParameterError("k = " + std::to_string(k) + " exceeds d(root) = " + std::to_string(g.degree(r)));
  }
  const auto nbrs = g.neighbors(r);
  const auto branch = nbrs.first(k);

  TreeCollection tc;
  tc.root = r;
  tc.trees.reserve(k);
  for (Vertex b : branch) tc.trees.push_back(path_tree(r, std::span<const Vertex>(&b, 1)));

  auto notes = deficient_vertices(g, r, branch);
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
