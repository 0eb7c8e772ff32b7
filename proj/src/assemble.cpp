#include "istforge/spanning_family.hpp"

#include <algorithm>
#include <string>

#include "istforge/errors.hpp"

namespace istforge {

SpanningTreeFamily assemble(const Graph& g, const TreeCollection& tc, const NicenessWitness& w) {
  validate_collection(g, tc);
  SpanningTreeFamily fam;
  fam.root = tc.root;
  const std::size_t k = tc.size();
  if (k == 0) return fam;
  if (w.connectors.size() != g.n()) throw IntegrityError("witness vertex count does not match graph");

  const auto n = g.n();
  // Connectors bucketed by tree: (v, u_i) pairs with v ascending.
  std::vector<std::vector<std::pair<Vertex, Vertex>>> hangs(k);
  for (Vertex v = 0; v < n; ++v) {
    for (const auto& c : w.connectors[v]) {
      if (c.tree >= k) throw IntegrityError("connector of " + std::to_string(v) + " names a missing tree");
      hangs[c.tree].emplace_back(v, c.via);
    }
  }

  fam.parents.assign(k, std::vector<Vertex>(n, kNoVertex));
  std::vector<std::string> errors(k);

#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t ii = 0; ii < static_cast<std::int64_t>(k); ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    auto& parent = fam.parents[i];
    const auto& tree = tc.trees[i];
    std::vector<char> member(n, 0);
    for (std::size_t j = 0; j < tree.size(); ++j) {
      member[tree.vertices[j]] = 1;
      parent[tree.vertices[j]] = tree.parents[j];
    }
    std::vector<Vertex> order(tree.vertices);
    std::sort(order.begin(), order.end());
    // Ascending scan: the first member to claim x is its smallest neighbour in S_i.
    for (Vertex y : order) {
      for (Vertex x : g.neighbors(y)) {
        if (!member[x] && parent[x] == kNoVertex) parent[x] = y;
      }
    }
    auto& error = errors[i];
    for (const auto& [v, via] : hangs[i]) {
      if (!g.contains(via) || !g.has_edge(v, via)) {
        error = "connector of " + std::to_string(v) + " is not a neighbour";
      } else if (member[via] || parent[via] == kNoVertex || !member[parent[via]]) {
        error = "connector " + std::to_string(via) + " is not adjacent to tree " + std::to_string(i);
      } else if (member[v] || (parent[v] != kNoVertex && member[parent[v]])) {
        error = "vertex " + std::to_string(v) + " already touches tree " + std::to_string(i);
      } else if (parent[v] != kNoVertex) {
        error = "vertex " + std::to_string(v) + " has two connectors for tree " + std::to_string(i);
      } else {
        parent[v] = via;
        continue;
      }
      break;
    }
    if (error.empty()) {
      for (Vertex v = 0; v < n; ++v) {
        if (v != tc.root && parent[v] == kNoVertex) {
          error = "vertex " + std::to_string(v) + " left unattached in tree " + std::to_string(i);
          break;
        }
      }
    }
  }
  for (const auto& e : errors) {
    if (!e.empty()) throw IntegrityError(e);
  }
  return fam;
}

}  // namespace istforge
