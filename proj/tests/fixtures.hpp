#pragma once

#include <algorithm>
#include <vector>

#include "istforge/graph.hpp"
#include "istforge/rng.hpp"
#include "istforge/spanning_family.hpp"
#include "istforge/tree_collection.hpp"

namespace fixture {

using istforge::Graph;
using istforge::Rng;
using istforge::Vertex;

// Random collection rooted at r: up to k trees, each seeded at a distinct
// neighbour of r and grown by up to `extra` random attachments that avoid
// every other tree.
inline istforge::TreeCollection random_collection(const Graph& g, Vertex r, std::size_t k, std::size_t extra,
                                                  Rng& rng) {
  istforge::TreeCollection tc;
  tc.root = r;
  const auto nr = g.neighbors(r);
  std::vector<Vertex> seeds(nr.begin(), nr.end());
  rng.shuffle(seeds);
  seeds.resize(std::min(k, seeds.size()));
  std::vector<char> used(g.n(), 0);
  used[r] = 1;
  for (Vertex s : seeds) used[s] = 1;
  for (Vertex s : seeds) {
    istforge::RootedTree t;
    t.vertices = {r, s};
    t.parents = {istforge::kNoVertex, r};
    const std::size_t grow = rng.below(extra + 1);
    for (std::size_t step = 0; step < grow; ++step) {
      std::vector<std::pair<Vertex, Vertex>> frontier;
      for (std::size_t j = 1; j < t.vertices.size(); ++j) {
        for (Vertex u : g.neighbors(t.vertices[j])) {
          if (!used[u]) frontier.emplace_back(u, t.vertices[j]);
        }
      }
      if (frontier.empty()) break;
      const auto [u, p] = frontier[rng.below(frontier.size())];
      used[u] = 1;
      t.vertices.push_back(u);
      t.parents.push_back(p);
    }
    tc.trees.push_back(std::move(t));
  }
  return tc;
}

// k spanning trees grown by randomized search from r; usually not independent.
inline istforge::SpanningTreeFamily random_spanning_family(const Graph& g, Vertex r, std::size_t k, Rng& rng) {
  istforge::SpanningTreeFamily fam;
  fam.root = r;
  for (std::size_t t = 0; t < k; ++t) {
    std::vector<Vertex> parent(g.n(), istforge::kNoVertex);
    std::vector<char> seen(g.n(), 0);
    std::vector<Vertex> pool{r};
    seen[r] = 1;
    while (!pool.empty()) {
      const std::size_t pick = rng.below(pool.size());
      const Vertex v = pool[pick];
      pool[pick] = pool.back();
      pool.pop_back();
      for (Vertex u : g.neighbors(v)) {
        if (seen[u]) continue;
        seen[u] = 1;
        parent[u] = v;
        pool.push_back(u);
      }
    }
    fam.parents.push_back(std::move(parent));
  }
  return fam;
}

}  // namespace fixture
