#pragma once

// Brute-force reference implementations. They share no code with the library
// beyond the Graph container and are only usable on tiny inputs.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "istforge/graph.hpp"
#include "istforge/spanning_family.hpp"
#include "istforge/tree_collection.hpp"

namespace oracle {

using istforge::Graph;
using istforge::Vertex;
using Pairs = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

// Maximum matching by DP over subsets of the right side (b <= ~16).
inline std::size_t max_matching(std::size_t a, std::size_t b, const Pairs& edges) {
  std::vector<std::vector<std::uint32_t>> adj(a);
  for (auto [l, r] : edges) adj[l].push_back(r);
  std::vector<int> best(std::size_t{1} << b, -1);
  best[0] = 0;
  for (std::size_t l = 0; l < a; ++l) {
    std::vector<int> next = best;
    for (std::size_t mask = 0; mask < best.size(); ++mask) {
      if (best[mask] < 0) continue;
      for (auto r : adj[l]) {
        if (mask >> r & 1) continue;
        auto& slot = next[mask | (std::size_t{1} << r)];
        slot = std::max(slot, best[mask] + 1);
      }
    }
    best.swap(next);
  }
  return static_cast<std::size_t>(*std::max_element(best.begin(), best.end()));
}

// Minimum vertex cover by enumerating all subsets of both sides.
inline std::size_t min_vertex_cover(std::size_t a, std::size_t b, const Pairs& edges) {
  const std::size_t total = a + b;
  std::size_t best = total;
  for (std::size_t mask = 0; mask < (std::size_t{1} << total); ++mask) {
    bool covers = true;
    for (auto [l, r] : edges) {
      if (!(mask >> l & 1) && !(mask >> (a + r) & 1)) {
        covers = false;
        break;
      }
    }
    if (covers) best = std::min<std::size_t>(best, static_cast<std::size_t>(__builtin_popcountll(mask)));
  }
  return best;
}

// Vertex connectivity test: no set of fewer than k vertices disconnects g,
// and n > k.
inline bool k_connected(const Graph& g, std::size_t k) {
  const std::size_t n = g.n();
  if (n <= k) return false;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) >= k) continue;
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < n; ++v) {
      if (!(mask >> v & 1)) rest.push_back(v);
    }
    if (rest.size() < 2) continue;
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack{rest[0]};
    seen[rest[0]] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex u : g.neighbors(v)) {
        if ((mask >> u & 1) || seen[u]) continue;
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
    }
    if (reached != rest.size()) return false;
  }
  return true;
}

// Does a family of `size`-leaf vertex-disjoint stars exist, one per center?
inline bool star_packing_exists(const Graph& g, const std::vector<Vertex>& centers,
                                const std::vector<Vertex>& pool, std::size_t size) {
  std::vector<char> used(g.n(), 0);
  std::function<bool(std::size_t)> place = [&](std::size_t c) -> bool {
    if (c == centers.size()) return true;
    std::vector<Vertex> options;
    for (Vertex p : pool) {
      if (!used[p] && g.has_edge(centers[c], p)) options.push_back(p);
    }
    if (options.size() < size) return false;
    std::vector<std::size_t> pick(size);
    std::function<bool(std::size_t, std::size_t)> choose = [&](std::size_t depth, std::size_t from) -> bool {
      if (depth == size) return place(c + 1);
      for (std::size_t i = from; i < options.size(); ++i) {
        used[options[i]] = 1;
        if (choose(depth + 1, i + 1)) return true;
        used[options[i]] = 0;
      }
      return false;
    };
    return choose(0, 0);
  };
  return place(0);
}

// Trees whose closed neighbourhood misses v, by direct scan.
inline std::vector<std::uint32_t> index_set(const Graph& g, const istforge::TreeCollection& tc, Vertex v) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < tc.trees.size(); ++i) {
    bool near = false;
    for (Vertex x : tc.trees[i].vertices) near = near || x == v || g.has_edge(x, v);
    if (!near) out.push_back(i);
  }
  return out;
}

// Is the collection nice? For each vertex, search an injective assignment of
// I(v) to non-tree neighbours adjacent to the respective tree.
inline bool nice(const Graph& g, const istforge::TreeCollection& tc) {
  std::vector<char> in_tree(g.n(), 0);
  for (const auto& t : tc.trees) {
    for (Vertex x : t.vertices) in_tree[x] = 1;
  }
  for (Vertex v = 0; v < g.n(); ++v) {
    const auto idx = oracle::index_set(g, tc, v);
    std::vector<Vertex> cands;
    for (Vertex u : g.neighbors(v)) {
      if (!in_tree[u]) cands.push_back(u);
    }
    std::vector<char> taken(cands.size(), 0);
    std::function<bool(std::size_t)> go = [&](std::size_t j) -> bool {
      if (j == idx.size()) return true;
      for (std::size_t c = 0; c < cands.size(); ++c) {
        if (taken[c]) continue;
        bool hits = false;
        for (Vertex x : tc.trees[idx[j]].vertices) hits = hits || g.has_edge(cands[c], x);
        if (!hits) continue;
        taken[c] = 1;
        if (go(j + 1)) return true;
        taken[c] = 0;
      }
      return false;
    };
    if (!go(0)) return false;
  }
  return true;
}

// Independence check by marking: for each v, walk every tree path to the root
// and stamp internal vertices with the tree index; a second stamp on the same
// vertex for the same v is a violation. Also checks spanning-tree shape.
inline bool independent(const Graph& g, const istforge::SpanningTreeFamily& fam) {
  const std::size_t n = g.n();
  for (const auto& par : fam.parents) {
    if (par.size() != n || par[fam.root] != istforge::kNoVertex) return false;
    for (Vertex v = 0; v < n; ++v) {
      if (v == fam.root) continue;
      if (par[v] >= n || !g.has_edge(v, par[v])) return false;
      Vertex x = v;
      std::size_t steps = 0;
      while (x != fam.root && steps <= n) {
        x = par[x];
        ++steps;
      }
      if (x != fam.root) return false;
    }
  }
  std::vector<std::int64_t> owner(n, -1);
  for (Vertex v = 0; v < n; ++v) {
    if (v == fam.root) continue;
    std::fill(owner.begin(), owner.end(), -1);
    for (std::size_t t = 0; t < fam.parents.size(); ++t) {
      for (Vertex x = fam.parents[t][v]; x != fam.root; x = fam.parents[t][x]) {
        if (owner[x] >= 0 && owner[x] != static_cast<std::int64_t>(t)) return false;
        owner[x] = static_cast<std::int64_t>(t);
      }
    }
  }
  return true;
}

}  // namespace oracle
