#include "istforge/spanning_family.hpp"

#include <atomic>
#include <limits>
#include <string>

namespace istforge {

namespace {

VerifyReport fail(VerifyProblem p, Vertex v, std::uint32_t a, std::uint32_t b, Vertex x, std::string msg) {
  VerifyReport r;
  r.ok = false;
  r.problem = p;
  r.vertex = v;
  r.tree_a = a;
  r.tree_b = b;
  r.shared = x;
  r.message = std::move(msg);
  return r;
}

// Structure checks shared by both variants: shapes, edges, spanning-ness.
VerifyReport check_structure(const Graph& g, const SpanningTreeFamily& fam) {
  const auto n = g.n();
  if (fam.parents.empty()) return {};
  if (!g.contains(fam.root)) return fail(VerifyProblem::Shape, kNoVertex, 0, 0, kNoVertex, "root out of range");
  std::vector<char> state(n);
  std::vector<Vertex> trail;
  for (std::uint32_t i = 0; i < fam.size(); ++i) {
    const auto& parent = fam.parents[i];
    const std::string tag = "tree " + std::to_string(i) + ": ";
    if (parent.size() != n) return fail(VerifyProblem::Shape, kNoVertex, i, i, kNoVertex, tag + "wrong length");
    if (parent[fam.root] != kNoVertex) {
      return fail(VerifyProblem::Shape, fam.root, i, i, kNoVertex, tag + "root has a parent");
    }
    for (Vertex v = 0; v < n; ++v) {
      if (v == fam.root) continue;
      const Vertex p = parent[v];
      if (p == kNoVertex) {
        return fail(VerifyProblem::NotSpanning, v, i, i, kNoVertex, tag + "vertex " + std::to_string(v) + " has no parent");
      }
      if (!g.contains(p) || !g.has_edge(v, p)) {
        return fail(VerifyProblem::NonEdge, v, i, i, kNoVertex,
                    tag + "parent edge (" + std::to_string(p) + ", " + std::to_string(v) + ") not in graph");
      }
    }
    // 0 = unknown, 1 = on current trail, 2 = reaches root.
    std::fill(state.begin(), state.end(), 0);
    state[fam.root] = 2;
    for (Vertex v = 0; v < n; ++v) {
      trail.clear();
      Vertex x = v;
      while (state[x] == 0) {
        state[x] = 1;
        trail.push_back(x);
        x = parent[x];
      }
      if (state[x] == 1) {
        return fail(VerifyProblem::NotSpanning, v, i, i, x, tag + "cycle through vertex " + std::to_string(x));
      }
      for (Vertex y : trail) state[y] = 2;
    }
  }
  return {};
}

// Walks every tree's path from v towards the root, stamping internal
// vertices; a vertex stamped twice for the same v is shared.
bool check_vertex(const SpanningTreeFamily& fam, Vertex v, std::vector<Vertex>& stamp,
                  std::vector<std::uint32_t>& owner, VerifyReport& out) {
  for (std::uint32_t i = 0; i < fam.size(); ++i) {
    const auto& parent = fam.parents[i];
    for (Vertex x = parent[v]; x != fam.root; x = parent[x]) {
      if (stamp[x] == v) {
        out = fail(VerifyProblem::SharedVertex, v, owner[x], i, x,
                   "paths to vertex " + std::to_string(v) + " in trees " + std::to_string(owner[x]) + " and " +
                       std::to_string(i) + " share vertex " + std::to_string(x));
        return false;
      }
      stamp[x] = v;
      owner[x] = i;
    }
  }
  return true;
}

}  // namespace

VerifyReport verify_independent_serial(const Graph& g, const SpanningTreeFamily& fam) {
  if (auto r = check_structure(g, fam); !r.ok) return r;
  std::vector<Vertex> stamp(g.n(), kNoVertex);
  std::vector<std::uint32_t> owner(g.n(), 0);
  VerifyReport out;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (v == fam.root) continue;
    if (!check_vertex(fam, v, stamp, owner, out)) return out;
  }
  return {};
}

VerifyReport verify_independent(const Graph& g, const SpanningTreeFamily& fam) {
  if (auto r = check_structure(g, fam); !r.ok) return r;
  const auto n = static_cast<std::int64_t>(g.n());
  std::atomic<std::int64_t> first{std::numeric_limits<std::int64_t>::max()};
  VerifyReport best;

#pragma omp parallel
  {
    std::vector<Vertex> stamp(g.n(), kNoVertex);
    std::vector<std::uint32_t> owner(g.n(), 0);
    VerifyReport local;
    VerifyReport local_best;
#pragma omp for schedule(dynamic, 64)
    for (std::int64_t v = 0; v < n; ++v) {
      if (v == fam.root || v > first.load(std::memory_order_relaxed)) continue;
      if (!check_vertex(fam, static_cast<Vertex>(v), stamp, owner, local)) {
        if (local_best.ok || local.vertex < local_best.vertex) local_best = local;
        std::int64_t cur = first.load();
        while (v < cur && !first.compare_exchange_weak(cur, v)) {
        }
      }
    }
#pragma omp critical(istforge_verify_merge)
    {
      if (!local_best.ok && (best.ok || local_best.vertex < best.vertex)) best = std::move(local_best);
    }
  }
  return best;
}

std::vector<Vertex> path_to_root(const SpanningTreeFamily& fam, std::size_t tree, Vertex v) {
  std::vector<Vertex> path{v};
  const auto& parent = fam.parents.at(tree);
  while (path.back() != fam.root) {
    path.push_back(parent.at(path.back()));
    if (path.size() > parent.size() + 1) break;
  }
  return path;
}

std::string to_string(VerifyProblem p) {
  switch (p) {
    case VerifyProblem::None: return "none";
    case VerifyProblem::Shape: return "shape";
    case VerifyProblem::NonEdge: return "non-edge";
    case VerifyProblem::NotSpanning: return "not-spanning";
    case VerifyProblem::SharedVertex: return "shared-vertex";
  }
  return "unknown";
}

}  // namespace istforge
