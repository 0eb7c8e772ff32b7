#include "istforge/tree_collection.hpp"

#include <algorithm>
#include <string>

#include "istforge/errors.hpp"

namespace istforge {

RootedTree path_tree(Vertex root, std::span<const Vertex> path) {
  RootedTree t;
  t.vertices.reserve(path.size() + 1);
  t.parents.reserve(path.size() + 1);
  t.vertices.push_back(root);
  t.parents.push_back(kNoVertex);
  Vertex prev = root;
  for (Vertex v : path) {
    t.vertices.push_back(v);
    t.parents.push_back(prev);
    prev = v;
  }
  return t;
}

void validate_collection(const Graph& g, const TreeCollection& tc) {
  if (tc.trees.empty()) {
    if (tc.root != kNoVertex && !g.contains(tc.root)) throw InvariantError("root out of range");
    return;
  }
  if (!g.contains(tc.root)) throw InvariantError("root out of range");
  std::vector<std::uint32_t> owner(g.n(), kNoTree);
  for (std::uint32_t i = 0; i < tc.trees.size(); ++i) {
    const auto& t = tc.trees[i];
    const std::string tag = "tree " + std::to_string(i) + ": ";
    if (t.vertices.size() != t.parents.size()) throw InvariantError(tag + "array length mismatch");
    if (t.vertices.empty() || t.vertices[0] != tc.root || t.parents[0] != kNoVertex) {
      throw InvariantError(tag + "must start at the root with no parent");
    }
    // Parents must precede children, which makes the structure connected and acyclic.
    for (std::size_t j = 1; j < t.size(); ++j) {
      const Vertex v = t.vertices[j];
      const Vertex p = t.parents[j];
      if (!g.contains(v)) throw InvariantError(tag + "vertex out of range");
      if (v == tc.root) throw InvariantError(tag + "root repeated");
      if (owner[v] == i) throw InvariantError(tag + "vertex " + std::to_string(v) + " repeated");
      if (owner[v] != kNoTree) {
        throw InvariantError("trees " + std::to_string(owner[v]) + " and " + std::to_string(i) +
                             " share vertex " + std::to_string(v));
      }
      if (p != tc.root && owner[p] != i) {
        throw InvariantError(tag + "parent of " + std::to_string(v) + " is not an earlier tree vertex");
      }
      if (!g.has_edge(v, p)) {
        throw InvariantError(tag + "edge (" + std::to_string(p) + ", " + std::to_string(v) + ") not in graph");
      }
      owner[v] = i;
    }
  }
}

std::vector<std::uint32_t> tree_membership(const Graph& g, const TreeCollection& tc) {
  std::vector<std::uint32_t> m(g.n(), kNoTree);
  for (std::uint32_t i = 0; i < tc.trees.size(); ++i) {
    for (Vertex v : tc.trees[i].vertices) m[v] = i;
  }
  if (!tc.trees.empty()) m[tc.root] = kRootMember;
  return m;
}

CoverageIndex::CoverageIndex(const Graph& g, const TreeCollection& tc)
    : tree_count_(tc.size()), all_(g.n(), 0), offsets_(g.n() + 1, 0), membership_(tree_membership(g, tc)) {
  if (tc.trees.empty()) return;
  all_[tc.root] = 1;
  for (Vertex u : g.neighbors(tc.root)) all_[u] = 1;

  // Two passes over the trees: count, then fill. stamp dedups within a tree.
  std::vector<std::uint32_t> stamp(g.n(), kNoTree);
  auto visit = [&](auto&& emit) {
    std::fill(stamp.begin(), stamp.end(), kNoTree);
    for (std::uint32_t i = 0; i < tc.trees.size(); ++i) {
      const auto& t = tc.trees[i];
      for (std::size_t j = 1; j < t.size(); ++j) {
        const Vertex y = t.vertices[j];
        if (stamp[y] != i) {
          stamp[y] = i;
          emit(y, i);
        }
        for (Vertex x : g.neighbors(y)) {
          if (stamp[x] != i) {
            stamp[x] = i;
            emit(x, i);
          }
        }
      }
    }
  };
  visit([&](Vertex x, std::uint32_t) { ++offsets_[x + 1]; });
  for (std::size_t v = 0; v < g.n(); ++v) offsets_[v + 1] += offsets_[v];
  lists_.resize(offsets_.back());
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  // Trees are visited in index order, so each list comes out ascending.
  visit([&](Vertex x, std::uint32_t i) { lists_[cursor[x]++] = i; });
}

std::vector<std::uint32_t> index_set(const CoverageIndex& cov, Vertex v) {
  std::vector<std::uint32_t> out;
  if (cov.touches_all(v)) return out;
  const auto covered = cov.touched(v);
  auto it = covered.begin();
  for (std::uint32_t i = 0; i < cov.tree_count(); ++i) {
    if (it != covered.end() && *it == i) {
      ++it;
    } else {
      out.push_back(i);
    }
  }
  return out;
}

std::vector<std::uint32_t> index_set(const Graph& g, const TreeCollection& tc, Vertex v) {
  if (!g.contains(v)) throw ParameterError("vertex out of range");
  return index_set(CoverageIndex(g, tc), v);
}

}  // namespace istforge
