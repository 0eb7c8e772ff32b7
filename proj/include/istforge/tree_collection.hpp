#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "istforge/graph.hpp"

namespace istforge {

/// A small tree rooted at the collection root, stored as parallel arrays.
/// vertices[0] is the root and parents[0] == kNoVertex; every other entry's
/// parent appears earlier in the arrays.
struct RootedTree {
  std::vector<Vertex> vertices;
  std::vector<Vertex> parents;

  std::size_t size() const noexcept { return vertices.size(); }
};

/// Trees sharing exactly the root and pairwise disjoint otherwise.
struct TreeCollection {
  Vertex root = kNoVertex;
  std::vector<RootedTree> trees;

  std::size_t size() const noexcept { return trees.size(); }
};

/// Tree root - path[0] - path[1] - ... as a RootedTree.
RootedTree path_tree(Vertex root, std::span<const Vertex> path);

/// Throws InvariantError unless every tree starts at the root, is connected and
/// acyclic through graph edges, and the trees meet only at the root.
void validate_collection(const Graph& g, const TreeCollection& tc);

/// Per-vertex tree membership: membership[v] is the index of the tree holding
/// v, kRootMember for the root, kNoTree otherwise.
inline constexpr std::uint32_t kNoTree = UINT32_MAX;
inline constexpr std::uint32_t kRootMember = UINT32_MAX - 1;
std::vector<std::uint32_t> tree_membership(const Graph& g, const TreeCollection& tc);

/// For each vertex, the trees whose closed neighbourhood contains it. The
/// root and its neighbours touch every tree; that case is a flag rather than
/// an explicit list.
class CoverageIndex {
 public:
  CoverageIndex(const Graph& g, const TreeCollection& tc);

  std::size_t tree_count() const noexcept { return tree_count_; }
  bool touches_all(Vertex v) const noexcept { return all_[v] != 0; }
  /// Ascending tree indices i with v in S_i or N(S_i); meaningless when touches_all(v).
  std::span<const std::uint32_t> touched(Vertex v) const noexcept {
    return {lists_.data() + offsets_[v], lists_.data() + offsets_[v + 1]};
  }
  std::uint32_t member_of(Vertex v) const noexcept { return membership_[v]; }
  bool in_any_tree(Vertex v) const noexcept { return membership_[v] != kNoTree; }

 private:
  std::size_t tree_count_ = 0;
  std::vector<char> all_;
  std::vector<std::size_t> offsets_;
  std::vector<std::uint32_t> lists_;
  std::vector<std::uint32_t> membership_;
};

/// I(v): indices i with v neither in S_i nor adjacent to it, ascending.
std::vector<std::uint32_t> index_set(const Graph& g, const TreeCollection& tc, Vertex v);
std::vector<std::uint32_t> index_set(const CoverageIndex& cov, Vertex v);

}  // namespace istforge
