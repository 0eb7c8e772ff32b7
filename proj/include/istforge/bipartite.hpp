#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace istforge {

/// Bipartite graph with left ids 0..left_size-1 and right ids 0..right_size-1.
/// Edge lists are validated on construction and kept sorted by (left, right).
class BipartiteGraph {
 public:
  using Pair = std::pair<std::uint32_t, std::uint32_t>;

  BipartiteGraph() = default;
  BipartiteGraph(std::size_t left_size, std::size_t right_size, std::vector<Pair> edges);

  std::size_t left_size() const noexcept { return left_size_; }
  std::size_t right_size() const noexcept { return right_size_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Pair>& edges() const noexcept { return edges_; }

  /// Right neighbours of a left vertex, ascending.
  std::span<const std::uint32_t> left_neighbors(std::uint32_t left) const;
  /// CSR offsets (size left_size + 1) and targets, for the matching engine.
  std::span<const std::size_t> offsets() const noexcept { return offsets_; }
  std::span<const std::uint32_t> targets() const noexcept { return targets_; }

  bool has_edge(std::uint32_t left, std::uint32_t right) const;

  /// Same graph with the two sides exchanged.
  BipartiteGraph transposed() const;

  static BipartiteGraph complete(std::size_t left_size, std::size_t right_size);

 private:
  std::size_t left_size_ = 0;
  std::size_t right_size_ = 0;
  std::vector<Pair> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<std::uint32_t> targets_;
};

}  // namespace istforge
