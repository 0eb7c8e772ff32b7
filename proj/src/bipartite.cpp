#include "istforge/bipartite.hpp"

#include <algorithm>
#include <string>

#include "istforge/errors.hpp"

namespace istforge {

BipartiteGraph::BipartiteGraph(std::size_t left_size, std::size_t right_size, std::vector<Pair> edges)
    : left_size_(left_size), right_size_(right_size), edges_(std::move(edges)) {
  for (const auto& [l, r] : edges_) {
    if (l >= left_size_ || r >= right_size_) {
      throw ParameterError("bipartite edge (" + std::to_string(l) + ", " + std::to_string(r) +
                           ") out of range");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
    throw ParameterError("duplicate bipartite edge (" + std::to_string(dup->first) + ", " +
                         std::to_string(dup->second) + ")");
  }
  offsets_.assign(left_size_ + 1, 0);
  targets_.reserve(edges_.size());
  for (const auto& [l, r] : edges_) {
    ++offsets_[l + 1];
    targets_.push_back(r);
  }
  for (std::size_t i = 0; i < left_size_; ++i) offsets_[i + 1] += offsets_[i];
}

std::span<const std::uint32_t> BipartiteGraph::left_neighbors(std::uint32_t left) const {
  if (left >= left_size_) throw ParameterError("left vertex " + std::to_string(left) + " out of range");
  return {targets_.data() + offsets_[left], targets_.data() + offsets_[left + 1]};
}

bool BipartiteGraph::has_edge(std::uint32_t left, std::uint32_t right) const {
  if (left >= left_size_) return false;
  const auto nb = left_neighbors(left);
  return std::binary_search(nb.begin(), nb.end(), right);
}

BipartiteGraph BipartiteGraph::transposed() const {
  std::vector<Pair> flipped;
  flipped.reserve(edges_.size());
  for (const auto& [l, r] : edges_) flipped.emplace_back(r, l);
  return BipartiteGraph(right_size_, left_size_, std::move(flipped));
}

BipartiteGraph BipartiteGraph::complete(std::size_t left_size, std::size_t right_size) {
  std::vector<Pair> edges;
  edges.reserve(left_size * right_size);
  for (std::uint32_t l = 0; l < left_size; ++l) {
    for (std::uint32_t r = 0; r < right_size; ++r) edges.emplace_back(l, r);
  }
  return BipartiteGraph(left_size, right_size, std::move(edges));
}

}  // namespace istforge
