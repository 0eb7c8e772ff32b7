#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "istforge/bipartite.hpp"
#include "istforge/graph.hpp"

namespace istforge {

struct Matching {
  /// (left, right) pairs in ascending left order.
  std::vector<BipartiteGraph::Pair> pairs;

  std::size_t size() const noexcept { return pairs.size(); }
};

enum class Side { Left, Right };

/// A set on one side whose neighbourhood is strictly smaller than itself,
/// certifying via Hall's theorem that no matching saturates that side.
struct HallViolator {
  Side side = Side::Left;
  std::vector<std::uint32_t> set;           // ascending
  std::vector<std::uint32_t> neighborhood;  // ascending
};

/// Hopcroft-Karp on a left-major CSR adjacency. Reusable across instances so
/// callers solving many small problems avoid reallocating scratch space.
///
/// Free left vertices are processed in ascending order and neighbours are
/// scanned in CSR order, so the result is a deterministic function of the input.
class MatchingEngine {
 public:
  static constexpr std::uint32_t kFree = UINT32_MAX;

  /// Runs to a maximum matching; returns its cardinality.
  std::size_t solve(std::size_t left_size, std::size_t right_size,
                    std::span<const std::size_t> offsets, std::span<const std::uint32_t> targets);

  std::span<const std::uint32_t> mate_of_left() const noexcept { return mate_left_; }
  std::span<const std::uint32_t> mate_of_right() const noexcept { return mate_right_; }

  /// After solve(): when some left vertex is unmatched, the alternating-reachable
  /// set from the smallest such vertex together with its neighbourhood, which is
  /// one vertex short. Left empty when the matching saturates the left side.
  void extract_violator(std::vector<std::uint32_t>& set, std::vector<std::uint32_t>& neighborhood) const;

 private:
  bool bfs();
  bool augment(std::uint32_t root);

  std::size_t left_size_ = 0;
  std::size_t right_size_ = 0;
  std::span<const std::size_t> offsets_;
  std::span<const std::uint32_t> targets_;
  std::vector<std::uint32_t> mate_left_;
  std::vector<std::uint32_t> mate_right_;
  std::vector<std::uint32_t> dist_;
  std::vector<std::size_t> cursor_;
  std::vector<std::uint32_t> queue_;
  std::vector<std::uint32_t> stack_;
};

/// Maximum-cardinality matching.
Matching max_matching(const BipartiteGraph& b);

/// A matching saturating every vertex of `side`, or a Hall violator on that side.
std::variant<Matching, HallViolator> saturating_or_violator(const BipartiteGraph& b, Side side);

/// Certificate checks, independent of the solver.
bool is_matching_of(const BipartiteGraph& b, const Matching& m);
bool saturates(const BipartiteGraph& b, const Matching& m, Side side);
bool is_violator_of(const BipartiteGraph& b, const HallViolator& h);

struct Star {
  Vertex center = kNoVertex;
  std::vector<Vertex> leaves;  // ascending
};

/// Centers that cannot all receive full stars: together they see fewer than
/// star_size * |centers| pool vertices.
struct StarDeficiency {
  std::vector<Vertex> centers;
  std::vector<Vertex> pool_neighborhood;
  std::size_t star_size = 0;
};

/// Vertex-disjoint stars, one per center, each with `star_size` leaves drawn
/// from `leaf_pool`. Solved as a b-matching by replicating each center
/// star_size times. Throws ParameterError when centers and pool intersect.
std::variant<std::vector<Star>, StarDeficiency> disjoint_star_packing(const Graph& g,
                                                                      std::span<const Vertex> centers,
                                                                      std::span<const Vertex> leaf_pool,
                                                                      std::size_t star_size);

bool is_star_packing(const Graph& g, std::span<const Vertex> centers, std::span<const Vertex> leaf_pool,
                     std::size_t star_size, const std::vector<Star>& stars);
bool is_star_deficiency(const Graph& g, std::span<const Vertex> leaf_pool, const StarDeficiency& d);

}  // namespace istforge
