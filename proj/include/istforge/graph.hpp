#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

namespace istforge {

using Vertex = std::uint32_t;
inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Stored in compressed sparse row form; every adjacency list is strictly
/// increasing, which is the vertex ordering all builders rely on when they
/// speak of "the first k neighbours".
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an unordered edge list. Throws ParameterError on
  /// self-loops, duplicate edges (in either orientation) or out-of-range ids.
  static Graph from_edges(std::size_t n, std::vector<Edge> edges);

  /// Complete graph K_n.
  static Graph complete(std::size_t n);

  std::size_t n() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t m() const noexcept { return adjacency_.size() / 2; }

  /// Sorted neighbour list; throws ParameterError for an out-of-range vertex.
  std::span<const Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const;
  bool has_edge(Vertex u, Vertex v) const;

  /// Edges (u, v) with u < v in ascending lexicographic order.
  std::vector<Edge> edges() const;

  bool contains(Vertex v) const noexcept { return v < n(); }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adjacency_;
};

std::size_t min_degree(const Graph& g);
std::size_t max_degree(const Graph& g);
std::span<const Vertex> neighbors(const Graph& g, Vertex v);
std::size_t common_neighbors(const Graph& g, Vertex u, Vertex v);
bool is_regular(const Graph& g);

/// Edge density 2m / (n(n-1)); zero for n < 2.
double edge_density(const Graph& g);

/// Exactly { v : d(v) < threshold }, ascending.
std::vector<Vertex> low_degree_set(const Graph& g, double threshold);

/// np - factor * sqrt(2 np log n), optionally with the (1-p) variance factor
/// under the square root. The two forms both appear in the literature for the
/// same low-degree cut; callers choose explicitly.
double low_degree_threshold(std::size_t n, double p, double factor, bool with_one_minus_p);

/// Open neighbourhood of a set: vertices outside `set` adjacent to some member.
std::vector<Vertex> outer_neighborhood(const Graph& g, std::span<const Vertex> set);

}  // namespace istforge
