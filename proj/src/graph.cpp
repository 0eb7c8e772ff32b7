#include "istforge/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "istforge/errors.hpp"

namespace istforge {

namespace {

void check_vertex(const Graph& g, Vertex v) {
  if (!g.contains(v)) {
    throw ParameterError("vertex " + std::to_string(v) + " out of range for graph with " +
                         std::to_string(g.n()) + " vertices");
  }
}

}  // namespace

Graph Graph::from_edges(std::size_t n, std::vector<Edge> edges) {
  if (n >= static_cast<std::size_t>(kNoVertex)) throw ParameterError("vertex count too large");
  for (auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw ParameterError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                           ") out of range");
    }
    if (u == v) throw ParameterError("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    throw ParameterError("duplicate edge (" + std::to_string(dup->first) + ", " +
                         std::to_string(dup->second) + ")");
  }

  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (const auto& [u, v] : edges) {
    ++g.offsets_[u + 1];
    ++g.offsets_[v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
  g.adjacency_.resize(2 * edges.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Sorted (u, v) pairs: the first pass writes each vertex's smaller
  // neighbours in increasing order, the second appends the larger ones.
  for (const auto& [u, v] : edges) {
    g.adjacency_[cursor[v]++] = u;
  }
  for (const auto& [u, v] : edges) {
    g.adjacency_[cursor[u]++] = v;
  }
  return g;
}

Graph Graph::complete(std::size_t n) {
  std::vector<Edge> edges;
  edges.reserve(n * (n ? n - 1 : 0) / 2);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return from_edges(n, std::move(edges));
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(*this, v);
  return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
}

std::size_t Graph::degree(Vertex v) const {
  check_vertex(*this, v);
  return offsets_[v + 1] - offsets_[v];
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto nb = neighbors(u);
  check_vertex(*this, v);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m());
  for (Vertex u = 0; u < n(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::size_t min_degree(const Graph& g) {
  if (g.n() == 0) return 0;
  std::size_t best = g.degree(0);
  for (Vertex v = 1; v < g.n(); ++v) best = std::min(best, g.degree(v));
  return best;
}

std::size_t max_degree(const Graph& g) {
  std::size_t best = 0;
  for (Vertex v = 0; v < g.n(); ++v) best = std::max(best, g.degree(v));
  return best;
}

std::span<const Vertex> neighbors(const Graph& g, Vertex v) { return g.neighbors(v); }

std::size_t common_neighbors(const Graph& g, Vertex u, Vertex v) {
  const auto a = g.neighbors(u);
  const auto b = g.neighbors(v);
  std::size_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

bool is_regular(const Graph& g) { return min_degree(g) == max_degree(g); }

double edge_density(const Graph& g) {
  const double n = static_cast<double>(g.n());
  if (g.n() < 2) return 0.0;
  return 2.0 * static_cast<double>(g.m()) / (n * (n - 1.0));
}

std::vector<Vertex> low_degree_set(const Graph& g, double threshold) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (static_cast<double>(g.degree(v)) < threshold) out.push_back(v);
  }
  return out;
}

double low_degree_threshold(std::size_t n, double p, double factor, bool with_one_minus_p) {
  if (n < 2) return 0.0;
  const double np = static_cast<double>(n) * p;
  const double variance = with_one_minus_p ? np * (1.0 - p) : np;
  return np - factor * std::sqrt(2.0 * variance * std::log(static_cast<double>(n)));
}

std::vector<Vertex> outer_neighborhood(const Graph& g, std::span<const Vertex> set) {
  std::vector<char> in_set(g.n(), 0);
  for (Vertex v : set) in_set[v] = 1;
  std::vector<char> seen(g.n(), 0);
  std::vector<Vertex> out;
  for (Vertex v : set) {
    for (Vertex u : g.neighbors(v)) {
      if (!in_set[u] && !seen[u]) {
        seen[u] = 1;
        out.push_back(u);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace istforge
