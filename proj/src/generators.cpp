#include "istforge/generators.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include "istforge/errors.hpp"

namespace istforge {

namespace {

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ParameterError("edge probability must lie in [0, 1], got " + std::to_string(p));
  }
}

// Number of failures before the next success in a Bernoulli(p) sequence.
// Returns a huge value when the skip runs past any realistic index range.
std::uint64_t geometric_skip(Rng& rng, double log_q) {
  const double u = 1.0 - rng.uniform();  // (0, 1]
  const double skip = std::floor(std::log(u) / log_q);
  if (!(skip < 9.0e18)) return UINT64_MAX / 4;
  return static_cast<std::uint64_t>(skip);
}

}  // namespace

Graph gen_gnp(std::size_t n, double p, Rng& rng) {
  check_probability(p);
  if (p == 0.0 || n < 2) return Graph::from_edges(n, {});
  if (p == 1.0) return Graph::complete(n);

  const double log_q = std::log1p(-p);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(p * static_cast<double>(n) * static_cast<double>(n - 1) / 2.0 * 1.05) + 16);
  // Pairs (w, v) with w < v are walked row by row; v is the larger endpoint.
  std::uint64_t v = 1;
  std::uint64_t w = 0;
  std::uint64_t skip = geometric_skip(rng, log_q);
  for (;;) {
    // Advance w by `skip` positions across rows of lengths v, v+1, ...
    while (v < n && w + skip >= v) {
      skip -= v - w;
      w = 0;
      ++v;
    }
    if (v >= n) break;
    w += skip;
    edges.emplace_back(static_cast<Vertex>(w), static_cast<Vertex>(v));
    ++w;
    skip = geometric_skip(rng, log_q);
  }
  return Graph::from_edges(n, std::move(edges));
}

BipartiteGraph gen_bipartite_gnp(std::size_t a, std::size_t b, double p, Rng& rng) {
  check_probability(p);
  std::vector<BipartiteGraph::Pair> edges;
  const std::uint64_t total = static_cast<std::uint64_t>(a) * b;
  if (p > 0.0 && total > 0) {
    if (p == 1.0) {
      return BipartiteGraph::complete(a, b);
    }
    const double log_q = std::log1p(-p);
    std::uint64_t idx = geometric_skip(rng, log_q);
    while (idx < total) {
      edges.emplace_back(static_cast<std::uint32_t>(idx / b), static_cast<std::uint32_t>(idx % b));
      const std::uint64_t step = geometric_skip(rng, log_q);
      if (step >= total) break;
      idx += 1 + step;
    }
  }
  return BipartiteGraph(a, b, std::move(edges));
}

Graph gen_random_regular(std::size_t n, std::size_t d, Rng& rng) {
  if (d >= n && !(n == 0 && d == 0)) {
    throw ParameterError("regular degree d=" + std::to_string(d) + " must be below n=" + std::to_string(n));
  }
  if ((n * d) % 2 != 0) {
    throw ParameterError("n*d must be even for a d-regular graph (n=" + std::to_string(n) +
                         ", d=" + std::to_string(d) + ")");
  }
  if (d == 0) return Graph::from_edges(n, {});

  constexpr int kRedraws = 64;
  std::vector<std::vector<Vertex>> adj(n);
  std::vector<Vertex> stubs;
  std::vector<Edge> edges;

  auto adjacent = [&](Vertex u, Vertex v) {
    const auto& a = adj[u];
    return std::find(a.begin(), a.end(), v) != a.end();
  };

  for (int attempt = 0; attempt < kRegularAttemptCap; ++attempt) {
    for (auto& a : adj) a.clear();
    edges.clear();
    stubs.clear();
    for (Vertex v = 0; v < n; ++v) stubs.insert(stubs.end(), d, v);

    bool stuck = false;
    while (!stubs.empty()) {
      const std::size_t r = stubs.size();
      std::size_t pick_i = r;
      std::size_t pick_j = r;
      for (int t = 0; t < kRedraws; ++t) {
        const auto i = static_cast<std::size_t>(rng.below(r));
        const auto j = static_cast<std::size_t>(rng.below(r));
        if (i == j) continue;
        if (stubs[i] != stubs[j] && !adjacent(stubs[i], stubs[j])) {
          pick_i = i;
          pick_j = j;
          break;
        }
      }
      if (pick_i == r) {
        // Redraws keep failing: enumerate the admissible pairs directly.
        std::vector<std::pair<std::size_t, std::size_t>> admissible;
        for (std::size_t i = 0; i < r; ++i) {
          for (std::size_t j = i + 1; j < r; ++j) {
            if (stubs[i] != stubs[j] && !adjacent(stubs[i], stubs[j])) admissible.emplace_back(i, j);
          }
        }
        if (admissible.empty()) {
          stuck = true;
          break;
        }
        std::tie(pick_i, pick_j) = admissible[static_cast<std::size_t>(rng.below(admissible.size()))];
      }
      const Vertex u = stubs[pick_i];
      const Vertex v = stubs[pick_j];
      adj[u].push_back(v);
      adj[v].push_back(u);
      edges.emplace_back(u, v);
      if (pick_i < pick_j) std::swap(pick_i, pick_j);
      stubs[pick_i] = stubs.back();
      stubs.pop_back();
      stubs[pick_j] = stubs.back();
      stubs.pop_back();
    }
    if (!stuck) return Graph::from_edges(n, std::move(edges));
  }
  throw GenerationError("random regular generation failed after " + std::to_string(kRegularAttemptCap) +
                        " attempts (n=" + std::to_string(n) + ", d=" + std::to_string(d) + ")");
}

}  // namespace istforge
