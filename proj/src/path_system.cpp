#include "istforge/path_system.hpp"

#include <algorithm>

#include "istforge/errors.hpp"

namespace istforge {

std::variant<PathSystem, GrowthFailure> grow_path_system(const Graph& g, std::span<const Vertex> starts,
                                                         std::size_t length, std::span<const Vertex> forbidden) {
  const auto n = g.n();
  std::vector<char> blocked(n, 0);
  for (Vertex f : forbidden) {
    if (!g.contains(f)) throw ParameterError("forbidden vertex out of range");
    blocked[f] = 1;
  }
  std::size_t allowed = n;
  for (Vertex v = 0; v < n; ++v) allowed -= blocked[v];
  for (Vertex s : starts) {
    if (!g.contains(s)) throw ParameterError("start vertex out of range");
    if (blocked[s]) throw ParameterError("start vertex " + std::to_string(s) + " is forbidden or repeated");
    blocked[s] = 1;  // starts are occupied from round 0 on
  }
  const std::size_t k = starts.size();
  if (k * (length + 1) > allowed) {
    throw ParameterError("not enough allowed vertices for " + std::to_string(k) + " paths of length " +
                         std::to_string(length));
  }

  PathSystem ps;
  ps.length = length;
  ps.paths.reserve(k);
  for (Vertex s : starts) ps.paths.push_back({s});

  // Right side of each round: free vertices adjacent to some endpoint,
  // numbered on first sight.
  std::vector<std::uint32_t> right_id(n, UINT32_MAX);
  std::vector<Vertex> right_vertex;
  std::vector<std::size_t> offsets;
  std::vector<std::uint32_t> targets;
  MatchingEngine engine;

  for (std::size_t round = 1; round <= length; ++round) {
    right_vertex.clear();
    offsets.assign(1, 0);
    targets.clear();
    for (std::size_t i = 0; i < k; ++i) {
      for (Vertex y : g.neighbors(ps.paths[i].back())) {
        if (blocked[y]) continue;
        if (right_id[y] == UINT32_MAX) {
          right_id[y] = static_cast<std::uint32_t>(right_vertex.size());
          right_vertex.push_back(y);
        }
        targets.push_back(right_id[y]);
      }
      offsets.push_back(targets.size());
    }
    const auto size = engine.solve(k, right_vertex.size(), offsets, targets);
    if (size < k) {
      GrowthFailure f;
      f.round = round;
      f.violator.side = Side::Left;
      engine.extract_violator(f.violator.set, f.violator.neighborhood);
      for (auto& r : f.violator.neighborhood) r = right_vertex[r];
      std::sort(f.violator.neighborhood.begin(), f.violator.neighborhood.end());
      f.partial = std::move(ps.paths);
      return f;
    }
    const auto mates = engine.mate_of_left();
    for (std::size_t i = 0; i < k; ++i) {
      const Vertex y = right_vertex[mates[i]];
      ps.paths[i].push_back(y);
      blocked[y] = 1;
    }
    for (Vertex y : right_vertex) right_id[y] = UINT32_MAX;
  }
  return ps;
}

std::optional<std::string> check_path_system(const Graph& g, const PathSystem& ps, std::span<const Vertex> starts,
                                             std::span<const Vertex> forbidden) {
  if (ps.paths.size() != starts.size()) return "wrong number of paths";
  std::vector<char> used(g.n(), 0);
  std::vector<char> banned(g.n(), 0);
  for (Vertex f : forbidden) banned[f] = 1;
  for (std::size_t i = 0; i < ps.paths.size(); ++i) {
    const auto& p = ps.paths[i];
    const std::string tag = "path " + std::to_string(i) + ": ";
    if (p.size() != ps.length + 1) return tag + "wrong length";
    if (p.front() != starts[i]) return tag + "does not begin at its start vertex";
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (!g.contains(p[j])) return tag + "vertex out of range";
      if (used[p[j]]) return tag + "vertex " + std::to_string(p[j]) + " reused";
      if (banned[p[j]]) return tag + "vertex " + std::to_string(p[j]) + " is forbidden";
      used[p[j]] = 1;
      if (j > 0 && !g.has_edge(p[j - 1], p[j])) return tag + "consecutive vertices not adjacent";
    }
  }
  return std::nullopt;
}

bool check_growth_failure(const Graph& g, const GrowthFailure& f, std::span<const Vertex> forbidden) {
  const auto& partial = f.partial;
  if (f.round == 0 || f.violator.set.empty()) return false;
  std::vector<char> blocked(g.n(), 0);
  for (Vertex x : forbidden) blocked[x] = 1;
  for (const auto& p : partial) {
    if (p.size() != f.round) return false;
    for (Vertex x : p) blocked[x] = 1;
  }
  std::vector<Vertex> nb;
  for (auto i : f.violator.set) {
    if (i >= partial.size()) return false;
    for (Vertex y : g.neighbors(partial[i].back())) {
      if (!blocked[y]) nb.push_back(y);
    }
  }
  std::sort(nb.begin(), nb.end());
  nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  return nb == f.violator.neighborhood && nb.size() < f.violator.set.size();
}

}  // namespace istforge
