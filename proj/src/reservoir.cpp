#include "istforge/reservoir.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "istforge/errors.hpp"

namespace istforge {

namespace {

using Path = std::vector<Vertex>;

class Splicer {
 public:
  Splicer(const Graph& g, std::vector<char>& available)
      : g_(g), available_(available), side_(g.n(), 0), parent_(g.n(), kNoVertex), piece_(g.n(), 0) {}

  struct Joined {
    Path path;
    std::size_t other = 0;  // index of the piece merged into pieces[0]
  };

  // Joins pieces[0] to the nearest other piece through available vertices.
  // One BFS tree grows from the endpoints of pieces[0], a second from the
  // endpoints of all other pieces; each grows by at most `budget` new
  // vertices. The first edge between the trees fixes the splice. On success
  // the new path vertices become unavailable and everything else grown is
  // released.
  std::optional<Joined> join(const std::vector<Path>& pieces, std::size_t budget) {
    std::deque<Vertex> qa, qb;
    seed(pieces[0], 1, 0, qa);
    for (std::size_t j = 1; j < pieces.size(); ++j) seed(pieces[j], 2, j, qb);
    std::size_t grown_a = 0, grown_b = 0;
    std::optional<std::pair<Vertex, Vertex>> cross;
    for (Vertex x : {pieces[0].front(), pieces[0].back()}) {
      if (auto y = crossing_from(x, 1)) {
        cross = std::make_pair(x, *y);
        break;
      }
    }
    while (!cross) {
      const bool can_a = !qa.empty() && grown_a < budget;
      const bool can_b = !qb.empty() && grown_b < budget;
      if (!can_a && !can_b) break;
      const bool pick_a = can_a && (!can_b || grown_a <= grown_b);
      auto& q = pick_a ? qa : qb;
      auto& grown = pick_a ? grown_a : grown_b;
      const char mine = pick_a ? 1 : 2;
      const Vertex x = q.front();
      q.pop_front();
      for (Vertex u : g_.neighbors(x)) {
        if (grown >= budget) break;
        if (side_[u] != 0 || !available_[u]) continue;
        add(u, x, mine, piece_[x]);
        q.push_back(u);
        ++grown;
        if (auto y = crossing_from(u, mine)) {
          cross = mine == 1 ? std::make_pair(u, *y) : std::make_pair(*y, u);
          break;
        }
      }
    }
    std::optional<Joined> out;
    if (cross) {
      const std::size_t other = piece_[cross->second];
      out = Joined{splice(pieces[0], pieces[other], cross->first, cross->second), other};
    }
    for (Vertex v : touched_) {
      side_[v] = 0;
      parent_[v] = kNoVertex;
    }
    touched_.clear();
    return out;
  }

 private:
  void add(Vertex v, Vertex parent, char s, std::size_t piece) {
    side_[v] = s;
    parent_[v] = parent;
    piece_[v] = piece;
    touched_.push_back(v);
  }

  void seed(const Path& p, char s, std::size_t piece, std::deque<Vertex>& q) {
    add(p.front(), kNoVertex, s, piece);
    q.push_back(p.front());
    if (p.size() > 1) {
      add(p.back(), kNoVertex, s, piece);
      q.push_back(p.back());
    }
  }

  std::optional<Vertex> crossing_from(Vertex v, char mine) const {
    const char other = mine == 1 ? 2 : 1;
    for (Vertex u : g_.neighbors(v)) {
      if (side_[u] == other) return u;
    }
    return std::nullopt;
  }

  // Walks x back to its seed endpoint, giving the chain from the endpoint to x.
  Path chain(Vertex x) const {
    Path c;
    for (Vertex v = x; v != kNoVertex; v = parent_[v]) c.push_back(v);
    std::reverse(c.begin(), c.end());
    return c;
  }

  Path splice(Path a, Path b, Vertex x, Vertex y) {
    Path ca = chain(x);  // endpoint of a ... x
    Path cb = chain(y);  // endpoint of b ... y
    if (a.size() > 1 && ca.front() == a.front()) std::reverse(a.begin(), a.end());
    if (b.size() > 1 && cb.front() == b.back()) std::reverse(b.begin(), b.end());
    Path out = std::move(a);
    out.insert(out.end(), ca.begin() + 1, ca.end());
    for (auto it = cb.rbegin(); it != cb.rend() - 1; ++it) out.push_back(*it);
    out.insert(out.end(), b.begin(), b.end());
    for (std::size_t i = 1; i < ca.size(); ++i) available_[ca[i]] = 0;
    for (std::size_t i = 1; i < cb.size(); ++i) available_[cb[i]] = 0;
    return out;
  }

  const Graph& g_;
  std::vector<char>& available_;
  std::vector<char> side_;
  std::vector<Vertex> parent_;
  std::vector<std::size_t> piece_;
  std::vector<Vertex> touched_;
};

}  // namespace

std::variant<std::vector<std::vector<Vertex>>, ConnectFailure> connect_through_reservoir(
    const Graph& g, const Partition& part, const PseudoParams& params) {
  const std::size_t n = g.n();
  const std::size_t k = part.k();
  if (part.cls.size() != n) throw ParameterError("partition does not match the graph");
  std::vector<char> available(n, 0);
  for (Vertex v = 0; v < n; ++v) available[v] = part.cls[v] == kClassR;

  std::vector<std::vector<Vertex>> members(k);
  for (std::uint32_t i = 0; i < k; ++i) members[i].push_back(part.branch_roots[i]);
  for (Vertex v = 0; v < n; ++v) {
    if (part.cls[v] < k) members[part.cls[v]].push_back(v);
  }

  const double s = params.internal_epsilon() * static_cast<double>(n) / 4.0;
  Splicer splicer(g, available);
  std::vector<std::vector<Vertex>> paths(k);
  for (std::uint32_t i = 0; i < k; ++i) {
    std::vector<Path> forest;
    for (Vertex v : members[i]) forest.push_back({v});
    while (forest.size() > 1) {
      const std::size_t c = forest.size();
      std::size_t budget = params.growth_budget.value_or(
          static_cast<std::size_t>(std::ceil(s / (3.0 * static_cast<double>(c)))));
      budget = std::max<std::size_t>(budget, 1);
      bool joined = false;
      for (int attempt = 0; attempt <= params.growth_retries && !joined; ++attempt) {
        if (auto merged = splicer.join(forest, budget)) {
          forest[0] = std::move(merged->path);
          forest.erase(forest.begin() + static_cast<std::ptrdiff_t>(merged->other));
          joined = true;
        } else {
          budget *= 2;
        }
      }
      if (!joined) {
        ConnectFailure f;
        f.set_index = i;
        f.components = forest.size();
        f.budget = budget / 2;
        f.reason = "no crossing edge for S_" + std::to_string(i) + " with " + std::to_string(forest.size()) +
                   " pieces left at growth budget " + std::to_string(f.budget);
        return f;
      }
    }
    paths[i] = std::move(forest[0]);
  }
  return paths;
}

std::optional<std::string> check_connection(const Graph& g, const Partition& part,
                                            const std::vector<std::vector<Vertex>>& paths) {
  const std::size_t n = g.n();
  const std::size_t k = part.k();
  if (paths.size() != k) return "expected one path per branch";
  std::vector<std::uint32_t> owner(n, UINT32_MAX);
  for (std::uint32_t i = 0; i < k; ++i) {
    const auto& p = paths[i];
    if (p.empty()) return "path " + std::to_string(i) + " is empty";
    for (std::size_t j = 0; j < p.size(); ++j) {
      const Vertex v = p[j];
      if (!g.contains(v)) return "path " + std::to_string(i) + " leaves the graph";
      if (owner[v] != UINT32_MAX) return "vertex " + std::to_string(v) + " lies on two paths or twice on one";
      owner[v] = i;
      const bool allowed = part.cls[v] == i || part.cls[v] == kClassR || v == part.branch_roots[i];
      if (!allowed) return "path " + std::to_string(i) + " uses vertex " + std::to_string(v) + " outside S_i, R, v_i";
      if (j > 0 && !g.has_edge(p[j - 1], v)) return "path " + std::to_string(i) + " has a non-edge";
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (part.cls[v] < k && owner[v] != part.cls[v]) return "vertex " + std::to_string(v) + " of S_i is off its path";
  }
  for (std::uint32_t i = 0; i < k; ++i) {
    if (owner[part.branch_roots[i]] != i) return "v_" + std::to_string(i) + " is off its path";
  }
  return std::nullopt;
}

}  // namespace istforge
