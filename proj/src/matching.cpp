#include "istforge/matching.hpp"

#include <algorithm>
#include <string>

#include "istforge/errors.hpp"

namespace istforge {

namespace {
constexpr std::uint32_t kInf = UINT32_MAX;
}

std::size_t MatchingEngine::solve(std::size_t left_size, std::size_t right_size,
                                  std::span<const std::size_t> offsets,
                                  std::span<const std::uint32_t> targets) {
  left_size_ = left_size;
  right_size_ = right_size;
  offsets_ = offsets;
  targets_ = targets;
  mate_left_.assign(left_size, kFree);
  mate_right_.assign(right_size, kFree);
  dist_.assign(left_size, kInf);
  cursor_.resize(left_size);

  std::size_t size = 0;
  // Greedy warm start; Hopcroft-Karp phases finish the job.
  for (std::uint32_t u = 0; u < left_size; ++u) {
    for (std::size_t e = offsets_[u]; e < offsets_[u + 1]; ++e) {
      const auto v = targets_[e];
      if (mate_right_[v] == kFree) {
        mate_right_[v] = u;
        mate_left_[u] = v;
        ++size;
        break;
      }
    }
  }
  while (bfs()) {
    for (std::uint32_t u = 0; u < left_size; ++u) cursor_[u] = offsets_[u];
    for (std::uint32_t u = 0; u < left_size; ++u) {
      if (mate_left_[u] == kFree && augment(u)) ++size;
    }
  }
  return size;
}

bool MatchingEngine::bfs() {
  queue_.clear();
  for (std::uint32_t u = 0; u < left_size_; ++u) {
    if (mate_left_[u] == kFree) {
      dist_[u] = 0;
      queue_.push_back(u);
    } else {
      dist_[u] = kInf;
    }
  }
  bool found = false;
  for (std::size_t head = 0; head < queue_.size(); ++head) {
    const auto u = queue_[head];
    for (std::size_t e = offsets_[u]; e < offsets_[u + 1]; ++e) {
      const auto w = mate_right_[targets_[e]];
      if (w == kFree) {
        found = true;
      } else if (dist_[w] == kInf) {
        dist_[w] = dist_[u] + 1;
        queue_.push_back(w);
      }
    }
  }
  return found;
}

bool MatchingEngine::augment(std::uint32_t root) {
  stack_.clear();
  stack_.push_back(root);
  while (!stack_.empty()) {
    const auto u = stack_.back();
    if (cursor_[u] == offsets_[u + 1]) {
      dist_[u] = kInf;
      stack_.pop_back();
      if (!stack_.empty()) ++cursor_[stack_.back()];
      continue;
    }
    const auto v = targets_[cursor_[u]];
    const auto w = mate_right_[v];
    if (w == kFree) {
      // Each stacked vertex's cursor points at the edge that continues the path.
      for (auto x : stack_) {
        const auto y = targets_[cursor_[x]];
        mate_left_[x] = y;
        mate_right_[y] = x;
      }
      for (auto x : stack_) ++cursor_[x];
      return true;
    }
    if (dist_[w] != kInf && dist_[w] == dist_[u] + 1) {
      stack_.push_back(w);
    } else {
      ++cursor_[u];
    }
  }
  return false;
}

void MatchingEngine::extract_violator(std::vector<std::uint32_t>& set,
                                      std::vector<std::uint32_t>& neighborhood) const {
  set.clear();
  neighborhood.clear();
  std::uint32_t start = kFree;
  for (std::uint32_t u = 0; u < left_size_; ++u) {
    if (mate_left_[u] == kFree) {
      start = u;
      break;
    }
  }
  if (start == kFree) return;

  std::vector<char> seen_left(left_size_, 0);
  std::vector<char> seen_right(right_size_, 0);
  seen_left[start] = 1;
  set.push_back(start);
  for (std::size_t head = 0; head < set.size(); ++head) {
    const auto u = set[head];
    for (std::size_t e = offsets_[u]; e < offsets_[u + 1]; ++e) {
      const auto v = targets_[e];
      if (seen_right[v]) continue;
      seen_right[v] = 1;
      neighborhood.push_back(v);
      // Maximality guarantees v is matched; otherwise start..v would augment.
      const auto w = mate_right_[v];
      if (w != kFree && !seen_left[w]) {
        seen_left[w] = 1;
        set.push_back(w);
      }
    }
  }
  std::sort(set.begin(), set.end());
  std::sort(neighborhood.begin(), neighborhood.end());
}

Matching max_matching(const BipartiteGraph& b) {
  MatchingEngine engine;
  engine.solve(b.left_size(), b.right_size(), b.offsets(), b.targets());
  Matching m;
  const auto mates = engine.mate_of_left();
  for (std::uint32_t u = 0; u < mates.size(); ++u) {
    if (mates[u] != MatchingEngine::kFree) m.pairs.emplace_back(u, mates[u]);
  }
  return m;
}

std::variant<Matching, HallViolator> saturating_or_violator(const BipartiteGraph& b, Side side) {
  if (side == Side::Right) {
    auto flipped = saturating_or_violator(b.transposed(), Side::Left);
    if (auto* m = std::get_if<Matching>(&flipped)) {
      Matching out;
      for (const auto& [l, r] : m->pairs) out.pairs.emplace_back(r, l);
      std::sort(out.pairs.begin(), out.pairs.end());
      return out;
    }
    auto h = std::get<HallViolator>(std::move(flipped));
    h.side = Side::Right;
    return h;
  }

  MatchingEngine engine;
  const auto size = engine.solve(b.left_size(), b.right_size(), b.offsets(), b.targets());
  if (size == b.left_size()) {
    Matching m;
    const auto mates = engine.mate_of_left();
    for (std::uint32_t u = 0; u < mates.size(); ++u) m.pairs.emplace_back(u, mates[u]);
    return m;
  }
  HallViolator h;
  h.side = Side::Left;
  engine.extract_violator(h.set, h.neighborhood);
  return h;
}

bool is_matching_of(const BipartiteGraph& b, const Matching& m) {
  std::vector<char> used_left(b.left_size(), 0);
  std::vector<char> used_right(b.right_size(), 0);
  for (const auto& [l, r] : m.pairs) {
    if (l >= b.left_size() || r >= b.right_size()) return false;
    if (used_left[l] || used_right[r]) return false;
    if (!b.has_edge(l, r)) return false;
    used_left[l] = used_right[r] = 1;
  }
  return true;
}

bool saturates(const BipartiteGraph& b, const Matching& m, Side side) {
  if (!is_matching_of(b, m)) return false;
  return m.size() == (side == Side::Left ? b.left_size() : b.right_size());
}

bool is_violator_of(const BipartiteGraph& b, const HallViolator& h) {
  const std::size_t own = h.side == Side::Left ? b.left_size() : b.right_size();
  std::vector<char> in_set(own, 0);
  for (auto x : h.set) {
    if (x >= own || in_set[x]) return false;
    in_set[x] = 1;
  }
  // Recompute the neighbourhood from scratch and compare.
  std::vector<std::uint32_t> nb;
  for (const auto& [l, r] : b.edges()) {
    const auto mine = h.side == Side::Left ? l : r;
    const auto other = h.side == Side::Left ? r : l;
    if (in_set[mine]) nb.push_back(other);
  }
  std::sort(nb.begin(), nb.end());
  nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  return nb == h.neighborhood && nb.size() < h.set.size();
}

std::variant<std::vector<Star>, StarDeficiency> disjoint_star_packing(const Graph& g,
                                                                      std::span<const Vertex> centers,
                                                                      std::span<const Vertex> leaf_pool,
                                                                      std::size_t star_size) {
  std::vector<std::uint32_t> pool_index(g.n(), MatchingEngine::kFree);
  for (std::uint32_t j = 0; j < leaf_pool.size(); ++j) {
    if (!g.contains(leaf_pool[j])) throw ParameterError("leaf pool vertex out of range");
    pool_index[leaf_pool[j]] = j;
  }
  for (Vertex c : centers) {
    if (!g.contains(c)) throw ParameterError("center out of range");
    if (pool_index[c] != MatchingEngine::kFree) {
      throw ParameterError("center " + std::to_string(c) + " is also in the leaf pool");
    }
  }

  // Left vertex c * star_size + t is the t-th copy of center c.
  std::vector<std::size_t> offsets{0};
  std::vector<std::uint32_t> targets;
  std::vector<std::uint32_t> scratch;
  for (Vertex c : centers) {
    scratch.clear();
    for (Vertex u : g.neighbors(c)) {
      if (pool_index[u] != MatchingEngine::kFree) scratch.push_back(pool_index[u]);
    }
    std::sort(scratch.begin(), scratch.end());
    for (std::size_t t = 0; t < star_size; ++t) {
      targets.insert(targets.end(), scratch.begin(), scratch.end());
      offsets.push_back(targets.size());
    }
  }

  MatchingEngine engine;
  const std::size_t left = centers.size() * star_size;
  const auto size = engine.solve(left, leaf_pool.size(), offsets, targets);
  if (size == left) {
    std::vector<Star> stars;
    stars.reserve(centers.size());
    const auto mates = engine.mate_of_left();
    for (std::size_t c = 0; c < centers.size(); ++c) {
      Star s{centers[c], {}};
      for (std::size_t t = 0; t < star_size; ++t) s.leaves.push_back(leaf_pool[mates[c * star_size + t]]);
      std::sort(s.leaves.begin(), s.leaves.end());
      stars.push_back(std::move(s));
    }
    return stars;
  }

  std::vector<std::uint32_t> set;
  std::vector<std::uint32_t> nb;
  engine.extract_violator(set, nb);
  StarDeficiency d;
  d.star_size = star_size;
  for (auto copy : set) d.centers.push_back(centers[copy / star_size]);
  std::sort(d.centers.begin(), d.centers.end());
  d.centers.erase(std::unique(d.centers.begin(), d.centers.end()), d.centers.end());
  for (auto j : nb) d.pool_neighborhood.push_back(leaf_pool[j]);
  std::sort(d.pool_neighborhood.begin(), d.pool_neighborhood.end());
  return d;
}

bool is_star_packing(const Graph& g, std::span<const Vertex> centers, std::span<const Vertex> leaf_pool,
                     std::size_t star_size, const std::vector<Star>& stars) {
  if (stars.size() != centers.size()) return false;
  std::vector<char> in_pool(g.n(), 0);
  for (Vertex v : leaf_pool) in_pool[v] = 1;
  std::vector<char> used(g.n(), 0);
  for (std::size_t i = 0; i < stars.size(); ++i) {
    const auto& s = stars[i];
    if (s.center != centers[i] || s.leaves.size() != star_size) return false;
    for (Vertex x : s.leaves) {
      if (!in_pool[x] || used[x] || !g.has_edge(s.center, x)) return false;
      used[x] = 1;
    }
  }
  return true;
}

bool is_star_deficiency(const Graph& g, std::span<const Vertex> leaf_pool, const StarDeficiency& d) {
  std::vector<char> in_pool(g.n(), 0);
  for (Vertex v : leaf_pool) in_pool[v] = 1;
  std::vector<Vertex> nb;
  for (Vertex c : d.centers) {
    for (Vertex u : g.neighbors(c)) {
      if (in_pool[u]) nb.push_back(u);
    }
  }
  std::sort(nb.begin(), nb.end());
  nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  return !d.centers.empty() && nb == d.pool_neighborhood && nb.size() < d.star_size * d.centers.size();
}

}  // namespace istforge
