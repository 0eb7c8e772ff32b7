#include "istforge/partition.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <string>

#include "istforge/errors.hpp"

namespace istforge {

PartitionPlan plan_partition(const PseudoParams& params, std::size_t n, double d) {
  if (!(params.epsilon > 0 && params.epsilon < 1)) throw ParameterError("epsilon must lie in (0, 1)");
  const double e = params.internal_epsilon();
  const double dlog = d > 1 ? d * std::log(d) : 1.0;
  PartitionPlan plan;
  plan.branch_probability = params.branch_probability.value_or(std::pow(e, 11) / dlog);
  plan.reservoir_probability = params.reservoir_probability.value_or(e / 100);
  plan.branch_cap = params.branch_cap.value_or(std::pow(e, 10) * static_cast<double>(n) / dlog);
  plan.reservoir_degree = params.reservoir_degree.value_or(std::pow(e, 3) * d);
  plan.max_rounds = params.max_resample_rounds ? params.max_resample_rounds : 50 * n;
  if (plan.branch_probability < 0 || plan.reservoir_probability < 0) {
    throw ParameterError("class probabilities must be non-negative");
  }
  return plan;
}

std::vector<Vertex> Partition::members(std::uint32_t c) const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < cls.size(); ++v) {
    if (cls[v] == c) out.push_back(v);
  }
  return out;
}

namespace {

// Per-vertex owner: i for members of S_i and for v_i, kNoOwner otherwise.
constexpr std::uint32_t kNoOwner = UINT32_MAX;

std::vector<std::uint32_t> owners(const Partition& part) {
  std::vector<std::uint32_t> own(part.cls.size(), kNoOwner);
  for (Vertex v = 0; v < part.cls.size(); ++v) {
    if (part.cls[v] < part.k()) own[v] = part.cls[v];
  }
  for (std::uint32_t i = 0; i < part.k(); ++i) own[part.branch_roots[i]] = i;
  return own;
}

std::vector<std::uint32_t> index_set_from(const Graph& g, const Partition& part,
                                          const std::vector<std::uint32_t>& own, Vertex v,
                                          std::vector<char>& mark) {
  std::vector<std::uint32_t> out;
  if (v == part.root || g.has_edge(v, part.root)) return out;
  if (own[v] != kNoOwner) mark[own[v]] = 1;
  for (Vertex u : g.neighbors(v)) {
    if (own[u] != kNoOwner) mark[own[u]] = 1;
  }
  for (std::uint32_t i = 0; i < part.k(); ++i) {
    if (!mark[i]) out.push_back(i);
    mark[i] = 0;
  }
  return out;
}

struct Scratch {
  std::vector<char> mark;
  std::vector<std::int32_t> slot;  // tree index -> left position, -1 if not in I(v)
  std::vector<std::size_t> offsets;
  std::vector<std::uint32_t> targets;
  std::vector<Vertex> candidates;
  std::vector<char> near;  // W(v) membership for the candidate restriction
  MatchingEngine engine;
};

struct VertexVerdict {
  bool ok = true;
  std::vector<Connector> connectors;
};

class Checker {
 public:
  Checker(const Graph& g, const Partition& part, const PartitionPlan& plan, const PseudoParams& params)
      : g_(g), part_(part), plan_(plan), params_(params), own_(owners(part)) {}

  void prepare(Scratch& s) const {
    s.mark.assign(part_.k(), 0);
    s.slot.assign(part_.k(), -1);
    if (params_.restrict_candidates) s.near.assign(g_.n(), 0);
  }

  VertexVerdict check(Vertex v, Scratch& s) const {
    VertexVerdict out;
    if (v == part_.root) return out;
    std::size_t reservoir = 0;
    for (Vertex u : g_.neighbors(v)) reservoir += part_.cls[u] == kClassR;
    if (static_cast<double>(reservoir) < plan_.reservoir_degree) {
      out.ok = false;
      return out;
    }
    const auto idx = index_set_from(g_, part_, own_, v, s.mark);
    if (idx.empty()) return out;

    s.candidates.clear();
    if (params_.restrict_candidates) mark_near(v, s, 1);
    const double need = params_.internal_epsilon() * static_cast<double>(g_.degree(v));
    for (Vertex u : g_.neighbors(v)) {
      if (part_.cls[u] != kClassU) continue;
      if (params_.restrict_candidates) {
        std::size_t away = 0;
        for (Vertex w : g_.neighbors(u)) away += !s.near[w];
        if (static_cast<double>(away) < need) continue;
      }
      s.candidates.push_back(u);
    }
    if (params_.restrict_candidates) mark_near(v, s, 0);
    if (s.candidates.size() < idx.size()) {
      out.ok = false;
      return out;
    }

    for (std::size_t j = 0; j < idx.size(); ++j) s.slot[idx[j]] = static_cast<std::int32_t>(j);
    // Left side: indices of idx; right side: candidates. Built left-major.
    std::vector<std::vector<std::uint32_t>> adj(idx.size());
    for (std::uint32_t c = 0; c < s.candidates.size(); ++c) {
      for (Vertex w : g_.neighbors(s.candidates[c])) {
        const auto o = own_[w];
        if (o == kNoOwner || s.slot[o] < 0) continue;
        auto& list = adj[static_cast<std::size_t>(s.slot[o])];
        if (list.empty() || list.back() != c) list.push_back(c);
      }
    }
    for (auto i : idx) s.slot[i] = -1;
    s.offsets.assign(1, 0);
    s.targets.clear();
    for (auto& list : adj) {
      s.targets.insert(s.targets.end(), list.begin(), list.end());
      s.offsets.push_back(s.targets.size());
    }
    const auto size = s.engine.solve(idx.size(), s.candidates.size(), s.offsets, s.targets);
    if (size < idx.size()) {
      out.ok = false;
      return out;
    }
    const auto mate = s.engine.mate_of_left();
    out.connectors.reserve(idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j) out.connectors.push_back({idx[j], s.candidates[mate[j]]});
    return out;
  }

 private:
  void mark_near(Vertex v, Scratch& s, char value) const {
    s.near[v] = value;
    s.near[part_.root] = value;
    for (Vertex u : g_.neighbors(v)) s.near[u] = value;
    for (Vertex b : part_.branch_roots) s.near[b] = value;
  }

  const Graph& g_;
  const Partition& part_;
  const PartitionPlan& plan_;
  const PseudoParams& params_;
  std::vector<std::uint32_t> own_;
};

std::uint32_t draw_class(const PartitionPlan& plan, std::size_t k, Rng& rng) {
  double x = rng.uniform();
  if (x < plan.reservoir_probability) return kClassR;
  x -= plan.reservoir_probability;
  const double total = plan.branch_probability * static_cast<double>(k);
  if (x < total) {
    const auto i = static_cast<std::uint32_t>(x / plan.branch_probability);
    return std::min<std::uint32_t>(i, static_cast<std::uint32_t>(k - 1));
  }
  return kClassU;
}

void ball(const Graph& g, Vertex v, int radius, std::vector<std::uint32_t>& stamp, std::uint32_t tag,
          std::vector<Vertex>& out) {
  std::vector<Vertex> frontier{v};
  if (stamp[v] != tag) {
    stamp[v] = tag;
    out.push_back(v);
  }
  for (int step = 0; step < radius; ++step) {
    std::vector<Vertex> next;
    for (Vertex x : frontier) {
      for (Vertex u : g.neighbors(x)) {
        if (stamp[u] == tag) continue;
        stamp[u] = tag;
        out.push_back(u);
        next.push_back(u);
      }
    }
    frontier.swap(next);
  }
}

}  // namespace

std::vector<std::uint32_t> partition_index_set(const Graph& g, const Partition& part, Vertex v) {
  std::vector<char> mark(part.k(), 0);
  return index_set_from(g, part, owners(part), v, mark);
}

std::variant<Partition, PartitionFailure> sample_partition(const Graph& g, Vertex root,
                                                           const std::vector<Vertex>& branch_roots,
                                                           const PseudoParams& params, Rng& rng) {
  const std::size_t n = g.n();
  if (!g.contains(root)) throw ParameterError("root out of range");
  for (Vertex b : branch_roots) {
    if (!g.has_edge(root, b)) throw ParameterError("branch root " + std::to_string(b) + " is not a root neighbour");
  }
  const std::size_t k = branch_roots.size();
  const double d = n ? 2.0 * static_cast<double>(g.m()) / static_cast<double>(n) : 0.0;
  const auto plan = plan_partition(params, n, d);
  if (plan.reservoir_probability + plan.branch_probability * static_cast<double>(k) > 1.0 + 1e-12) {
    throw ParameterError("class probabilities sum above one");
  }

  Partition part;
  part.root = root;
  part.branch_roots = branch_roots;
  part.cls.assign(n, kClassU);
  part.connectors.assign(n, {});
  std::vector<char> fixed(n, 0);
  fixed[root] = 1;
  part.cls[root] = kClassRoot;
  for (Vertex b : branch_roots) {
    if (fixed[b]) throw ParameterError("branch roots must be distinct");
    fixed[b] = 1;
    part.cls[b] = kClassBranchRoot;
  }

  PartitionFailure fail;
  if (k > 0 && plan.branch_cap < 1.0) {
    Partition empty = part;
    std::vector<Vertex> bad;
    for (Vertex v = 0; v < n; ++v) {
      if (!partition_index_set(g, empty, v).empty()) bad.push_back(v);
    }
    if (!bad.empty()) {
      fail.bad_vertices = std::move(bad);
      fail.reason = "S_i size cap " + std::to_string(plan.branch_cap) +
                    " is below one, so every S_i is empty and vertices far from L have no connectors";
      return fail;
    }
  }

  for (Vertex v = 0; v < n; ++v) {
    if (!fixed[v]) part.cls[v] = draw_class(plan, k, rng);
  }

  std::vector<std::uint32_t> stamp(n, 0), scratch_stamp(n, 0);
  std::uint32_t tag = 0, scratch_tag = 0;
  std::vector<std::size_t> sizes(k);
  const int threads = omp_get_max_threads();
  std::vector<Scratch> scratch(static_cast<std::size_t>(threads));

  for (std::size_t round = 0;; ++round) {
    Checker checker(g, part, plan, params);
    for (auto& s : scratch) checker.prepare(s);
    std::vector<char> bad(n, 0);

#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t vi = 0; vi < static_cast<std::int64_t>(n); ++vi) {
      const auto v = static_cast<Vertex>(vi);
      auto verdict = checker.check(v, scratch[static_cast<std::size_t>(omp_get_thread_num())]);
      bad[v] = !verdict.ok;
      part.connectors[v] = std::move(verdict.connectors);
    }

    std::fill(sizes.begin(), sizes.end(), 0);
    for (Vertex v = 0; v < n; ++v) {
      if (part.cls[v] < k) ++sizes[part.cls[v]];
    }
    std::vector<std::uint32_t> oversized;
    for (std::uint32_t i = 0; i < k; ++i) {
      if (static_cast<double>(sizes[i]) > plan.branch_cap) oversized.push_back(i);
    }
    std::vector<Vertex> bad_list;
    for (Vertex v = 0; v < n; ++v) {
      if (bad[v]) bad_list.push_back(v);
    }
    if (bad_list.empty() && oversized.empty()) {
      part.rounds = round;
      return part;
    }
    if (round + 1 >= plan.max_rounds) {
      fail.rounds = round + 1;
      fail.bad_vertices = std::move(bad_list);
      fail.oversized = std::move(oversized);
      fail.reason = "bad events remain after " + std::to_string(fail.rounds) + " resampling rounds";
      part.rounds = fail.rounds;
      fail.last = std::move(part);
      return fail;
    }

    // Parallel Moser-Tardos step: in random order, keep bad events whose
    // resample balls are disjoint from those already kept, then redraw the
    // kept balls. Oversized sets are redrawn whole.
    ++tag;
    rng.shuffle(bad_list);
    std::vector<Vertex> redo;
    std::vector<Vertex> b;
    for (Vertex v : bad_list) {
      b.clear();
      ball(g, v, params.resample_radius, scratch_stamp, ++scratch_tag, b);
      bool clash = false;
      for (Vertex x : b) clash = clash || stamp[x] == tag;
      if (clash) continue;
      for (Vertex x : b) {
        stamp[x] = tag;
        redo.push_back(x);
      }
    }
    for (std::uint32_t i : oversized) {
      for (Vertex v = 0; v < n; ++v) {
        if (part.cls[v] == i && stamp[v] != tag) {
          stamp[v] = tag;
          redo.push_back(v);
        }
      }
    }
    std::sort(redo.begin(), redo.end());
    for (Vertex v : redo) {
      if (!fixed[v]) part.cls[v] = draw_class(plan, k, rng);
    }
  }
}

std::optional<std::string> check_partition(const Graph& g, const Partition& part, const PartitionPlan& plan) {
  const std::size_t n = g.n();
  const std::size_t k = part.k();
  if (part.cls.size() != n || part.connectors.size() != n) return "partition arrays do not match the graph";
  if (!g.contains(part.root) || part.cls[part.root] != kClassRoot) return "root class is wrong";
  std::vector<char> in_l(n, 0);
  for (Vertex b : part.branch_roots) {
    if (!g.contains(b) || !g.has_edge(part.root, b)) return "branch root is not a root neighbour";
    if (in_l[b]) return "repeated branch root";
    in_l[b] = 1;
    if (part.cls[b] != kClassBranchRoot) return "branch root has the wrong class";
  }
  std::vector<std::size_t> sizes(k, 0);
  for (Vertex v = 0; v < n; ++v) {
    const auto c = part.cls[v];
    if (v == part.root || in_l[v]) continue;
    if (c == kClassRoot || c == kClassBranchRoot) return "stray root class at " + std::to_string(v);
    if (c < k) {
      ++sizes[c];
    } else if (c != kClassU && c != kClassR) {
      return "unknown class at " + std::to_string(v);
    }
  }
  for (std::uint32_t i = 0; i < k; ++i) {
    if (static_cast<double>(sizes[i]) > plan.branch_cap) return "S_" + std::to_string(i) + " above the size cap";
  }
  std::vector<char> touched(k, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (v == part.root) continue;
    std::size_t reservoir = 0;
    for (Vertex u : g.neighbors(v)) reservoir += part.cls[u] == kClassR;
    if (static_cast<double>(reservoir) < plan.reservoir_degree) {
      return "vertex " + std::to_string(v) + " has too few reservoir neighbours";
    }
    // I(v) from scratch: trees of S_i + v_i meeting the closed neighbourhood.
    std::vector<std::uint32_t> expect;
    if (!g.has_edge(v, part.root)) {
      auto own = [&](Vertex x) -> std::uint32_t {
        if (part.cls[x] < k) return part.cls[x];
        if (in_l[x]) {
          return static_cast<std::uint32_t>(
              std::find(part.branch_roots.begin(), part.branch_roots.end(), x) - part.branch_roots.begin());
        }
        return kNoOwner;
      };
      if (own(v) != kNoOwner) touched[own(v)] = 1;
      for (Vertex u : g.neighbors(v)) {
        if (own(u) != kNoOwner) touched[own(u)] = 1;
      }
      for (std::uint32_t i = 0; i < k; ++i) {
        if (!touched[i]) expect.push_back(i);
        touched[i] = 0;
      }
    }
    const auto& cs = part.connectors[v];
    if (cs.size() != expect.size()) return "vertex " + std::to_string(v) + " has the wrong number of connectors";
    std::vector<Vertex> vias;
    for (std::size_t j = 0; j < cs.size(); ++j) {
      const auto& c = cs[j];
      if (c.tree != expect[j]) return "vertex " + std::to_string(v) + " connector indices differ from I(v)";
      if (!g.contains(c.via) || part.cls[c.via] != kClassU || !g.has_edge(v, c.via)) {
        return "vertex " + std::to_string(v) + " connector is not a U-neighbour";
      }
      bool hits = g.has_edge(c.via, part.branch_roots[c.tree]);
      for (Vertex w : g.neighbors(c.via)) hits = hits || part.cls[w] == c.tree;
      if (!hits) return "vertex " + std::to_string(v) + " connector misses its set";
      vias.push_back(c.via);
    }
    std::sort(vias.begin(), vias.end());
    if (std::adjacent_find(vias.begin(), vias.end()) != vias.end()) {
      return "vertex " + std::to_string(v) + " reuses a connector";
    }
  }
  return std::nullopt;
}

}  // namespace istforge
