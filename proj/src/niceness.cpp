#include "istforge/niceness.hpp"

#include <algorithm>
#include <atomic>
#include <limits>

#include <omp.h>

namespace istforge {

namespace {

/// Scratch space for one vertex's connector problem; one per thread.
class VertexCertifier {
 public:
  VertexCertifier(const Graph& g, const CoverageIndex& cov)
      : g_(g), cov_(cov), left_of_tree_(cov.tree_count(), kUnset) {}

  /// Fills `out` and returns true, or fills `failure` and returns false.
  bool run(Vertex v, std::vector<Connector>& out, NicenessFailure& failure) {
    out.clear();
    index_ = index_set(cov_, v);
    if (index_.empty()) return true;
    for (std::uint32_t l = 0; l < index_.size(); ++l) left_of_tree_[index_[l]] = l;

    candidates_.clear();
    for (Vertex u : g_.neighbors(v)) {
      if (!cov_.in_any_tree(u)) candidates_.push_back(u);
    }

    // Edge list grouped by left vertex via counting sort; right ids ascend
    // within each group because candidates are scanned in order.
    pairs_.clear();
    for (std::uint32_t r = 0; r < candidates_.size(); ++r) {
      const Vertex u = candidates_[r];
      if (cov_.touches_all(u)) {
        for (std::uint32_t l = 0; l < index_.size(); ++l) pairs_.emplace_back(l, r);
      } else {
        for (auto i : cov_.touched(u)) {
          const auto l = left_of_tree_[i];
          if (l != kUnset) pairs_.emplace_back(l, r);
        }
      }
    }
    offsets_.assign(index_.size() + 1, 0);
    for (const auto& [l, r] : pairs_) ++offsets_[l + 1];
    for (std::size_t l = 0; l < index_.size(); ++l) offsets_[l + 1] += offsets_[l];
    targets_.resize(pairs_.size());
    cursor_.assign(offsets_.begin(), offsets_.end() - 1);
    for (const auto& [l, r] : pairs_) targets_[cursor_[l]++] = r;

    for (auto i : index_) left_of_tree_[i] = kUnset;

    const auto size = engine_.solve(index_.size(), candidates_.size(), offsets_, targets_);
    if (size == index_.size()) {
      const auto mates = engine_.mate_of_left();
      out.reserve(index_.size());
      for (std::uint32_t l = 0; l < index_.size(); ++l) out.push_back({index_[l], candidates_[mates[l]]});
      return true;
    }
    failure.vertex = v;
    failure.violator.side = Side::Left;
    engine_.extract_violator(failure.violator.set, failure.violator.neighborhood);
    for (auto& l : failure.violator.set) l = index_[l];
    for (auto& r : failure.violator.neighborhood) r = candidates_[r];
    return false;
  }

 private:
  static constexpr std::uint32_t kUnset = UINT32_MAX;

  const Graph& g_;
  const CoverageIndex& cov_;
  std::vector<std::uint32_t> left_of_tree_;
  std::vector<std::uint32_t> index_;
  std::vector<Vertex> candidates_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs_;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> cursor_;
  std::vector<std::uint32_t> targets_;
  MatchingEngine engine_;
};

}  // namespace

CertifyResult certify_nice_serial(const Graph& g, const TreeCollection& tc) {
  validate_collection(g, tc);
  const CoverageIndex cov(g, tc);
  VertexCertifier certifier(g, cov);
  NicenessWitness w;
  w.connectors.resize(g.n());
  NicenessFailure failure;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (!certifier.run(v, w.connectors[v], failure)) return failure;
  }
  return w;
}

CertifyResult certify_nice(const Graph& g, const TreeCollection& tc) {
  validate_collection(g, tc);
  const CoverageIndex cov(g, tc);
  NicenessWitness w;
  w.connectors.resize(g.n());
  const auto n = static_cast<std::int64_t>(g.n());

  // Vertices above the smallest known failure are skipped; the final
  // answer is the minimum failing vertex, as in the serial scan.
  std::atomic<std::int64_t> first_failure{std::numeric_limits<std::int64_t>::max()};
  NicenessFailure best;
  best.vertex = kNoVertex;

#pragma omp parallel
  {
    VertexCertifier certifier(g, cov);
    NicenessFailure local;
    NicenessFailure local_best;
    local_best.vertex = kNoVertex;
#pragma omp for schedule(dynamic, 32)
    for (std::int64_t v = 0; v < n; ++v) {
      if (v > first_failure.load(std::memory_order_relaxed)) continue;
      if (!certifier.run(static_cast<Vertex>(v), w.connectors[v], local)) {
        if (local_best.vertex == kNoVertex || local.vertex < local_best.vertex) local_best = local;
        std::int64_t cur = first_failure.load();
        while (v < cur && !first_failure.compare_exchange_weak(cur, v)) {
        }
      }
    }
#pragma omp critical(istforge_certify_merge)
    {
      if (local_best.vertex != kNoVertex && (best.vertex == kNoVertex || local_best.vertex < best.vertex)) {
        best = std::move(local_best);
      }
    }
  }
  if (best.vertex != kNoVertex) return best;
  return w;
}

std::optional<std::string> check_witness(const Graph& g, const TreeCollection& tc, const NicenessWitness& w) {
  if (w.connectors.size() != g.n()) return "witness has wrong vertex count";
  const auto member = tree_membership(g, tc);
  std::vector<char> in_tree(g.n(), 0);
  for (Vertex x = 0; x < g.n(); ++x) in_tree[x] = member[x] != kNoTree;

  std::vector<std::uint32_t> stamp(g.n(), kNoTree);
  for (Vertex v = 0; v < g.n(); ++v) {
    // Recompute I(v) directly from the definition.
    std::vector<std::uint32_t> expected;
    for (std::uint32_t i = 0; i < tc.size(); ++i) {
      bool near = false;
      for (Vertex y : tc.trees[i].vertices) {
        if (y == v || g.has_edge(y, v)) {
          near = true;
          break;
        }
      }
      if (!near) expected.push_back(i);
    }
    const auto& conns = w.connectors[v];
    std::vector<std::uint32_t> got;
    for (const auto& c : conns) got.push_back(c.tree);
    if (got != expected) return "vertex " + std::to_string(v) + ": connector indices differ from I(v)";
    for (const auto& c : conns) {
      if (!g.contains(c.via)) return "vertex " + std::to_string(v) + ": connector out of range";
      if (stamp[c.via] == v) return "vertex " + std::to_string(v) + ": connector reused";
      stamp[c.via] = v;
      if (in_tree[c.via]) return "vertex " + std::to_string(v) + ": connector lies in a tree";
      if (!g.has_edge(v, c.via)) return "vertex " + std::to_string(v) + ": connector not adjacent";
      bool reaches = false;
      for (Vertex y : tc.trees[c.tree].vertices) {
        if (g.has_edge(c.via, y)) {
          reaches = true;
          break;
        }
      }
      if (!reaches) return "vertex " + std::to_string(v) + ": connector has no edge into its tree";
    }
  }
  return std::nullopt;
}

bool check_niceness_failure(const Graph& g, const TreeCollection& tc, const NicenessFailure& f) {
  if (!g.contains(f.vertex)) return false;
  const auto member = tree_membership(g, tc);
  const auto index = index_set(g, tc, f.vertex);
  const auto& set = f.violator.set;
  if (set.empty()) return false;
  for (auto i : set) {
    if (!std::binary_search(index.begin(), index.end(), i)) return false;
  }
  std::vector<Vertex> nb;
  for (Vertex u : g.neighbors(f.vertex)) {
    if (member[u] != kNoTree) continue;
    bool hits = false;
    for (auto i : set) {
      for (Vertex y : tc.trees[i].vertices) {
        if (g.has_edge(u, y)) {
          hits = true;
          break;
        }
      }
      if (hits) break;
    }
    if (hits) nb.push_back(u);
  }
  return nb == f.violator.neighborhood && nb.size() < set.size();
}

}  // namespace istforge
