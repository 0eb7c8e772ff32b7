#include "istforge/connectivity.hpp"

#include <atomic>
#include <vector>

#include "istforge/errors.hpp"

namespace istforge {

namespace {

/// Residual network of the split graph: node 2v is v_in, 2v+1 is v_out.
class SplitNetwork {
 public:
  explicit SplitNetwork(const Graph& g) : n_(g.n()) {
    head_.assign(2 * n_, -1);
    for (Vertex v = 0; v < n_; ++v) add_arc(2 * v, 2 * v + 1, 1);
    for (const auto& [u, v] : g.edges()) {
      add_arc(2 * u + 1, 2 * v, 1);
      add_arc(2 * v + 1, 2 * u, 1);
    }
    base_cap_ = cap_;
  }

  std::size_t max_flow(Vertex s, Vertex t, std::size_t cap) {
    cap_ = base_cap_;
    const int source = static_cast<int>(2 * s + 1);
    const int sink = static_cast<int>(2 * t);
    std::size_t flow = 0;
    std::vector<int> via(2 * n_);
    std::vector<int> queue;
    while (flow < cap) {
      std::fill(via.begin(), via.end(), -1);
      queue.assign(1, source);
      via[source] = -2;
      bool reached = false;
      for (std::size_t h = 0; h < queue.size() && !reached; ++h) {
        const int x = queue[h];
        for (int a = head_[x]; a != -1; a = next_[a]) {
          const int y = to_[a];
          if (cap_[a] > 0 && via[y] == -1) {
            via[y] = a;
            if (y == sink) {
              reached = true;
              break;
            }
            queue.push_back(y);
          }
        }
      }
      if (!reached) break;
      for (int y = sink; y != source;) {
        const int a = via[y];
        --cap_[a];
        ++cap_[a ^ 1];
        y = to_[a ^ 1];
      }
      ++flow;
    }
    return flow;
  }

 private:
  void add_arc(std::size_t from, std::size_t to, int cap) {
    for (int dir = 0; dir < 2; ++dir) {
      const auto x = dir == 0 ? from : to;
      const auto y = dir == 0 ? to : from;
      to_.push_back(static_cast<int>(y));
      cap_.push_back(dir == 0 ? cap : 0);
      next_.push_back(head_[x]);
      head_[x] = static_cast<int>(to_.size() - 1);
    }
  }

  std::size_t n_;
  std::vector<int> head_;
  std::vector<int> next_;
  std::vector<int> to_;
  std::vector<int> cap_;
  std::vector<int> base_cap_;
};

}  // namespace

std::size_t local_vertex_connectivity(const Graph& g, Vertex s, Vertex t, std::size_t cap) {
  if (!g.contains(s) || !g.contains(t)) throw ParameterError("vertex out of range");
  if (s == t || g.has_edge(s, t)) throw ParameterError("local connectivity needs distinct non-adjacent vertices");
  SplitNetwork net(g);
  return net.max_flow(s, t, cap);
}

bool is_connected(const Graph& g) {
  if (g.n() <= 1) return true;
  std::vector<char> seen(g.n(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : g.neighbors(v)) {
      if (!seen[u]) {
        seen[u] = 1;
        ++count;
        stack.push_back(u);
      }
    }
  }
  return count == g.n();
}

bool is_k_connected(const Graph& g, std::size_t k) {
  if (k == 0) throw ParameterError("is_k_connected requires k >= 1");
  const auto n = g.n();
  if (n <= k) return false;
  if (k == 1) return is_connected(g);

  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex i = 0; i < k; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (!g.has_edge(i, j)) pairs.emplace_back(i, j);
    }
  }
  std::atomic<bool> ok{true};
#pragma omp parallel
  {
    SplitNetwork net(g);
#pragma omp for schedule(dynamic, 4)
    for (std::int64_t p = 0; p < static_cast<std::int64_t>(pairs.size()); ++p) {
      if (!ok.load(std::memory_order_relaxed)) continue;
      if (net.max_flow(pairs[p].first, pairs[p].second, k) < k) ok.store(false);
    }
  }
  return ok.load();
}

}  // namespace istforge
