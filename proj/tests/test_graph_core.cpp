#include <doctest.h>

#include <cmath>
#include <numeric>
#include <sstream>

#include "istforge/connectivity.hpp"
#include "istforge/edge_list.hpp"
#include "istforge/errors.hpp"
#include "istforge/generators.hpp"
#include "istforge/graph.hpp"
#include "oracles.hpp"

using namespace istforge;

namespace {

Graph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph::from_edges(n, e);
}

Graph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 0; v < n; ++v) e.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return Graph::from_edges(n, e);
}

Graph star(std::size_t leaves) {
  std::vector<Edge> e;
  for (Vertex v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return Graph::from_edges(leaves + 1, e);
}

std::size_t degree_sum(const Graph& g) {
  std::size_t s = 0;
  for (Vertex v = 0; v < g.n(); ++v) s += g.degree(v);
  return s;
}

std::string serialize(const Graph& g) {
  std::ostringstream os;
  write_edge_list(g, os);
  return os.str();
}

}  // namespace

TEST_CASE("graph construction rejects loops, duplicates and bad ids") {
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), ParameterError);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), ParameterError);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), ParameterError);
  const Graph g = Graph::from_edges(4, {{2, 1}, {0, 3}, {1, 0}});
  CHECK(g.m() == 3);
  CHECK(g.has_edge(1, 2));
  CHECK(g.has_edge(2, 1));
  CHECK_FALSE(g.has_edge(2, 3));
  const auto n1 = g.neighbors(1);
  CHECK(std::vector<Vertex>(n1.begin(), n1.end()) == std::vector<Vertex>{0, 2});
  CHECK_THROWS_AS(g.neighbors(4), ParameterError);
}

TEST_CASE("gen_gnp small cases") {
  Rng rng(1);
  CHECK(gen_gnp(1, 0.7, rng).m() == 0);
  CHECK(gen_gnp(0, 0.7, rng).n() == 0);
  const Graph k4 = gen_gnp(4, 1.0, rng);
  CHECK(k4.m() == 6);
  CHECK(gen_gnp(50, 0.0, rng).m() == 0);
  CHECK_THROWS_AS(gen_gnp(5, 1.5, rng), ParameterError);
  CHECK_THROWS_AS(gen_gnp(5, -0.1, rng), ParameterError);
}

TEST_CASE("gen_gnp edge count stays within four sigma of the binomial mean") {
  for (double p : {0.1, 0.5}) {
    const double pairs = 1000.0 * 999.0 / 2.0;
    double total = 0;
    for (std::uint64_t s = 0; s < 50; ++s) {
      Rng rng(1000 + s);
      const Graph g = gen_gnp(1000, p, rng);
      CHECK(degree_sum(g) == 2 * g.m());
      total += static_cast<double>(g.m());
    }
    const double mean = total / 50.0;
    const double sigma_of_mean = std::sqrt(pairs * p * (1 - p) / 50.0);
    CHECK(std::abs(mean - pairs * p) <= 4 * sigma_of_mean);
  }
}

TEST_CASE("gen_gnp mean edge count at p = 0.5 lies in the documented band") {
  double total = 0;
  for (std::uint64_t s = 0; s < 50; ++s) {
    Rng rng(77 + s);
    total += static_cast<double>(gen_gnp(1000, 0.5, rng).m());
  }
  CHECK(std::abs(total / 50.0 - 249750.0) <= 2000.0);
}

TEST_CASE("gen_gnp is deterministic per seed") {
  Rng a(42), b(42), c(43);
  const Graph ga = gen_gnp(300, 0.05, a);
  const Graph gb = gen_gnp(300, 0.05, b);
  const Graph gc = gen_gnp(300, 0.05, c);
  CHECK(serialize(ga) == serialize(gb));
  CHECK(serialize(ga) != serialize(gc));
}

TEST_CASE("gen_bipartite_gnp") {
  Rng rng(3);
  CHECK(gen_bipartite_gnp(3, 0, 0.9, rng).edges().empty());
  CHECK(gen_bipartite_gnp(2, 2, 1.0, rng).edges().size() == 4);
  CHECK_THROWS_AS(gen_bipartite_gnp(2, 2, 2.0, rng), ParameterError);
  double total = 0;
  for (std::uint64_t s = 0; s < 50; ++s) {
    Rng r(500 + s);
    total += static_cast<double>(gen_bipartite_gnp(500, 500, 0.5, r).edges().size());
  }
  CHECK(std::abs(total / 50.0 - 125000.0) <= 1500.0);
}

TEST_CASE("gen_random_regular") {
  Rng rng(9);
  const Graph k4 = gen_random_regular(4, 3, rng);
  CHECK(k4 == Graph::complete(4));
  const Graph c = gen_random_regular(6, 2, rng);
  for (Vertex v = 0; v < 6; ++v) CHECK(c.degree(v) == 2);
  CHECK_THROWS_AS(gen_random_regular(5, 3, rng), ParameterError);
  CHECK_THROWS_AS(gen_random_regular(100, 101, rng), ParameterError);
  CHECK_THROWS_AS(gen_random_regular(10, 10, rng), ParameterError);
  for (std::uint64_t s = 0; s < 5; ++s) {
    Rng r(s);
    const Graph g = gen_random_regular(500, 20, r);
    CHECK(is_regular(g));
    CHECK(g.degree(0) == 20);
    CHECK(degree_sum(g) == 2 * g.m());
  }
  Rng a(5), b(5);
  CHECK(gen_random_regular(200, 7 * 2, a) == gen_random_regular(200, 14, b));
}

TEST_CASE("degree utilities") {
  const Graph k4 = Graph::complete(4);
  CHECK(min_degree(k4) == 3);
  CHECK(max_degree(k4) == 3);
  CHECK(common_neighbors(k4, 0, 1) == 2);
  const Graph s = star(5);
  CHECK(min_degree(s) == 1);
  CHECK(max_degree(s) == 5);
  CHECK_THROWS_AS(common_neighbors(k4, 0, 9), ParameterError);
  CHECK(low_degree_set(k4, 3).empty());
  CHECK(low_degree_set(path_graph(3), 2) == std::vector<Vertex>{0, 2});
  CHECK(edge_density(k4) == doctest::Approx(1.0));
  CHECK(outer_neighborhood(path_graph(5), std::vector<Vertex>{1, 2}) == std::vector<Vertex>{0, 3});
}

TEST_CASE("low-degree threshold with and without the variance factor") {
  const double a = low_degree_threshold(10000, 0.01, 0.9, false);
  const double b = low_degree_threshold(10000, 0.01, 0.9, true);
  CHECK(a == doctest::Approx(100.0 - 0.9 * std::sqrt(2 * 100.0 * std::log(10000.0))));
  CHECK(b > a);
}

TEST_CASE("low-degree set of G(10^4, 0.01) has at most n^0.2 vertices in most samples") {
  const std::size_t n = 10000;
  const double p = 0.01;
  int good = 0;
  for (std::uint64_t s = 0; s < 100; ++s) {
    Rng rng(2000 + s);
    const Graph g = gen_gnp(n, p, rng);
    good += low_degree_set(g, low_degree_threshold(n, p, 0.9, false)).size() <= 6;
  }
  CHECK(good >= 95);
}

TEST_CASE("low-degree set is independent at p = 30 log n / n") {
  const std::size_t n = 10000;
  const double p = 30 * std::log(static_cast<double>(n)) / static_cast<double>(n);
  int good = 0;
  for (std::uint64_t s = 0; s < 100; ++s) {
    Rng rng(3000 + s);
    const Graph g = gen_gnp(n, p, rng);
    const auto low = low_degree_set(g, low_degree_threshold(n, p, 0.9, false));
    bool independent = true;
    for (std::size_t i = 0; i < low.size(); ++i) {
      for (std::size_t j = i + 1; j < low.size(); ++j) independent = independent && !g.has_edge(low[i], low[j]);
    }
    good += independent;
  }
  CHECK(good >= 95);
}

TEST_CASE("is_k_connected examples") {
  CHECK(is_k_connected(Graph::complete(5), 4));
  CHECK_FALSE(is_k_connected(Graph::complete(5), 5));
  CHECK(is_k_connected(cycle(5), 2));
  CHECK_FALSE(is_k_connected(cycle(5), 3));
  CHECK_FALSE(is_k_connected(star(4), 2));
  CHECK(is_k_connected(star(4), 1));
  CHECK_FALSE(is_k_connected(Graph::from_edges(4, {{0, 1}, {2, 3}}), 1));
  CHECK_THROWS_AS(is_k_connected(cycle(5), 0), ParameterError);
}

TEST_CASE("is_k_connected agrees with cut enumeration on small random graphs") {
  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2 + rng.below(8);
    const double p = 0.2 + 0.7 * rng.uniform();
    const Graph g = gen_gnp(n, p, rng);
    for (std::size_t k = 1; k <= 5; ++k) {
      INFO("instance ", t, " n=", n, " k=", k);
      CHECK(is_k_connected(g, k) == oracle::k_connected(g, k));
    }
  }
}

TEST_CASE("local vertex connectivity matches Menger on small graphs") {
  const Graph c = cycle(6);
  CHECK(local_vertex_connectivity(c, 0, 3, 10) == 2);
  const Graph k = Graph::complete(6);
  CHECK_THROWS_AS(local_vertex_connectivity(k, 0, 1, 10), ParameterError);
}

TEST_CASE("edge-list round trip and parse errors") {
  std::istringstream in("3 2\n0 1\n1 2");
  const Graph p = read_edge_list(in);
  CHECK(p == path_graph(3));

  Rng rng(4);
  const Graph g = gen_gnp(120, 0.1, rng);
  std::istringstream back(serialize(g));
  CHECK(read_edge_list(back) == g);
  CHECK(serialize(g).rfind("120 ", 0) == 0);

  auto fails_at = [](const std::string& text, std::size_t line) {
    std::istringstream s(text);
    try {
      read_edge_list(s);
    } catch (const ParseError& e) {
      return e.line() == line;
    }
    return false;
  };
  CHECK(fails_at("2 1\n0 0\n", 2));
  CHECK(fails_at("3 2\n0 1\n0 1\n", 3));
  CHECK(fails_at("3 1\n0 5\n", 2));
  CHECK(fails_at("3 1\n0  1\n", 2));
  CHECK(fails_at("3 1\nzero one\n", 2));
  CHECK(fails_at("3 2\n0 1\n", 2));
  CHECK(fails_at("x\n", 1));
}
