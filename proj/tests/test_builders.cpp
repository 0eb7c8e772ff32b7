#include <doctest.h>

#include <cmath>

#include "istforge/dense_builder.hpp"
#include "istforge/errors.hpp"
#include "istforge/generators.hpp"
#include "istforge/partition.hpp"
#include "istforge/path_system.hpp"
#include "istforge/pseudorandom_builder.hpp"
#include "istforge/reservoir.hpp"
#include "istforge/spanning_family.hpp"
#include "istforge/sparse_builder.hpp"
#include "istforge/spectral.hpp"
#include "oracles.hpp"

using namespace istforge;

namespace {

bool builds_and_verifies(const Graph& g, const BuildResult& res) {
  const auto* ok = std::get_if<BuildSuccess>(&res);
  if (!ok) return false;
  const auto fam = assemble(g, ok->trees, ok->witness);
  return verify_independent(g, fam).ok;
}

Graph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 0; v < n; ++v) e.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return Graph::from_edges(n, e);
}

}  // namespace

TEST_CASE("dense builder on complete graphs") {
  for (std::size_t n : {2, 5, 20}) {
    const Graph k = Graph::complete(n);
    CHECK(builds_and_verifies(k, build_dense(k, 0, n - 1)));
  }
  const Graph k4 = Graph::complete(4);
  CHECK(builds_and_verifies(k4, build_dense(k4, 0, 0)));
  CHECK_THROWS_AS(build_dense(k4, 0, 4), ParameterError);
  CHECK_THROWS_AS(build_dense(k4, 7, 1), ParameterError);
}

TEST_CASE("dense builder names a forced deficiency") {
  // Root 0 with branches 1, 2, 3; vertex 4 only reaches vertex 5.
  const Graph g = Graph::from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {1, 5}, {4, 5}});
  const auto res = build_dense(g, 0, 3);
  REQUIRE(std::holds_alternative<BuildFailure>(res));
  const auto& f = std::get<BuildFailure>(res);
  CHECK(f.stage == FailStage::Niceness);
  CHECK(std::get<NicenessFailure>(f.certificate).vertex == 4);
  CHECK_FALSE(f.diagnostics.empty());
  CHECK(check_failure(g, f));
}

TEST_CASE("dense builder on G(300, 0.5) and determinism") {
  Rng rng(41);
  int good = 0;
  for (int s = 0; s < 5; ++s) {
    const Graph g = gen_gnp(300, 0.5, rng);
    const auto res = build_dense(g, 0, min_degree(g));
    good += builds_and_verifies(g, res);
    const auto again = build_dense(g, 0, min_degree(g));
    REQUIRE(res.index() == again.index());
    if (res.index() == 0) {
      CHECK(std::get<BuildSuccess>(res).witness == std::get<BuildSuccess>(again).witness);
    }
  }
  CHECK(good >= 4);
}

TEST_CASE("path growth examples") {
  const Graph k10 = Graph::complete(10);
  const std::vector<Vertex> starts{2, 5, 7};
  const auto trivial = grow_path_system(k10, starts, 0, {});
  REQUIRE(std::holds_alternative<PathSystem>(trivial));
  for (const auto& p : std::get<PathSystem>(trivial).paths) CHECK(p.size() == 1);

  const std::vector<Vertex> forbidden{0};
  const auto full = grow_path_system(k10, starts, 2, forbidden);
  REQUIRE(std::holds_alternative<PathSystem>(full));
  CHECK_FALSE(check_path_system(k10, std::get<PathSystem>(full), starts, forbidden).has_value());
  CHECK_THROWS_AS(grow_path_system(k10, starts, 3, forbidden), ParameterError);

  // Two leaves of a star compete for the center.
  const Graph star = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
  const std::vector<Vertex> leaves{1, 2};
  const auto stuck = grow_path_system(star, leaves, 1, {});
  REQUIRE(std::holds_alternative<GrowthFailure>(stuck));
  const auto& gf = std::get<GrowthFailure>(stuck);
  CHECK(gf.round == 1);
  CHECK(check_growth_failure(star, gf, {}));
}

TEST_CASE("path growth in G(20000, 30 log n / n) from 50 random starts") {
  const std::size_t n = 20000;
  const double p = 30 * std::log(static_cast<double>(n)) / static_cast<double>(n);
  int good = 0;
  for (std::uint64_t s = 0; s < 50; ++s) {
    Rng rng(4000 + s);
    const Graph g = gen_gnp(n, p, rng);
    std::vector<Vertex> all(n);
    for (Vertex v = 0; v < n; ++v) all[v] = v;
    rng.shuffle(all);
    std::vector<Vertex> starts(all.begin(), all.begin() + 50);
    const auto res = grow_path_system(g, starts, 10, {});
    if (const auto* ps = std::get_if<PathSystem>(&res)) {
      good += !check_path_system(g, *ps, starts, {}).has_value();
    }
  }
  CHECK(good >= 48);
}

TEST_CASE("sparse path length rule") {
  SparseParams sp;
  CHECK(sparse_path_length(30000, 0.0103, 246, sp) == std::min<std::size_t>(
                                                          static_cast<std::size_t>(std::ceil(5 * std::log(30000.0) / (30000 * 0.0103 * 0.0103))),
                                                          30000 / 2460));
  CHECK(sparse_path_length(10, 0.9, 9, sp) == 1);
}

TEST_CASE("sparse builder examples") {
  const Graph k20 = Graph::complete(20);
  CHECK(builds_and_verifies(k20, build_sparse(k20, 3, 5)));
  const Graph c = cycle(8);
  CHECK_THROWS_AS(build_sparse(c, 0, 3), ParameterError);
}

TEST_CASE("sparse builder failures carry checkable certificates") {
  Rng rng(42);
  int failures = 0;
  int successes = 0;
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 10 + rng.below(50);
    const Graph g = gen_gnp(n, 0.15 + 0.5 * rng.uniform(), rng);
    const Vertex r = static_cast<Vertex>(rng.below(n));
    const std::size_t k = g.degree(r) == 0 ? 0 : 1 + rng.below(g.degree(r));
    SparseParams sp;
    sp.path_len_cap_divisor = 1 + 3 * rng.uniform();
    const auto res = build_sparse(g, r, k, sp);
    if (const auto* f = std::get_if<BuildFailure>(&res)) {
      ++failures;
      INFO("instance ", t, " stage ", to_string(f->stage), ": ", f->message);
      CHECK(f->stage != FailStage::None);
      CHECK(check_failure(g, *f));
    } else {
      ++successes;
      CHECK(builds_and_verifies(g, res));
    }
  }
  CHECK(failures > 0);
  CHECK(successes > 0);
}

TEST_CASE("spectral profile of small graphs") {
  const auto k4 = spectral_profile(Graph::complete(4));
  CHECK(k4.lambda == doctest::Approx(1.0));
  CHECK(k4.d == doctest::Approx(3.0));
  CHECK(k4.ratio == doctest::Approx(3.0));
  CHECK(spectral_profile(cycle(6)).lambda == doctest::Approx(2.0));
  CHECK(spectral_profile(cycle(7)).lambda == doctest::Approx(2 * std::cos(M_PI / 7)));
  CHECK_THROWS_AS(spectral_profile(Graph()), ParameterError);
}

TEST_CASE("power iteration matches the eigensolve") {
  Rng rng(43);
  for (int s = 0; s < 3; ++s) {
    const Graph g = gen_random_regular(500, 20, rng);
    const auto exact = spectral_profile(g);
    const auto approx = spectral_profile_iterative(g);
    CHECK_FALSE(approx.exact);
    CHECK(approx.lambda == doctest::Approx(exact.lambda).epsilon(1e-3));
  }
  const auto bip = spectral_profile_iterative(cycle(10));
  CHECK(bip.lambda == doctest::Approx(2.0).epsilon(1e-3));
  const Graph star = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK_FALSE(spectral_profile_iterative(star).warnings.empty());
}

TEST_CASE("random 20-regular graphs on 2000 vertices have lambda below 3 sqrt(20)") {
  int good = 0;
  for (std::uint64_t s = 0; s < 10; ++s) {
    Rng rng(5000 + s);
    const Graph g = gen_random_regular(2000, 20, rng);
    good += spectral_profile(g).lambda <= 3 * std::sqrt(20.0);
  }
  CHECK(good >= 9);
}

TEST_CASE("mixing audit") {
  Rng rng(44);
  const Graph g = gen_random_regular(500, 20, rng);
  const double lambda = spectral_profile(g).lambda;

  std::vector<Vertex> all(g.n());
  for (Vertex v = 0; v < g.n(); ++v) all[v] = v;
  CHECK(edges_between(g, all, all) == 500 * 20);
  const auto nb = g.neighbors(7);
  CHECK(edges_between(g, {7}, std::vector<Vertex>(nb.begin(), nb.end())) == 20);

  const auto rep = mixing_audit(g, lambda, 1000, rng);
  CHECK(rep.trials == 1000);
  CHECK(rep.violations == 0);
  CHECK(rep.max_ratio <= 1.0 + 1e-9);
  CHECK(mixing_audit(g, lambda / 100, 200, rng).violations > 0);
}

TEST_CASE("joined audit on an expander") {
  Rng rng(45);
  const Graph g = gen_random_regular(500, 20, rng);
  const auto rep = joined_audit(g, spectral_profile(g).lambda, 100, rng);
  CHECK(rep.trials == 100);
  CHECK(rep.violations == 0);
}

TEST_CASE("partition plan defaults") {
  PseudoParams pp;
  const auto plan = plan_partition(pp, 2000, 50);
  const double e = pp.internal_epsilon();
  CHECK(plan.reservoir_probability == doctest::Approx(e / 100));
  CHECK(plan.branch_cap == doctest::Approx(std::pow(e, 10) * 2000 / (50 * std::log(50.0))));
  CHECK(plan.max_rounds == 100000);
  CHECK(pseudo_tree_count(0.05, 50) == 48);
  CHECK(pseudo_tree_count(0.1, 50) == 45);
}

TEST_CASE("default constants give an immediate partition failure at desk scale") {
  Rng rng(46);
  const Graph g = gen_random_regular(400, 20, rng);
  PseudoParams pp;
  pp.epsilon = 0.2;
  pp.record_spectrum = false;
  const auto res = build_pseudorandom(g, 0, pp, rng);
  REQUIRE(std::holds_alternative<BuildFailure>(res));
  const auto& f = std::get<BuildFailure>(res);
  CHECK(f.stage == FailStage::Partition);
  const auto& pf = std::get<PartitionFailure>(f.certificate);
  CHECK(pf.rounds == 0);
  CHECK_FALSE(pf.bad_vertices.empty());
  CHECK(pf.reason.find("cap") != std::string::npos);
  CHECK(check_failure(g, f));
}

TEST_CASE("pseudorandom builder on complete graphs") {
  Rng rng(47);
  const Graph k = Graph::complete(30);
  const auto res = build_pseudorandom(k, 0, desk_pseudo_params(0.1), rng);
  REQUIRE(std::holds_alternative<BuildSuccess>(res));
  CHECK(std::get<BuildSuccess>(res).trees.size() == 27);
  CHECK(builds_and_verifies(k, res));
  CHECK_THROWS_AS(build_pseudorandom(k, 0, desk_pseudo_params(0.1), rng, 30), ParameterError);
}

TEST_CASE("partition and connection validators on a sampled expander") {
  Rng rng(48);
  const Graph g = gen_random_regular(1000, 30, rng);
  PseudoParams pp = desk_pseudo_params(0.05);
  pp.branch_probability = 0.02;
  pp.resample_radius = 1;
  pp.max_resample_rounds = 200;
  const auto nb = g.neighbors(0);
  const std::vector<Vertex> branch(nb.begin(), nb.begin() + 4);
  const auto sampled = sample_partition(g, 0, branch, pp, rng);
  REQUIRE(std::holds_alternative<Partition>(sampled));
  const auto& part = std::get<Partition>(sampled);
  const auto plan = plan_partition(pp, g.n(), 30);
  CHECK_FALSE(check_partition(g, part, plan).has_value());
  for (Vertex v = 0; v < g.n(); ++v) {
    CHECK(part.connectors[v].size() == partition_index_set(g, part, v).size());
  }

  Partition broken = part;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (!broken.connectors[v].empty()) {
      broken.connectors[v].clear();
      break;
    }
  }
  CHECK(check_partition(g, broken, plan).has_value());

  const auto connected = connect_through_reservoir(g, part, pp);
  REQUIRE(std::holds_alternative<std::vector<std::vector<Vertex>>>(connected));
  auto paths = std::get<std::vector<std::vector<Vertex>>>(connected);
  CHECK_FALSE(check_connection(g, part, paths).has_value());
  for (std::size_t i = 0; i < paths.size(); ++i) {
    CHECK(std::find(paths[i].begin(), paths[i].end(), part.branch_roots[i]) != paths[i].end());
  }
  if (paths.size() >= 2 && !paths[1].empty()) {
    paths[0].push_back(paths[1].back());
    CHECK(check_connection(g, part, paths).has_value());
  }
}

TEST_CASE("pseudorandom builder end to end at small k") {
  int good = 0;
  for (std::uint64_t s = 0; s < 4; ++s) {
    Rng rng(6000 + s);
    const Graph g = gen_random_regular(1000, 30, rng);
    const auto res = build_pseudorandom(g, 0, desk_pseudo_params(0.05), rng, 8);
    if (const auto* f = std::get_if<BuildFailure>(&res)) {
      CHECK(check_failure(g, *f));
    }
    good += builds_and_verifies(g, res);
  }
  CHECK(good >= 3);
}
