// Runs every primary acceptance criterion at its stated size and tolerance
// and prints one PASS/FAIL line each. Optional arguments select criteria by
// name. Exit status is nonzero when any selected criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "istforge/dense_builder.hpp"
#include "istforge/experiment.hpp"
#include "istforge/generators.hpp"
#include "istforge/matching.hpp"
#include "istforge/pseudorandom_builder.hpp"
#include "istforge/spanning_family.hpp"
#include "istforge/sparse_builder.hpp"
#include "istforge/spectral.hpp"
#include "oracles.hpp"

using namespace istforge;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

bool success_verifies(const Graph& g, const BuildResult& res) {
  const auto& ok = std::get<BuildSuccess>(res);
  return verify_independent(g, assemble(g, ok.trees, ok.witness)).ok;
}

Verdict master_soundness() {
  Rng rng(0x5eed);
  std::size_t instances = 0, successes = 0, unsound = 0;
  std::size_t per_algo[3] = {0, 0, 0};
  for (int t = 0; t < 1200; ++t) {
    const std::size_t n = 4 + rng.below(57);
    Graph g;
    if (t % 3 == 2 && n >= 6) {
      std::size_t d = 3 + rng.below(std::min<std::size_t>(n - 5, 20));
      if (n * d % 2) ++d;
      if (d >= n) continue;
      g = gen_random_regular(n, d, rng);
    } else {
      g = gen_gnp(n, 0.1 + 0.85 * rng.uniform(), rng);
    }
    const Vertex r = static_cast<Vertex>(rng.below(n));
    if (g.degree(r) == 0) continue;
    const std::size_t k = 1 + rng.below(g.degree(r));
    ++instances;
    for (int a = 0; a < 3; ++a) {
      BuildResult res;
      if (a == 0) {
        res = build_dense(g, r, k);
      } else if (a == 1) {
        SparseParams sp;
        sp.path_len_cap_divisor = 1 + 4 * rng.uniform();
        res = build_sparse(g, r, k, sp);
      } else {
        res = build_pseudorandom(g, r, desk_pseudo_params(0.1), rng, k);
      }
      if (!std::holds_alternative<BuildSuccess>(res)) continue;
      ++successes;
      ++per_algo[a];
      unsound += !success_verifies(g, res);
    }
  }
  return {instances >= 1000 && unsound == 0,
          fmt("%zu instances, %zu successes (dense %zu, sparse %zu, pseudo %zu), %zu unsound", instances, successes,
              per_algo[0], per_algo[1], per_algo[2], unsound)};
}

Verdict matching_oracle() {
  Rng rng(0xb1);
  std::size_t mismatches = 0, bad_certs = 0;
  for (int t = 0; t < 500; ++t) {
    const BipartiteGraph b =
        gen_bipartite_gnp(1 + rng.below(7), 1 + rng.below(7), 0.1 + 0.6 * rng.uniform(), rng);
    mismatches += max_matching(b).size() != oracle::max_matching(b.left_size(), b.right_size(), b.edges());
    for (Side side : {Side::Left, Side::Right}) {
      const auto res = saturating_or_violator(b, side);
      const bool ok = std::holds_alternative<Matching>(res)
                          ? is_matching_of(b, std::get<Matching>(res)) && saturates(b, std::get<Matching>(res), side)
                          : is_violator_of(b, std::get<HallViolator>(res));
      bad_certs += !ok;
    }
  }
  return {mismatches == 0 && bad_certs == 0,
          fmt("500 instances, %zu cardinality mismatches, %zu invalid certificates", mismatches, bad_certs)};
}

Verdict perfect_matchings() {
  const double p = 40 * std::log(500.0) / 500;
  std::size_t perfect = 0;
  for (std::uint64_t s = 0; s < 100; ++s) {
    Rng rng(Rng(0x22).split(s).seed());
    perfect += max_matching(gen_bipartite_gnp(500, 500, p, rng)).size() == 500;
  }
  return {perfect == 100, fmt("%zu/100 perfect matchings at p=%.4f", perfect, p)};
}

Verdict min_degree_band() {
  const std::size_t n = 30000;
  const double p = 30 * std::log(static_cast<double>(n)) / static_cast<double>(n);
  const double np = static_cast<double>(n) * p;
  const double band = 1.5 * std::sqrt(2 * np * (1 - p) * std::log(static_cast<double>(n)));
  std::size_t inside = 0;
  std::size_t lo = SIZE_MAX, hi = 0;
  for (std::uint64_t s = 0; s < 20; ++s) {
    Rng rng(Rng(0x21a).split(s).seed());
    const std::size_t delta = min_degree(gen_gnp(n, p, rng));
    lo = std::min(lo, delta);
    hi = std::max(hi, delta);
    inside += std::abs(static_cast<double>(delta) - np) <= band;
  }
  return {inside >= 19, fmt("%zu/20 within %.1f +- %.1f (delta range %zu..%zu)", inside, np, band, lo, hi)};
}

Verdict mixing_lemma() {
  std::size_t violations = 0;
  double worst = 0;
  for (std::uint64_t s = 0; s < 5; ++s) {
    Rng rng(Rng(0xe31).split(s).seed());
    const Graph g = gen_random_regular(500, 20, rng);
    const auto prof = spectral_profile(g);
    const auto rep = mixing_audit(g, prof.lambda, 10000, rng);
    violations += rep.violations;
    worst = std::max(worst, rep.max_ratio);
  }
  return {violations == 0, fmt("5 graphs x 10000 pairs, %zu violations, max ratio %.3f", violations, worst)};
}

struct Tally {
  std::size_t rows = 0, verified = 0, failures = 0, staged = 0, certified = 0;
  std::map<std::string, std::size_t> stages;
};

Tally tally(const std::vector<TrialOutcome>& out) {
  Tally t;
  for (const auto& o : out) {
    ++t.rows;
    t.verified += o.record.verified;
    if (!o.record.built) {
      ++t.failures;
      t.staged += o.record.fail_stage != FailStage::None;
      t.certified += o.certificate_ok;
      ++t.stages[to_string(o.record.fail_stage)];
    }
  }
  return t;
}

std::string stage_summary(const Tally& t) {
  std::string s;
  for (const auto& [k, v] : t.stages) s += (s.empty() ? " [" : ", ") + k + " " + std::to_string(v);
  return s.empty() ? s : s + "]";
}

std::vector<TrialOutcome> run(const ExperimentConfig& c) {
  validate_config(c);
  std::ostringstream sink;
  return run_experiment(c, sink);
}

Verdict dense_target() {
  bool pass = true;
  std::string detail;
  for (double p : {0.3, 0.5}) {
    ExperimentConfig c;
    c.model = Model::Gnp;
    c.n = {1000};
    c.p = {p};
    c.roots_per_graph = 3;
    c.seeds_per_cell = 20;
    c.seed = 0xde5;
    c.algo = Algo::Dense;
    const auto t = tally(run(c));
    const double rate = static_cast<double>(t.verified) / static_cast<double>(t.rows);
    pass = pass && t.rows == 60 && rate >= 0.95;
    detail += fmt("%sp=%.1f: %zu/%zu verified (%.1f%%)", detail.empty() ? "" : "; ", p, t.verified, t.rows,
                  100 * rate) +
              stage_summary(t);
  }
  return {pass, detail};
}

Verdict sparse_target() {
  const std::size_t n = 30000;
  ExperimentConfig c;
  c.model = Model::Gnp;
  c.n = {n};
  c.p = {30 * std::log(static_cast<double>(n)) / static_cast<double>(n)};
  c.roots_per_graph = 1;
  c.seeds_per_cell = 20;
  c.seed = 0x5fa;
  c.algo = Algo::Sparse;
  const auto t = tally(run(c));
  const double rate = static_cast<double>(t.verified) / static_cast<double>(t.rows);
  const bool certified = t.staged == t.failures && t.certified == t.failures;
  return {rate >= 0.8 && certified,
          fmt("%zu/%zu verified (%.0f%%), %zu/%zu failures staged with re-validated certificates", t.verified,
              t.rows, 100 * rate, t.certified, t.failures) +
              stage_summary(t)};
}

ExperimentConfig pseudo_config(std::size_t k) {
  ExperimentConfig c;
  c.model = Model::Regular;
  c.n = {2000};
  c.d = {50};
  c.roots_per_graph = 1;
  c.seeds_per_cell = 10;
  c.seed = 0x95e;
  c.algo = Algo::Pseudo;
  c.k_policy = KPolicy::Fixed;
  c.k_fixed = k;
  c.pseudo = desk_pseudo_params(0.05);
  return c;
}

Verdict pseudo_target() {
  const auto t = tally(run(pseudo_config(47)));
  const double rate = static_cast<double>(t.verified) / static_cast<double>(t.rows);
  const bool validators = t.stages.count("other") == 0;
  return {rate >= 0.8 && validators,
          fmt("k=47: %zu/%zu verified (%.0f%%)", t.verified, t.rows, 100 * rate) + stage_summary(t)};
}

Verdict determinism() {
  ExperimentConfig c;
  c.model = Model::Gnp;
  c.n = {200, 400};
  c.p = {0.05, 0.3};
  c.roots_per_graph = 2;
  c.seeds_per_cell = 3;
  c.seed = 0xd37;
  c.algo = Algo::Auto;
  c.timing = false;
  auto csv = [&](int workers) {
    c.workers = workers;
    std::ostringstream os;
    run_experiment(c, os);
    return os.str();
  };
  const std::string a = csv(1), b = csv(1), w8 = csv(8);
  return {a == b && a == w8, fmt("%zu bytes; repeat %s, workers 1 vs 8 %s", a.size(), a == b ? "identical" : "DIFFER",
                                 a == w8 ? "identical" : "DIFFER")};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"master-soundness", master_soundness},
      {"matching-oracle", matching_oracle},
      {"bipartite-perfect-matching", perfect_matchings},
      {"min-degree-band", min_degree_band},
      {"mixing-lemma-audit", mixing_lemma},
      {"dense-target", dense_target},
      {"sparse-target", sparse_target},
      {"pseudorandom-target", pseudo_target},
      {"determinism", determinism},
  };
  std::vector<std::string> wanted(argv + 1, argv + argc);
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), name) == wanted.end()) continue;
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = fn();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %s: %s (%.1f s)\n", v.pass ? "PASS" : "FAIL", name.c_str(), v.detail.c_str(), secs);
    std::fflush(stdout);
    failed += !v.pass;
  }
  if (wanted.empty() || std::find(wanted.begin(), wanted.end(), "pseudorandom-target") != wanted.end()) {
    const auto t = tally(run(pseudo_config(25)));
    std::printf("INFO pseudorandom k=25 (same graphs and parameters): %zu/%zu verified%s\n", t.verified, t.rows,
                stage_summary(t).c_str());
  }
  return failed == 0 ? 0 : 1;
}
