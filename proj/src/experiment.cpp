#include "istforge/experiment.hpp"

#include <omp.h>

#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <csignal>
#include <cstdlib>
#include <json.hpp>
#include <mutex>
#include <ostream>
#include <set>

#include "istforge/dense_builder.hpp"
#include "istforge/edge_list.hpp"
#include "istforge/errors.hpp"
#include "istforge/generators.hpp"
#include "istforge/pseudorandom_builder.hpp"
#include "istforge/spanning_family.hpp"
#include "istforge/spectral.hpp"

namespace istforge {

using nlohmann::json;

std::string to_string(Algo a) {
  switch (a) {
    case Algo::Dense: return "dense";
    case Algo::Sparse: return "sparse";
    case Algo::Pseudo: return "pseudo";
    case Algo::Auto: return "auto";
  }
  return "auto";
}

Algo parse_algo(const std::string& s) {
  if (s == "dense") return Algo::Dense;
  if (s == "sparse") return Algo::Sparse;
  if (s == "pseudo") return Algo::Pseudo;
  if (s == "auto") return Algo::Auto;
  throw ParameterError("unknown algo '" + s + "'");
}

Algo choose_algo(const Graph& g) {
  const std::size_t n = g.n();
  if (n >= 2 && g.m() > 0 && is_regular(g)) {
    const auto prof = spectral_profile(g);
    if (prof.ratio >= 4.0) return Algo::Pseudo;
  }
  const double p = edge_density(g);
  const double nd = static_cast<double>(std::max<std::size_t>(n, 2));
  const double cut = std::min(std::log(nd) * std::log(nd) / std::sqrt(nd), 0.05);
  return p >= cut ? Algo::Dense : Algo::Sparse;
}

BuildResult run_builder(const Graph& g, Vertex r, Algo algo, std::size_t k, const SparseParams& sparse,
                        const PseudoParams& pseudo, Rng& rng) {
  if (algo == Algo::Auto) algo = choose_algo(g);
  switch (algo) {
    case Algo::Dense: return build_dense(g, r, k);
    case Algo::Sparse: return build_sparse(g, r, k, sparse);
    case Algo::Pseudo: return build_pseudorandom(g, r, pseudo, rng, k);
    case Algo::Auto: break;
  }
  throw ParameterError("unresolved algo");
}

std::size_t resolve_k(const Graph& g, Vertex r, KPolicy policy, std::size_t fixed, double epsilon) {
  switch (policy) {
    case KPolicy::Delta: return min_degree(g);
    case KPolicy::Fixed: return fixed;
    case KPolicy::OneMinusEps: return pseudo_tree_count(epsilon, g.degree(r));
  }
  return 0;
}

namespace {

template <typename T>
void take(const json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

template <typename T>
void take(const json& j, const char* key, std::optional<T>& out) {
  if (j.contains(key) && !j.at(key).is_null()) out = j.at(key).get<T>();
}

void reject_unknown(const json& j, std::initializer_list<const char*> known, const std::string& where) {
  if (!j.is_object()) throw ParameterError(where + " must be a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : known) ok = ok || it.key() == k;
    if (!ok) throw ParameterError("unknown key '" + it.key() + "' in " + where);
  }
}

SparseParams sparse_from(const json& j) {
  reject_unknown(j, {"low_degree_factor", "low_degree_variance", "path_len_factor", "path_len_cap_divisor", "p_estimate"},
                 "sparse parameters");
  SparseParams s;
  take(j, "low_degree_factor", s.low_degree_factor);
  take(j, "low_degree_variance", s.low_degree_variance);
  take(j, "path_len_factor", s.path_len_factor);
  take(j, "path_len_cap_divisor", s.path_len_cap_divisor);
  take(j, "p_estimate", s.p_estimate);
  if (!(s.low_degree_factor > 0 && s.path_len_factor > 0 && s.path_len_cap_divisor > 0)) {
    throw ParameterError("sparse parameters must be positive");
  }
  return s;
}

PseudoParams pseudo_from(const json& j) {
  reject_unknown(j,
                 {"epsilon", "branch_probability", "reservoir_probability", "branch_cap", "reservoir_degree",
                  "max_resample_rounds", "growth_budget", "growth_retries", "resample_radius",
                  "restrict_candidates", "record_spectrum", "certify_final", "preset"},
                 "pseudo parameters");
  PseudoParams p;
  take(j, "epsilon", p.epsilon);
  if (j.contains("preset")) {
    if (j["preset"] != "desk") throw ParameterError("unknown pseudo preset " + j["preset"].dump());
    p = desk_pseudo_params(p.epsilon);
  }
  take(j, "branch_probability", p.branch_probability);
  take(j, "reservoir_probability", p.reservoir_probability);
  take(j, "branch_cap", p.branch_cap);
  take(j, "reservoir_degree", p.reservoir_degree);
  take(j, "max_resample_rounds", p.max_resample_rounds);
  take(j, "growth_budget", p.growth_budget);
  take(j, "growth_retries", p.growth_retries);
  take(j, "resample_radius", p.resample_radius);
  take(j, "restrict_candidates", p.restrict_candidates);
  take(j, "record_spectrum", p.record_spectrum);
  take(j, "certify_final", p.certify_final);
  if (!(p.epsilon > 0 && p.epsilon < 1)) throw ParameterError("epsilon must lie in (0, 1)");
  if (p.growth_retries < 0 || p.resample_radius < 0) throw ParameterError("retries and radius must be non-negative");
  if (p.growth_budget && *p.growth_budget == 0) throw ParameterError("growth budget must be positive");
  return p;
}

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParameterError(what + ": " + e.what());
  }
}

template <typename F>
auto wrap_json(F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ParameterError(std::string("bad value: ") + e.what());
  }
}

std::string format_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::uint64_t graph_seed(const ExperimentConfig& c, std::size_t index) {
  const std::size_t cell = index / c.seeds_per_cell;
  const std::size_t s = index % c.seeds_per_cell;
  return Rng(c.seed).split(cell).split(s).seed();
}

std::size_t cell_count(const ExperimentConfig& c) {
  switch (c.model) {
    case Model::Gnp: return c.n.size() * c.p.size();
    case Model::Regular: return c.n.size() * c.d.size();
    case Model::File: return 1;
  }
  return 0;
}

std::vector<Vertex> pick_roots(std::size_t n, std::size_t count, Rng rng) {
  std::vector<Vertex> roots;
  if (count >= n) {
    for (Vertex v = 0; v < n; ++v) roots.push_back(v);
    return roots;
  }
  std::set<Vertex> seen;
  while (roots.size() < count) {
    const auto v = static_cast<Vertex>(rng.below(n));
    if (seen.insert(v).second) roots.push_back(v);
  }
  return roots;
}

volatile std::sig_atomic_t g_interrupted = 0;

extern "C" void on_sigint(int) { g_interrupted = 1; }

std::vector<TrialOutcome> run_on(const ExperimentConfig& c, std::size_t index, const Graph* preloaded) {
  const std::size_t cell = index / c.seeds_per_cell;
  const std::uint64_t seed = graph_seed(c, index);
  Graph g;
  double p_or_d = 0;
  switch (c.model) {
    case Model::Gnp: {
      const std::size_t n = c.n[cell / c.p.size()];
      p_or_d = c.p[cell % c.p.size()];
      Rng rng(seed);
      g = gen_gnp(n, p_or_d, rng);
      break;
    }
    case Model::Regular: {
      const std::size_t n = c.n[cell / c.d.size()];
      const std::size_t d = c.d[cell % c.d.size()];
      p_or_d = static_cast<double>(d);
      Rng rng(seed);
      g = gen_random_regular(n, d, rng);
      break;
    }
    case Model::File:
      g = preloaded ? *preloaded : read_edge_list(c.file);
      p_or_d = edge_density(g);
      break;
  }

  const std::size_t delta = g.n() ? min_degree(g) : 0;
  const Algo algo = c.algo == Algo::Auto ? choose_algo(g) : c.algo;
  const auto roots = pick_roots(g.n(), c.roots_per_graph, Rng(seed).split(0));

  std::vector<TrialOutcome> out;
  for (std::size_t j = 0; j < roots.size(); ++j) {
    TrialOutcome t;
    auto& r = t.record;
    r.run_id = index * c.roots_per_graph + j;
    r.algo = to_string(algo);
    r.n = g.n();
    r.p_or_d = p_or_d;
    r.seed = seed;
    r.root = roots[j];
    r.delta_g = delta;
    r.k_target = resolve_k(g, roots[j], c.k_policy, c.k_fixed, c.pseudo.epsilon);

    const auto start = std::chrono::steady_clock::now();
    Rng rng = Rng(seed).split(1 + j);
    try {
      auto res = run_builder(g, roots[j], algo, r.k_target, c.sparse, c.pseudo, rng);
      if (auto* ok = std::get_if<BuildSuccess>(&res)) {
        const auto fam = assemble(g, ok->trees, ok->witness);
        r.built = true;
        const auto rep = verify_independent(g, fam);
        r.verified = rep.ok;
        if (!rep.ok) t.message = rep.message;
      } else {
        auto& f = std::get<BuildFailure>(res);
        r.fail_stage = f.stage;
        t.message = f.message;
        t.certificate_ok = check_failure(g, f);
      }
    } catch (const ParameterError& e) {
      r.fail_stage = FailStage::QSelection;
      t.message = e.what();
    } catch (const std::exception& e) {
      r.fail_stage = FailStage::Other;
      r.built = false;
      t.message = e.what();
    }
    if (r.fail_stage != FailStage::None) r.built = false;
    const auto stop = std::chrono::steady_clock::now();
    r.elapsed_ms = c.timing ? std::chrono::duration<double, std::milli>(stop - start).count() : 0.0;
    r.kappa_lower_bound_certified = r.verified ? r.k_target : 0;
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

SparseParams sparse_params_from_json(const std::string& text) {
  return wrap_json([&] { return sparse_from(parse_json(text, "sparse parameters")); });
}

PseudoParams pseudo_params_from_json(const std::string& text) {
  return wrap_json([&] { return pseudo_from(parse_json(text, "pseudo parameters")); });
}

std::uint64_t default_seed() {
  const char* env = std::getenv("IST_FORGE_SEED");
  if (!env || !*env) return 1;
  std::uint64_t v = 0;
  const char* end = env + std::char_traits<char>::length(env);
  auto res = std::from_chars(env, end, v);
  if (res.ec != std::errc{} || res.ptr != end) return 1;
  return v;
}

ExperimentConfig parse_experiment_config(const std::string& text) {
  const json j = parse_json(text, "experiment config");
  reject_unknown(j,
                 {"model", "n", "p", "d", "file", "roots_per_graph", "seeds_per_cell", "seed", "algo", "k_policy",
                  "k", "sparse", "pseudo", "output", "workers", "timing"},
                 "experiment config");
  ExperimentConfig c;
  c.seed = default_seed();
  wrap_json([&] {
    const std::string model = j.value("model", "gnp");
    if (model == "gnp") {
      c.model = Model::Gnp;
    } else if (model == "regular") {
      c.model = Model::Regular;
    } else if (model == "file") {
      c.model = Model::File;
    } else {
      throw ParameterError("unknown model '" + model + "'");
    }
    take(j, "n", c.n);
    take(j, "p", c.p);
    take(j, "d", c.d);
    take(j, "file", c.file);
    take(j, "roots_per_graph", c.roots_per_graph);
    take(j, "seeds_per_cell", c.seeds_per_cell);
    take(j, "seed", c.seed);
    if (j.contains("algo")) c.algo = parse_algo(j.at("algo").get<std::string>());
    const std::string policy = j.value("k_policy", "delta");
    if (policy == "delta") {
      c.k_policy = KPolicy::Delta;
    } else if (policy == "fixed") {
      c.k_policy = KPolicy::Fixed;
      if (!j.contains("k")) throw ParameterError("k_policy fixed needs k");
      c.k_fixed = j.at("k").get<std::size_t>();
    } else if (policy == "one_minus_eps") {
      c.k_policy = KPolicy::OneMinusEps;
    } else {
      throw ParameterError("unknown k_policy '" + policy + "'");
    }
    if (j.contains("sparse")) c.sparse = sparse_from(j.at("sparse"));
    if (j.contains("pseudo")) c.pseudo = pseudo_from(j.at("pseudo"));
    take(j, "output", c.output);
    take(j, "workers", c.workers);
    take(j, "timing", c.timing);
    return 0;
  });
  validate_config(c);
  return c;
}

void validate_config(const ExperimentConfig& c) {
  if (c.seeds_per_cell < 1) throw ParameterError("seeds_per_cell must be at least 1");
  if (c.roots_per_graph < 1) throw ParameterError("roots_per_graph must be at least 1");
  if (c.workers < 0) throw ParameterError("workers must be non-negative");
  switch (c.model) {
    case Model::Gnp:
      if (c.n.empty() || c.p.empty()) throw ParameterError("gnp model needs nonempty n and p grids");
      for (double p : c.p) {
        if (!(p >= 0 && p <= 1)) throw ParameterError("p must lie in [0, 1]");
      }
      break;
    case Model::Regular:
      if (c.n.empty() || c.d.empty()) throw ParameterError("regular model needs nonempty n and d grids");
      for (auto n : c.n) {
        for (auto d : c.d) {
          if (d >= n) throw ParameterError("d must be below n");
          if ((n * d) % 2) throw ParameterError("n * d must be even");
        }
      }
      break;
    case Model::File:
      if (c.file.empty()) throw ParameterError("file model needs a file");
      break;
  }
}

std::string to_csv_row(const ExperimentRecord& r) {
  if (r.verified && !r.built) throw InvariantError("record " + std::to_string(r.run_id) + ": verified but not built");
  if ((r.fail_stage != FailStage::None) == r.built) {
    throw InvariantError("record " + std::to_string(r.run_id) + ": fail_stage must be set exactly when not built");
  }
  std::string s;
  s += std::to_string(r.run_id) + ',' + r.algo + ',' + std::to_string(r.n) + ',' + format_double(r.p_or_d) + ',';
  s += std::to_string(r.seed) + ',' + std::to_string(r.root) + ',' + std::to_string(r.k_target) + ',';
  s += std::string(r.built ? "1" : "0") + ',' + (r.verified ? "1" : "0") + ',' + to_string(r.fail_stage) + ',';
  s += format_double(std::round(r.elapsed_ms * 1000.0) / 1000.0) + ',' + std::to_string(r.delta_g) + ',';
  s += std::to_string(r.kappa_lower_bound_certified);
  return s;
}

std::size_t graph_count(const ExperimentConfig& c) { return cell_count(c) * c.seeds_per_cell; }

std::vector<TrialOutcome> run_graph(const ExperimentConfig& c, std::size_t index) {
  validate_config(c);
  if (index >= graph_count(c)) throw ParameterError("graph index out of range");
  return run_on(c, index, nullptr);
}

std::vector<TrialOutcome> run_experiment(const ExperimentConfig& c, std::ostream& out) {
  validate_config(c);
  std::optional<Graph> preloaded;
  if (c.model == Model::File) preloaded = read_edge_list(c.file);
  const std::size_t total = graph_count(c);

  std::vector<std::vector<TrialOutcome>> done(total);
  std::vector<char> finished(total, 0);
  std::size_t next_to_write = 0;
  std::mutex writer;
  out << kCsvHeader << '\n';

  g_interrupted = 0;
  auto previous = std::signal(SIGINT, on_sigint);
  const int workers = c.workers > 0 ? c.workers : omp_get_max_threads();
  std::exception_ptr error;

#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
  for (std::int64_t gi = 0; gi < static_cast<std::int64_t>(total); ++gi) {
    if (g_interrupted) continue;
    const auto idx = static_cast<std::size_t>(gi);
    std::vector<TrialOutcome> rows;
    try {
      rows = run_on(c, idx, preloaded ? &*preloaded : nullptr);
    } catch (...) {
      std::lock_guard lock(writer);
      if (!error) error = std::current_exception();
      g_interrupted = 1;
      continue;
    }
    std::lock_guard lock(writer);
    done[idx] = std::move(rows);
    finished[idx] = 1;
    while (next_to_write < total && finished[next_to_write]) {
      for (const auto& t : done[next_to_write]) out << to_csv_row(t.record) << '\n';
      out.flush();
      ++next_to_write;
    }
  }
  std::signal(SIGINT, previous);
  if (error) std::rethrow_exception(error);

  std::vector<TrialOutcome> all;
  for (std::size_t i = 0; i < next_to_write; ++i) {
    for (auto& t : done[i]) all.push_back(std::move(t));
  }
  return all;
}

}  // namespace istforge
