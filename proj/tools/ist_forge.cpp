#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "istforge/connectivity.hpp"
#include "istforge/edge_list.hpp"
#include "istforge/errors.hpp"
#include "istforge/experiment.hpp"
#include "istforge/family_io.hpp"
#include "istforge/generators.hpp"
#include "istforge/pseudorandom_builder.hpp"
#include "istforge/spanning_family.hpp"
#include "istforge/spectral.hpp"

using namespace istforge;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kBuildFailed = 2;
constexpr int kVerifyFailed = 3;
constexpr int kIo = 4;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct GenArgs {
  std::string model = "gnp";
  std::size_t n = 0;
  double p = 0;
  std::size_t d = 0;
  std::uint64_t seed = 0;
  std::string out;
};

int cmd_gen(const GenArgs& a) {
  Rng rng(a.seed);
  Graph g;
  if (a.model == "gnp") {
    if (!(a.p >= 0 && a.p <= 1)) throw ParameterError("p must lie in [0, 1]");
    g = gen_gnp(a.n, a.p, rng);
  } else if (a.model == "regular") {
    g = gen_random_regular(a.n, a.d, rng);
  } else {
    throw ParameterError("unknown model '" + a.model + "'");
  }
  if (a.out.empty() || a.out == "-") {
    write_edge_list(g, std::cout);
  } else {
    write_edge_list(g, a.out);
  }
  std::cerr << "n " << g.n() << " m " << g.m() << " delta " << (g.n() ? min_degree(g) : 0) << " Delta "
            << (g.n() ? max_degree(g) : 0) << '\n';
  return kOk;
}

struct BuildArgs {
  std::string graph;
  Vertex root = 0;
  std::string algo = "auto";
  std::optional<std::size_t> k;
  std::string params;
  std::uint64_t seed = 0;
  bool verify = false;
  std::string out;
};

int cmd_build(const BuildArgs& a) {
  const Graph g = read_edge_list(a.graph);
  if (!g.contains(a.root)) throw ParameterError("root out of range");
  SparseParams sparse;
  PseudoParams pseudo;
  if (!a.params.empty()) {
    const auto j = nlohmann::json::parse(slurp(a.params));
    if (j.contains("sparse")) sparse = sparse_params_from_json(j.at("sparse").dump());
    if (j.contains("pseudo")) pseudo = pseudo_params_from_json(j.at("pseudo").dump());
  }
  Algo algo = parse_algo(a.algo);
  if (algo == Algo::Auto) algo = choose_algo(g);
  const std::size_t k = a.k ? *a.k
                            : (algo == Algo::Pseudo ? pseudo_tree_count(pseudo.epsilon, g.degree(a.root))
                                                    : min_degree(g));
  std::cerr << "algo " << to_string(algo) << " k " << k << '\n';

  Rng rng(a.seed);
  BuildResult res;
  try {
    res = run_builder(g, a.root, algo, k, sparse, pseudo, rng);
  } catch (const ParameterError& e) {
    std::cerr << "build failed: stage " << to_string(FailStage::QSelection) << ": " << e.what() << '\n';
    return kBuildFailed;
  }
  if (auto* f = std::get_if<BuildFailure>(&res)) {
    std::cerr << "build failed: stage " << to_string(f->stage) << ": " << f->message << '\n';
    for (const auto& d : f->diagnostics) std::cerr << "  " << d << '\n';
    return kBuildFailed;
  }
  auto& ok = std::get<BuildSuccess>(res);
  for (const auto& d : ok.diagnostics) std::cerr << "  " << d << '\n';
  const auto fam = assemble(g, ok.trees, ok.witness);
  if (a.out.empty() || a.out == "-") {
    std::cout << family_to_json(fam) << '\n';
  } else {
    write_family(fam, a.out);
  }
  if (a.verify) {
    const auto rep = verify_independent(g, fam);
    if (!rep.ok) {
      std::cerr << "verify failed: " << rep.message << '\n';
      return kVerifyFailed;
    }
    std::cerr << "verified " << fam.size() << " independent spanning trees\n";
  }
  return kOk;
}

int cmd_verify(const std::string& graph, const std::string& family) {
  const Graph g = read_edge_list(graph);
  const auto fam = read_family(family, g.n());
  const auto rep = verify_independent(g, fam);
  if (rep.ok) {
    std::cout << "pass: " << fam.size() << " trees\n";
    return kOk;
  }
  std::cout << "fail: " << rep.message << '\n';
  return kVerifyFailed;
}

int cmd_experiment(const std::string& config, const std::string& out_override, int workers) {
  auto c = parse_experiment_config(slurp(config));
  if (!out_override.empty()) c.output = out_override;
  if (workers > 0) c.workers = workers;
  std::size_t built = 0, verified = 0, rows = 0;
  auto tally = [&](const std::vector<TrialOutcome>& all) {
    for (const auto& t : all) {
      ++rows;
      built += t.record.built;
      verified += t.record.verified;
    }
  };
  if (c.output.empty() || c.output == "-") {
    tally(run_experiment(c, std::cout));
  } else {
    std::ofstream out(c.output);
    if (!out) throw IoError("cannot write " + c.output);
    tally(run_experiment(c, out));
  }
  std::cerr << rows << " rows, " << built << " built, " << verified << " verified\n";
  return kOk;
}

int cmd_spectrum(const std::string& graph) {
  const Graph g = read_edge_list(graph);
  const auto p = spectral_profile(g);
  for (const auto& w : p.warnings) std::cerr << "warning: " << w << '\n';
  std::cout << "n " << p.n << "\nd " << p.d << "\nlambda " << p.lambda << "\nd/lambda " << p.ratio << '\n';
  return kOk;
}

int cmd_connectivity(const std::string& graph, std::size_t k) {
  const Graph g = read_edge_list(graph);
  if (g.n() > kConnectivityComfortLimit) {
    std::cerr << "warning: exact connectivity check on " << g.n() << " vertices may be slow\n";
  }
  const bool yes = is_k_connected(g, k);
  std::cout << (yes ? "yes" : "no") << '\n';
  return yes ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Independent spanning tree construction and verification"};
  app.require_subcommand(1);
  const std::uint64_t env_seed = default_seed();

  GenArgs gen;
  gen.seed = env_seed;
  auto* g = app.add_subcommand("gen", "generate a random graph as an edge list");
  g->add_option("--model", gen.model, "gnp or regular")->check(CLI::IsMember({"gnp", "regular"}));
  g->add_option("--n", gen.n, "vertex count")->required();
  g->add_option("--p", gen.p, "edge probability (gnp)");
  g->add_option("--d", gen.d, "degree (regular)");
  g->add_option("--seed", gen.seed, "random seed (default IST_FORGE_SEED or 1)");
  g->add_option("--out", gen.out, "output edge list, '-' for stdout");

  BuildArgs build;
  build.seed = env_seed;
  auto* b = app.add_subcommand("build", "build a family of independent spanning trees");
  b->add_option("--graph", build.graph, "edge list")->required();
  b->add_option("--root", build.root, "root vertex")->required();
  b->add_option("--algo", build.algo, "dense, sparse, pseudo or auto")
      ->check(CLI::IsMember({"dense", "sparse", "pseudo", "auto"}));
  b->add_option("--k", build.k, "number of trees (default delta(G), or ceil((1-eps)d) for pseudo)");
  b->add_option("--params", build.params, "JSON file with optional \"sparse\" and \"pseudo\" objects");
  b->add_option("--seed", build.seed, "random seed for the pseudo builder");
  b->add_flag("--verify", build.verify, "verify the assembled family");
  b->add_option("--out", build.out, "family JSON output, '-' for stdout");

  std::string vgraph, vfamily;
  auto* v = app.add_subcommand("verify", "check a family for independence");
  v->add_option("--graph", vgraph, "edge list")->required();
  v->add_option("--family", vfamily, "family JSON")->required();

  std::string config, out_override;
  int workers = 0;
  auto* e = app.add_subcommand("experiment", "run a Monte-Carlo experiment grid");
  e->add_option("config", config, "JSON config")->required();
  e->add_option("--out", out_override, "CSV output (overrides the config)");
  e->add_option("--workers", workers, "parallel trials (overrides the config)");

  std::string sgraph;
  auto* s = app.add_subcommand("spectrum", "print n, d, lambda and d/lambda");
  s->add_option("--graph", sgraph, "edge list")->required();

  std::string cgraph;
  std::size_t ck = 1;
  auto* c = app.add_subcommand("connectivity", "exact k-connectivity check");
  c->add_option("--graph", cgraph, "edge list")->required();
  c->add_option("--k", ck, "connectivity to test")->required()->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*g) return cmd_gen(gen);
    if (*b) return cmd_build(build);
    if (*v) return cmd_verify(vgraph, vfamily);
    if (*e) return cmd_experiment(config, out_override, workers);
    if (*s) return cmd_spectrum(sgraph);
    if (*c) return cmd_connectivity(cgraph, ck);
  } catch (const ParameterError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kUsage;
  } catch (const ParseError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kIo;
  } catch (const IoError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kIo;
  } catch (const nlohmann::json::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kUsage;
  } catch (const GenerationError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kBuildFailed;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kBuildFailed;
  }
  return kUsage;
}
