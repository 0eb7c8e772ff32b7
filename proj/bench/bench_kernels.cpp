#include <benchmark/benchmark.h>

#include <map>

#include "istforge/dense_builder.hpp"
#include "istforge/generators.hpp"
#include "istforge/niceness.hpp"
#include "istforge/spanning_family.hpp"

using namespace istforge;

namespace {

struct Instance {
  Graph g;
  TreeCollection trees;
  SpanningTreeFamily family;
};

const Instance& instance(std::size_t n) {
  static std::map<std::size_t, Instance> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  Rng rng(n);
  Instance inst;
  inst.g = gen_gnp(n, 0.3, rng);
  auto res = build_dense(inst.g, 0, min_degree(inst.g));
  auto& ok = std::get<BuildSuccess>(res);
  inst.trees = ok.trees;
  inst.family = assemble(inst.g, ok.trees, ok.witness);
  return cache.emplace(n, std::move(inst)).first->second;
}

void BM_CertifyParallel(benchmark::State& state) {
  const auto& inst = instance(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(certify_nice(inst.g, inst.trees));
}

void BM_CertifySerial(benchmark::State& state) {
  const auto& inst = instance(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(certify_nice_serial(inst.g, inst.trees));
}

void BM_VerifyParallel(benchmark::State& state) {
  const auto& inst = instance(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_independent(inst.g, inst.family));
}

void BM_VerifySerial(benchmark::State& state) {
  const auto& inst = instance(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_independent_serial(inst.g, inst.family));
}

}  // namespace

BENCHMARK(BM_CertifyParallel)->Arg(500)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CertifySerial)->Arg(500)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyParallel)->Arg(500)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifySerial)->Arg(500)->Arg(1000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
