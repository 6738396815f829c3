#include <benchmark/benchmark.h>

#include <random>

#include "clarkit/clar.hpp"
#include "clarkit/extremal.hpp"
#include "clarkit/matching.hpp"
#include "clarkit/tree_canonical.hpp"

using namespace clarkit;

static void BM_alpha_random_tree(benchmark::State& state) {
  std::mt19937 rng(1);
  auto tree = random_subcubic_tree(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(alpha(tree));
}
BENCHMARK(BM_alpha_random_tree)->Arg(50)->Arg(200)->Arg(1000);

static void BM_tree_canonical_code(benchmark::State& state) {
  std::mt19937 rng(2);
  auto tree = random_subcubic_tree(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(tree_canonical_code(tree));
}
BENCHMARK(BM_tree_canonical_code)->Arg(50)->Arg(200);

static void BM_build_benzenoid(benchmark::State& state) {
  auto spec = tk_benzenoid_spec(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(BenzenoidGraph::build(spec));
}
BENCHMARK(BM_build_benzenoid)->Arg(3)->Arg(8);

static void BM_clar_number_tk(benchmark::State& state) {
  auto graph = BenzenoidGraph::build(tk_benzenoid_spec(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(clar_number(graph));
}
BENCHMARK(BM_clar_number_tk)->Arg(2)->Arg(4)->Arg(6);

static void BM_clar_number_chain(benchmark::State& state) {
  auto graph = BenzenoidGraph::build(linear_chain_spec(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(clar_number(graph));
}
BENCHMARK(BM_clar_number_chain)->Arg(5)->Arg(10);

static void BM_kekule_enumeration(benchmark::State& state) {
  auto graph = BenzenoidGraph::build(linear_chain_spec(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_perfect_matchings(graph));
}
BENCHMARK(BM_kekule_enumeration)->Arg(4)->Arg(8);

static void BM_enumerate_catacondensed(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_catacondensed(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_enumerate_catacondensed)->Arg(5)->Arg(7);

static void BM_verify_main_theorem(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_main_theorem(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_verify_main_theorem)->Arg(5)->Arg(7);

BENCHMARK_MAIN();
