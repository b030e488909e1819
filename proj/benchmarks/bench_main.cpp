#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "bipmc/census.hpp"
#include "bipmc/classify.hpp"
#include "bipmc/construct.hpp"
#include "bipmc/ears.hpp"
#include "bipmc/kext.hpp"
#include "bipmc/matching.hpp"

namespace {

using namespace bipmc;

BipGraph random_graph(int side, double p, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int i = 0; i < side; ++i)
    for (int j = 0; j < side; ++j)
      if (coin(rng)) edges.push_back({i, j});
  return BipGraph(side, side, edges);
}

void BM_MaxMatching(benchmark::State& state) {
  const BipGraph g = random_graph(static_cast<int>(state.range(0)), 0.1, 7);
  for (auto _ : state) benchmark::DoNotOptimize(max_matching(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MaxMatching)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_MatchingCovered(benchmark::State& state) {
  const BipGraph g = leaf_matching(Tree::star(static_cast<int>(state.range(0)))).graph;
  for (auto _ : state) benchmark::DoNotOptimize(is_matching_covered(g));
}
BENCHMARK(BM_MatchingCovered)->RangeMultiplier(4)->Range(4, 1024);

void BM_MinimalMC(benchmark::State& state) {
  const BipGraph g = leaf_matching(Tree::star(static_cast<int>(state.range(0)))).graph;
  for (auto _ : state) benchmark::DoNotOptimize(is_minimal_mc(g));
}
BENCHMARK(BM_MinimalMC)->RangeMultiplier(4)->Range(4, 256);

void BM_EarDecomposition(benchmark::State& state) {
  const BipGraph g = leaf_matching(Tree::star(static_cast<int>(state.range(0)))).graph;
  for (auto _ : state) benchmark::DoNotOptimize(find_ear_decomposition(g));
}
BENCHMARK(BM_EarDecomposition)->RangeMultiplier(4)->Range(4, 256);

void BM_KextDirect(benchmark::State& state) {
  const BipGraph g = J(2, static_cast<int>(state.range(0))).graph;
  for (auto _ : state) benchmark::DoNotOptimize(k_extendable_direct(g, 2));
}
BENCHMARK(BM_KextDirect)->DenseRange(4, 8, 2);

void BM_KextHall(benchmark::State& state) {
  const BipGraph g = J(2, static_cast<int>(state.range(0))).graph;
  for (auto _ : state) benchmark::DoNotOptimize(k_extendable_hall(g, 2));
}
BENCHMARK(BM_KextHall)->DenseRange(4, 8, 2);

void BM_Census(benchmark::State& state) {
  CensusOptions opt;
  opt.max_n = static_cast<int>(state.range(0));
  opt.k_max = 2;
  for (auto _ : state) benchmark::DoNotOptimize(run_census(opt));
}
BENCHMARK(BM_Census)->DenseRange(6, 8, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
