// Serial reference kernels against their OpenMP counterparts.
//
//   ./build/bench/dtruss_bench --benchmark_filter=Census
//   OMP_NUM_THREADS=8 ./build/bench/dtruss_bench

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "dtruss/digraph.hpp"
#include "dtruss/randomization.hpp"
#include "dtruss/triangle_census.hpp"
#include "dtruss/truss.hpp"

namespace {

using namespace dtruss;

const DirectedGraph& celegans() {
  static const DirectedGraph g = load_edge_list_file(DTRUSS_DATA_DIR "/celegans.edges").graph;
  return g;
}

DirectedGraph random_graph(std::size_t n, double p) {
  std::mt19937_64 rng(n);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = 0; v < n; ++v)
      if (u != v && coin(rng)) edges.push_back({u, v});
  return DirectedGraph(n, std::move(edges));
}

const DirectedGraph& graph_for(std::int64_t which) {
  static const DirectedGraph dense = random_graph(2000, 0.01);
  return which == 0 ? celegans() : dense;
}

template <Execution Exec>
void BM_Census(benchmark::State& state) {
  const DirectedGraph& g = graph_for(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(edge_support(g, Exec));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.edge_count()));
}
BENCHMARK(BM_Census<Execution::serial>)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Census<Execution::parallel>)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_CensusEnumeration(benchmark::State& state) {
  const DirectedGraph& g = graph_for(state.range(0));
  for (auto _ : state) {
    TriangleTotals totals;
    benchmark::DoNotOptimize(reference::enumerate_occurrences(g, &totals));
  }
}
BENCHMARK(BM_CensusEnumeration)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Peeling(benchmark::State& state) {
  const DirectedGraph& g = graph_for(state.range(0));
  const auto t = static_cast<TrussType>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(truss_numbers(g, t));
}
BENCHMARK(BM_Peeling)->Args({0, 0})->Args({0, 1})->Args({1, 0})->Args({1, 1})->Unit(benchmark::kMillisecond);

template <Execution Exec>
void BM_Ensemble(benchmark::State& state) {
  RewireConfig cfg;
  cfg.seed = 42;
  for (auto _ : state)
    benchmark::DoNotOptimize(ensemble_truss_cdfs(celegans(), static_cast<std::size_t>(state.range(0)), cfg, Exec));
}
BENCHMARK(BM_Ensemble<Execution::serial>)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Ensemble<Execution::parallel>)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
