// Serial vs OpenMP kernels, and one incremental update vs a static
// recomputation of the same node.

#include <benchmark/benchmark.h>

#include <map>
#include <random>

#include "mbi/apsp.hpp"
#include "mbi/bc_static.hpp"
#include "mbi/harness.hpp"
#include "mbi/si_update.hpp"

using namespace mbi;

namespace {

const Graph& pa_graph(std::size_t n) {
  static std::map<std::size_t, Graph> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, generate_pa(n, 2, 42)).first;
  return it->second;
}

void BM_BrandesSerial(benchmark::State& state) {
  const Graph& g = pa_graph(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(brandes_all_serial(g));
}

void BM_BrandesParallel(benchmark::State& state) {
  const Graph& g = pa_graph(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(brandes_all(g));
}

void BM_InitSerial(benchmark::State& state) {
  const Graph& g = pa_graph(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(init_apsp_serial(g, 0));
}

void BM_InitParallel(benchmark::State& state) {
  const Graph& g = pa_graph(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(init_apsp(g, 0));
}

void BM_SingleNodeStatic(benchmark::State& state) {
  const Graph& g = pa_graph(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(betweenness_of(g, 1));
}

// Applies a random insertion and rolls it back, so every iteration starts
// from the same state.
void BM_IncrementalUpdate(benchmark::State& state) {
  const Graph& g = pa_graph(state.range(0));
  ApspState st = init_apsp(g, 1);
  std::mt19937_64 rng(7);
  std::vector<EdgeUpdate> edges;
  for (int i = 0; i < 64; ++i) edges.push_back(random_absent_edge(g, rng));
  Journal journal;
  std::size_t i = 0;
  for (auto _ : state) {
    apply_insertion(g, st, edges[i++ % edges.size()], &journal);
    benchmark::DoNotOptimize(st.betweenness());
    state.PauseTiming();
    rollback(st, journal);
    state.ResumeTiming();
  }
}

}  // namespace

BENCHMARK(BM_BrandesSerial)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BrandesParallel)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_InitSerial)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_InitParallel)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SingleNodeStatic)->Arg(2000)->Arg(5000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IncrementalUpdate)->Arg(2000)->Arg(5000)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
