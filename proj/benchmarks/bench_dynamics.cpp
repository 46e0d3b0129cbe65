#include <benchmark/benchmark.h>

#include "billiards/classify.hpp"
#include "billiards/dynamics.hpp"
#include "billiards/enumerate.hpp"
#include "billiards/graph_spec.hpp"
#include "billiards/orbits.hpp"

using namespace billiards;

static void BM_Advance(benchmark::State& st) {
  const MaterializedGraph g = cycle_graph(static_cast<int>(st.range(0)));
  BilliardState s = BilliardState::identity(g.order(), 1, Orientation::Clockwise);
  for (auto _ : st) benchmark::DoNotOptimize(advance(g, s));
  st.SetItemsProcessed(st.iterations());
}
BENCHMARK(BM_Advance)->Arg(5)->Arg(9);

static void BM_StateIndex(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  const std::uint64_t total = state_space_size(n);
  std::uint64_t k = 0;
  for (auto _ : st) {
    benchmark::DoNotOptimize(state_index(state_from_index(n, k)));
    k = (k + 7919) % total;
  }
}
BENCHMARK(BM_StateIndex)->Arg(6)->Arg(8);

static void BM_AllOrbits(benchmark::State& st) {
  const MaterializedGraph g = parse_graph_spec("compl:path:3@" + std::to_string(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(all_orbits(g));
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(state_space_size(g.order())));
}
BENCHMARK(BM_AllOrbits)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_ClassifyAllGraphs(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  const auto graphs = enumerate_graphs(n, {.connected = false, .iso_dedup = true});
  for (auto _ : st) {
    for (const Graph& g : graphs) benchmark::DoNotOptimize(classify(g));
  }
}
BENCHMARK(BM_ClassifyAllGraphs)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_CanonicalForm(benchmark::State& st) {
  const auto graphs = enumerate_graphs(7, {.begin = 0, .end = 4096});
  for (auto _ : st) {
    for (const Graph& g : graphs) benchmark::DoNotOptimize(canonical_form(g));
  }
}
BENCHMARK(BM_CanonicalForm)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
