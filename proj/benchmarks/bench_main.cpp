#include <benchmark/benchmark.h>

#include "monocomp/monocomp.hpp"

using namespace monocomp;

namespace {

void BM_PairingModel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Seed seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(pairing_model(n, 5, ++seed));
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_PairingModel)->Arg(1'000)->Arg(10'000)->Arg(100'000);

void BM_HamiltonSum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Seed seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hamilton_sum(n, 2, ++seed));
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_HamiltonSum)->Arg(1'000)->Arg(10'000)->Arg(100'000)->Arg(1'000'000);

void BM_KoutSum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Seed seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(kout_sum(n, 2, ++seed));
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_KoutSum)->Arg(1'000)->Arg(10'000)->Arg(100'000)->Arg(1'000'000);

void BM_ColorHamilton(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const HamiltonSample hs = hamilton_sum(n, 2, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(color_hamilton(hs.decomposition, 2));
  }
  state.SetItemsProcessed(state.iterations() * hs.graph.edge_count());
}
BENCHMARK(BM_ColorHamilton)->Arg(10'000)->Arg(100'000)->Arg(1'000'000);

void BM_ColorKout(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const KoutSample ks = kout_sum(n, 2, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(color_kout(ks.digraphs, 2));
  }
  state.SetItemsProcessed(state.iterations() * ks.graph.edge_count());
}
BENCHMARK(BM_ColorKout)->Arg(10'000)->Arg(100'000)->Arg(1'000'000);

void BM_MonoStats(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const HamiltonSample hs = hamilton_sum(n, 2, 7);
  const HamiltonColoring hc = color_hamilton(hs.decomposition, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mono_stats(hs.graph, hc.coloring, 2));
  }
  state.SetItemsProcessed(state.iterations() * hs.graph.edge_count());
}
BENCHMARK(BM_MonoStats)->Arg(10'000)->Arg(100'000)->Arg(1'000'000);

void BM_FindLongCycle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const MultiGraph g = pairing_model(n, 5, 13);
  Seed seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_long_cycle(g, {.budget = 0, .restarts = 10, .seed = ++seed}));
  }
}
BENCHMARK(BM_FindLongCycle)->Arg(1'000)->Arg(10'000);

void BM_DensityAudit(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const MultiGraph g = pairing_model(n, 5, 13);
  for (auto _ : state) {
    benchmark::DoNotOptimize(local_density_audit(g, 1.25, 4));
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_DensityAudit)->Arg(100)->Arg(1'000);

void BM_EulerOrient(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const MultiGraph g = pairing_model(n, 4, 13);
  for (auto _ : state) {
    benchmark::DoNotOptimize(euler_orient(g));
  }
  state.SetItemsProcessed(state.iterations() * g.edge_count());
}
BENCHMARK(BM_EulerOrient)->Arg(10'000)->Arg(100'000);

}  // namespace

BENCHMARK_MAIN();
