#include "nilhodge/nilhodge.hpp"

#include <benchmark/benchmark.h>

using namespace nilhodge;

namespace {

const char* const kNames[] = {"n3", "L5_4", "n7_142", "n8_campana"};

void BM_Betti(benchmark::State& state) {
  const LieAlgebra L = catalog_get(kNames[state.range(0)]).algebra;
  state.SetLabel(L.name());
  for (auto _ : state) benchmark::DoNotOptimize(betti_numbers(L));
}
BENCHMARK(BM_Betti)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_BigradedBlocks(benchmark::State& state) {
  const auto e = catalog_get(kNames[state.range(0)]);
  const auto [L, B] = *e.bigraded();
  state.SetLabel(L.name());
  for (auto _ : state) benchmark::DoNotOptimize(bigraded_betti(L, B));
}
BENCHMARK(BM_BigradedBlocks)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_ConditionW(benchmark::State& state) {
  const auto [L, B] = *catalog_get("n8_campana").bigraded();
  for (auto _ : state) benchmark::DoNotOptimize(check_condition_w(L, B));
}
BENCHMARK(BM_ConditionW)->Unit(benchmark::kMillisecond);

} // namespace
