#include "nilhodge/nilhodge.hpp"

#include <benchmark/benchmark.h>

using namespace nilhodge;

namespace {

void run_search(benchmark::State& state, const char* name) {
  const LieAlgebra L = catalog_get(name).algebra;
  SearchConfig cfg;
  cfg.mode = SearchMode::Exhaustive;
  cfg.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(search_w_bigrading(L, cfg));
}

void BM_SearchL5_9(benchmark::State& state) { run_search(state, "L5_9"); }
BENCHMARK(BM_SearchL5_9)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_SearchN3N3(benchmark::State& state) { run_search(state, "n3+n3"); }
BENCHMARK(BM_SearchN3N3)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_SurveyRank6(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(rank_survey(6));
}
BENCHMARK(BM_SurveyRank6)->Unit(benchmark::kMillisecond)->Iterations(1);

} // namespace
