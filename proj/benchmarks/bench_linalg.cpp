#include "nilhodge/nilhodge.hpp"

#include <benchmark/benchmark.h>

using namespace nilhodge;

namespace {

// Dense integer matrix with a predictable rank deficit.
Matrix banded(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = Scalar(static_cast<long>((i * 7 + j * 3) % 11) - 5);
  return m;
}

void BM_Rank(benchmark::State& state) {
  const Matrix m = banded(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rank)->Arg(8)->Arg(28)->Arg(56);

void BM_Kernel(benchmark::State& state) {
  const Matrix m = banded(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernel_basis(m));
}
BENCHMARK(BM_Kernel)->Arg(8)->Arg(28)->Arg(56);

} // namespace
