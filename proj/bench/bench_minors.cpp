// Serial against OpenMP-parallel minor enumeration.

#include <benchmark/benchmark.h>

#include <random>

#include "structura/minor_kernels.hpp"

using namespace structura;

namespace {

PolyMatrix random_matrix(int n, int degree, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coef(-3, 3);
  PolyMatrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<Rat> c;
      for (int k = 0; k <= degree; ++k) c.emplace_back(coef(rng));
      a(i, j) = Poly(std::move(c));
    }
  return a;
}

void BM_minors(benchmark::State& state, Exec exec) {
  const int n = static_cast<int>(state.range(0));
  const PolyMatrix a = random_matrix(n, 2, 7);
  for (auto _ : state) benchmark::DoNotOptimize(all_minors(a, n / 2, exec));
}

}  // namespace

BENCHMARK_CAPTURE(BM_minors, serial, Exec::serial)->Arg(5)->Arg(6)->Arg(7);
BENCHMARK_CAPTURE(BM_minors, parallel, Exec::parallel)->Arg(5)->Arg(6)->Arg(7);

BENCHMARK_MAIN();
