// Serial reference against the OpenMP kernels.
#include <benchmark/benchmark.h>

#include <random>

#include "pforge/homology.hpp"
#include "pforge/linalg.hpp"
#include "pforge/multivector.hpp"

using namespace pforge;

namespace {

Matrix random_matrix(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d(-9, 9);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
  return m;
}

Multivector so3() {
  Multivector p(3, 2);
  p.add_unsorted({0, 1}, Poly::variable(3, 2));
  p.add_unsorted({1, 2}, Poly::variable(3, 0));
  p.add_unsorted({2, 0}, Poly::variable(3, 1));
  return p;
}

template <std::size_t (*Rank)(const Matrix&)>
void BM_rank(benchmark::State& state) {
  Matrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(Rank(m));
}

void BM_cohomology(benchmark::State& state) {
  HomologyOptions opt{3, 0, state.range(0), state.range(1) != 0};
  Multivector p = so3();
  for (auto _ : state) benchmark::DoNotOptimize(poisson_cohomology_dims(p, opt));
}

}  // namespace

BENCHMARK(BM_rank<rank_serial>)->Name("rank/serial")->Arg(32)->Arg(64)->Arg(96)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rank<rank_parallel>)->Name("rank/parallel")->Arg(32)->Arg(64)->Arg(96)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_cohomology)->Name("so3_cohomology")->ArgNames({"weight", "parallel"})
    ->ArgsProduct({{4, 6}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
