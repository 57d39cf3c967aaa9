#include <random>

#include <benchmark/benchmark.h>

#include "hvor/cell_complex.hpp"
#include "hvor/hermitian.hpp"
#include "hvor/homology.hpp"
#include "hvor/isometry.hpp"
#include "hvor/voronoi.hpp"

using namespace hvor;

static void BM_MinimalVectors(benchmark::State& state) {
  const long disc = state.range(0);
  auto p = initial_perfect_form(3, disc);
  for (auto _ : state) benchmark::DoNotOptimize(minimal_vectors(p.form));
}
BENCHMARK(BM_MinimalVectors)->Arg(-3)->Arg(-4)->Arg(-7)->Arg(-23);

static void BM_Stabilizer(benchmark::State& state) {
  const long disc = state.range(0);
  auto p = initial_perfect_form(3, disc);
  for (auto _ : state) benchmark::DoNotOptimize(stabilizer(disc, p.min_vectors.vectors));
}
BENCHMARK(BM_Stabilizer)->Arg(-3)->Arg(-4)->Arg(-7)->Unit(benchmark::kMillisecond);

static void BM_SmithRandom(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> u(-3, 3);
  std::uniform_int_distribution<int> z(0, 9);
  std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n, 0));
  for (auto& row : m) {
    for (auto& x : row) {
      if (z(rng) < 2) x = u(rng);
    }
  }
  auto s = SparseMatrix::from_dense(m);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(s));
}
BENCHMARK(BM_SmithRandom)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_HomologyGL3(benchmark::State& state) {
  const long disc = state.range(0);
  auto cx = build_complex(enumerate_perfect_forms(3, disc));
  for (auto _ : state) benchmark::DoNotOptimize(homology(cx));
}
BENCHMARK(BM_HomologyGL3)->Arg(-8)->Arg(-11)->Unit(benchmark::kMillisecond);

static void BM_CensusGL3(benchmark::State& state) {
  const long disc = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_perfect_forms(3, disc));
}
BENCHMARK(BM_CensusGL3)->Arg(-7)->Arg(-11)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
