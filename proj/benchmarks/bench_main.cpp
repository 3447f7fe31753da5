#include <random>

#include <benchmark/benchmark.h>

#include "tropkap/lifts.hpp"
#include "tropkap/puiseux.hpp"
#include "tropkap/tropical.hpp"

using namespace tropkap;

namespace {

TropicalMatrix random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d(0, 9);
  std::vector<Rational> e;
  for (std::size_t i = 0; i < n * n; ++i) e.emplace_back(d(rng));
  return TropicalMatrix(n, n, std::move(e));
}

void BM_PermanentEnumerate(benchmark::State& state) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(permanent(m, 10));
}
BENCHMARK(BM_PermanentEnumerate)->DenseRange(4, 8);

void BM_PermanentAssignment(benchmark::State& state) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(permanent_value_fast(m));
}
BENCHMARK(BM_PermanentAssignment)->DenseRange(4, 8)->Arg(16)->Arg(32);

void BM_TropicalRankA(benchmark::State& state) {
  const auto a = example_matrix_a();
  for (auto _ : state) benchmark::DoNotOptimize(tropical_rank(a));
}
BENCHMARK(BM_TropicalRankA);

void BM_DeterminantM0(benchmark::State& state) {
  const auto m0 = example_lift_m0();
  for (auto _ : state) benchmark::DoNotOptimize(determinant(m0));
}
BENCHMARK(BM_DeterminantM0);

void BM_DeterminantCofactorsM0(benchmark::State& state) {
  const auto m0 = example_lift_m0();
  for (auto _ : state) benchmark::DoNotOptimize(determinant_by_cofactors(m0));
}
BENCHMARK(BM_DeterminantCofactorsM0);

void BM_CertifyM0(benchmark::State& state) {
  const auto m0 = example_lift_m0();
  for (auto _ : state) benchmark::DoNotOptimize(certify_rank5(m0));
}
BENCHMARK(BM_CertifyM0);

void BM_RandomLift(benchmark::State& state) {
  const auto a = example_matrix_a();
  RandomLiftOptions opts;
  for (auto _ : state) {
    ++opts.seed;
    benchmark::DoNotOptimize(random_lift(a, opts));
  }
}
BENCHMARK(BM_RandomLift);

}  // namespace

BENCHMARK_MAIN();
