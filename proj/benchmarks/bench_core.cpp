#include <random>

#include <benchmark/benchmark.h>

#include "flc/groupoid.hpp"
#include "flc/hull.hpp"
#include "flc/presets.hpp"
#include "flc/witness.hpp"

using namespace flc;

static void BM_ScalarSignNearCancellation(benchmark::State& state) {
  const QuadraticScalar a(19601, -13860, 2);
  for (auto _ : state) benchmark::DoNotOptimize(scalar_sign(a));
}
BENCHMARK(BM_ScalarSignNearCancellation);

static void BM_HeisenbergProduct(benchmark::State& state) {
  const auto x = GroupElement::heisenberg(QuadraticScalar(1, 1, 2), 3, QuadraticScalar::rational(1, 2));
  const auto y = GroupElement::heisenberg(2, QuadraticScalar(0, 1, 2), 5);
  for (auto _ : state) benchmark::DoNotOptimize(group_mul(x, y));
}
BENCHMARK(BM_HeisenbergProduct);

static void BM_SilverMeanWindow(benchmark::State& state) {
  const auto desc = presets::silver_mean();
  const auto w = Window::ball(1, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_window(desc, w));
}
BENCHMARK(BM_SilverMeanWindow)->Arg(10)->Arg(100)->Arg(1000);

static void BM_SilverMeanCatalog(benchmark::State& state) {
  const auto desc = presets::silver_mean();
  const auto s = Window::ball(1, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_patches(desc, 3, s));
}
BENCHMARK(BM_SilverMeanCatalog)->Arg(100)->Arg(1000);

static void BM_HeisenbergCatalog(benchmark::State& state) {
  const auto desc = presets::heisenberg_silver_mean();
  const auto s = Window::ball(3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_patches(desc, 2, s));
}
BENCHMARK(BM_HeisenbergCatalog)->Unit(benchmark::kMillisecond);

static void BM_AxiomPairs(benchmark::State& state) {
  const auto desc = state.range(0) ? presets::heisenberg_lattice() : presets::silver_mean();
  const ArrowSampler sampler(desc, 3, 1, Window::ball(desc.dim(), desc.dim() == 3 ? 2 : 5));
  std::mt19937_64 rng(1);
  std::vector<std::pair<Arrow, Arrow>> pairs;
  for (int i = 0; i < 100; ++i) pairs.push_back(sampler.pair(rng));
  for (auto _ : state) benchmark::DoNotOptimize(check_axioms(pairs, {}));
}
BENCHMARK(BM_AxiomPairs)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_CertifyPositiveType(benchmark::State& state) {
  const auto cat = enumerate_patches(presets::silver_mean(), 3, Window::ball(1, 20));
  std::mt19937_64 rng(2);
  std::vector<WitnessMatrix> ms;
  for (int i = 0; i < 64; ++i) ms.push_back(random_witness_instance(cat, 8, rng));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(certify_positive_type(ms[i++ % ms.size()]));
}
BENCHMARK(BM_CertifyPositiveType);

static void BM_ChabautyDistance(benchmark::State& state) {
  const auto cat = enumerate_patches(presets::silver_mean(), 6, Window::ball(1, 100));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(chabauty_distance(cat.classes[i % cat.size()], cat.classes[(i + 1) % cat.size()]));
    ++i;
  }
}
BENCHMARK(BM_ChabautyDistance);
BENCHMARK_MAIN();
