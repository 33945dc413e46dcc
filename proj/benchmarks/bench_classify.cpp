#include <benchmark/benchmark.h>

#include "alexq/classify.hpp"
#include "alexq/linearq.hpp"
#include "alexq/polymod.hpp"
#include "alexq/quandle.hpp"

using namespace alexq;

static void BM_EnumerateAutomorphisms(benchmark::State& state) {
  const AbelianGroup g({2, 2, 2, 2});
  EnumerationOptions opts;
  opts.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_automorphisms(g, opts));
}
BENCHMARK(BM_EnumerateAutomorphisms)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_ConjugacyClasses(benchmark::State& state) {
  const AbelianGroup g({2, 2, 2, 2});
  for (auto _ : state) benchmark::DoNotOptimize(conjugacy_classes(g));
}
BENCHMARK(BM_ConjugacyClasses)->Unit(benchmark::kMillisecond);

static void BM_ClassifyOrder(benchmark::State& state) {
  ClassifyOptions opts;
  opts.threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(classify_order(static_cast<std::size_t>(state.range(0)), opts));
}
BENCHMARK(BM_ClassifyOrder)->Args({8, 1})->Args({12, 1})->Args({16, 1})->Args({16, 4})->Unit(benchmark::kMillisecond);

static void BM_LambdaIsomorphism(benchmark::State& state) {
  const auto a = image_one_minus_t(build_linear(LinearQuandleSpec(16, 5)));
  const auto b = image_one_minus_t(LambdaModule(Automorphism::parse(AbelianGroup({4, 4}), "0,1;3,2")));
  for (auto _ : state) benchmark::DoNotOptimize(is_lambda_isomorphic(a, b));
}
BENCHMARK(BM_LambdaIsomorphism);

static void BM_OracleIsomorphic(benchmark::State& state) {
  const auto a = alexander_table(build_linear(LinearQuandleSpec(16, 9)));
  const auto b = alexander_table(build(PolySpec::parse(2, "1+t | 1+t | 1+t^2")));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_isomorphic(a, b));
}
BENCHMARK(BM_OracleIsomorphic)->Unit(benchmark::kMicrosecond);

static void BM_OracleNonIsomorphic(benchmark::State& state) {
  const AbelianGroup g({4, 4});
  const auto a = alexander_table(LambdaModule(Automorphism::parse(g, "0,1;1,1")));
  const auto b = alexander_table(LambdaModule(Automorphism::parse(g, "0,1;1,3")));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_isomorphic(a, b));
}
BENCHMARK(BM_OracleNonIsomorphic)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
