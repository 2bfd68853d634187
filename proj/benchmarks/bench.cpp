#include <benchmark/benchmark.h>

#include <random>

#include "rsconcat/concat.hpp"
#include "rsconcat/distance.hpp"

namespace {

using namespace rsconcat;

void BM_FieldMul(benchmark::State& state) {
  const Field f(static_cast<int>(state.range(0)));
  std::mt19937 rng(1);
  std::vector<Element> xs(1024);
  for (auto& x : xs) x = Element{static_cast<std::uint32_t>(rng() % f.order())};
  std::size_t i = 0;
  Element acc = f.one();
  for (auto _ : state) {
    acc = f.mul(acc, xs[i++ & 1023]) + f.one();
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_FieldMul)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_BuildCode(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int K = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(build_code(m, K));
}
BENCHMARK(BM_BuildCode)->Args({1, 1})->Args({2, 3})->Args({3, 10})->Unit(benchmark::kMillisecond);

void BM_RowReduce(benchmark::State& state) {
  const auto code = build_code(static_cast<int>(state.range(0)), 1);
  const Expander ex(code.field, code.basis);
  const auto pair = build_rs_pair(code.field, 1);
  const auto gens = normalizer_generators(ex, css_generators(pair.code, pair.dual));
  for (auto _ : state) benchmark::DoNotOptimize(row_reduce(gens));
}
BENCHMARK(BM_RowReduce)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_ExactDistance(benchmark::State& state) {
  const auto code = build_code(1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(exact_distance(code, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ExactDistance)->Arg(1)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_SampledDistance(benchmark::State& state) {
  const auto code = build_code(2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(sampled_distance_upper(code, 1000, 0));
}
BENCHMARK(BM_SampledDistance)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
