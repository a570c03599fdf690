#include <benchmark/benchmark.h>

#include "polybern/generalized.hpp"
#include "polybern/poly_bernoulli.hpp"
#include "polybern/rational.hpp"
#include "polybern/series_gf.hpp"

using namespace polybern;

static void BM_PolyBernoulliNumber(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    PolyBernoulliCache cache;
    benchmark::DoNotOptimize(cache.poly_bernoulli(n, 3));
  }
}
BENCHMARK(BM_PolyBernoulliNumber)->Arg(8)->Arg(16)->Arg(32);

static void BM_GeneratingFunction(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gf_poly_bernoulli(3, order));
}
BENCHMARK(BM_GeneratingFunction)->Arg(8)->Arg(16)->Arg(32);

static void BM_GeneralizedPolynomial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gen_pb_poly(n, -2));
}
BENCHMARK(BM_GeneralizedPolynomial)->Arg(4)->Arg(8)->Arg(12);

static void BM_RationalAccumulate(benchmark::State& state) {
  for (auto _ : state) {
    Rational sum;
    for (long i = 1; i <= 64; ++i) sum += Rational(1, i);
    benchmark::DoNotOptimize(sum);
  }
}
BENCHMARK(BM_RationalAccumulate);
BENCHMARK_MAIN();
