// Serial vs OpenMP kernels on random spectral data of growing dimension.

#include "divlab/kernels.hpp"
#include "divlab/random.hpp"

#include <benchmark/benchmark.h>

#include <cmath>
#include <map>

using namespace divlab;

namespace {

struct Data {
  ComplexMatrix p, q;
  RealVector a, b;
  RealMatrix w;
};

const Data& data(Index d) {
  static std::map<Index, Data> cache;
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  Rng rng = trial_rng(1, static_cast<std::uint64_t>(d));
  Data x;
  x.p = random_unitary(d, rng);
  x.q = random_unitary(d, rng);
  std::uniform_real_distribution<double> u(0.01, 1.0);
  x.a = RealVector::NullaryExpr(d, [&](Index) { return u(rng); });
  x.b = RealVector::NullaryExpr(d, [&](Index) { return u(rng); });
  x.w = kernels::serial::overlap_weights(x.p, x.q);
  return cache.emplace(d, std::move(x)).first->second;
}

const kernels::PairTerm kTerm = [](double a, double b) { return a * std::log(a / b); };

template <bool Parallel>
void BM_overlap(benchmark::State& state) {
  const Data& x = data(state.range(0));
  for (auto _ : state) {
    if constexpr (Parallel) {
      benchmark::DoNotOptimize(kernels::parallel::overlap_weights(x.p, x.q));
    } else {
      benchmark::DoNotOptimize(kernels::serial::overlap_weights(x.p, x.q));
    }
  }
}

template <bool Parallel>
void BM_pair_sum(benchmark::State& state) {
  const Data& x = data(state.range(0));
  for (auto _ : state) {
    if constexpr (Parallel) {
      benchmark::DoNotOptimize(kernels::parallel::pair_sum(x.a, x.b, x.w, kTerm));
    } else {
      benchmark::DoNotOptimize(kernels::serial::pair_sum(x.a, x.b, x.w, kTerm));
    }
  }
}

template <bool Parallel>
void BM_inner_minimum(benchmark::State& state) {
  const Data& x = data(state.range(0));
  for (auto _ : state) {
    if constexpr (Parallel) {
      benchmark::DoNotOptimize(kernels::parallel::inner_minimum(x.a, x.b, x.w, 1.7));
    } else {
      benchmark::DoNotOptimize(kernels::serial::inner_minimum(x.a, x.b, x.w, 1.7));
    }
  }
}

}  // namespace

BENCHMARK(BM_overlap<false>)->RangeMultiplier(4)->Range(8, 512);
BENCHMARK(BM_overlap<true>)->RangeMultiplier(4)->Range(8, 512);
BENCHMARK(BM_pair_sum<false>)->RangeMultiplier(4)->Range(8, 512);
BENCHMARK(BM_pair_sum<true>)->RangeMultiplier(4)->Range(8, 512);
BENCHMARK(BM_inner_minimum<false>)->RangeMultiplier(4)->Range(8, 512);
BENCHMARK(BM_inner_minimum<true>)->RangeMultiplier(4)->Range(8, 512);

BENCHMARK_MAIN();
