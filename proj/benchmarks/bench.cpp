#include <benchmark/benchmark.h>

#include <factorlab/chains.hpp>
#include <factorlab/factor.hpp>
#include <factorlab/lengths.hpp>
#include <factorlab/omega.hpp>

using namespace factorlab;

namespace {

const Monoid& chicken() {
  static const Monoid m = Monoid::from_generators({6, 9, 20});
  return m;
}

void BM_length_row(benchmark::State& state) {
  const auto& m = chicken();
  for (auto _ : state) {
    benchmark::DoNotOptimize(m.length_row(state.range(0)));
  }
}
BENCHMARK(BM_length_row)->Arg(1000)->Arg(10000)->Arg(100000);

void BM_factorizations(benchmark::State& state) {
  const auto& m = chicken();
  for (auto _ : state) {
    benchmark::DoNotOptimize(factorizations(m, state.range(0)));
  }
}
BENCHMARK(BM_factorizations)->Arg(60)->Arg(600)->Arg(6000);

void BM_bullet_sweep(benchmark::State& state) {
  const auto& m = chicken();
  for (auto _ : state) {
    benchmark::DoNotOptimize(omega_series(m, state.range(0)));
  }
}
BENCHMARK(BM_bullet_sweep)->Arg(300)->Arg(3000);

void BM_catenary_betti(benchmark::State& state) {
  const auto m = Monoid::from_generators({11, 36, 39});
  for (auto _ : state) {
    for (Element b : betti_elements(m).elements) {
      benchmark::DoNotOptimize(catenary_degree(m, b));
    }
  }
}
BENCHMARK(BM_catenary_betti);

void BM_delta_certified(benchmark::State& state) {
  const auto m = Monoid::from_generators({17, 33, 53, 71});
  for (auto _ : state) {
    benchmark::DoNotOptimize(delta_of_monoid(m));
  }
}
BENCHMARK(BM_delta_certified);

}  // namespace

BENCHMARK_MAIN();
