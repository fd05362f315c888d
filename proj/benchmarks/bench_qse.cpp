#include <benchmark/benchmark.h>

#include <random>

#include "qse/ed_oracle.hpp"
#include "qse/steering_ellipsoid.hpp"
#include "qse/two_qubit_state.hpp"
#include "qse/xxz_model.hpp"

namespace {

void BM_GroundEnergy(benchmark::State& state) {
  // Jitter defeats the memo cache so each iteration pays the quadrature.
  double delta = 0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(qse::ground_energy(delta));
    delta += 1e-9;
  }
}
BENCHMARK(BM_GroundEnergy);

void BM_ZzCorrelator(benchmark::State& state) {
  double delta = 0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(qse::zz_correlator(delta));
    delta += 1e-9;
  }
}
BENCHMARK(BM_ZzCorrelator);

void BM_EllipsoidFromRandomState(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const auto form = qse::decompose(qse::TwoQubitState::random(rng, 4));
  for (auto _ : state)
    benchmark::DoNotOptimize(qse::ellipsoid_for_a(form));
}
BENCHMARK(BM_EllipsoidFromRandomState);

void BM_ExactDiagonalization(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(qse::ed::ground_state({n, 0.5}));
}
BENCHMARK(BM_ExactDiagonalization)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
