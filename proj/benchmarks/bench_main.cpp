#include <benchmark/benchmark.h>

#include "sop/energy_cost.hpp"

using namespace sop;

namespace {

WindowFunctions bench_window(int n) {
  Vector x = Vector::Zero(n), w = Vector::Zero(n);
  x(0) = 1.0;
  w(0) = 1.0;
  w(1) = 4.0;
  return WindowFunctions::no_mixing(std::move(x), std::move(w));
}

void BM_correlators(benchmark::State& state) {
  const LatticeSpec spec(static_cast<int>(state.range(0)), 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(correlators(spec));
  }
}
BENCHMARK(BM_correlators)->Arg(32)->Arg(128)->Arg(512);

void BM_vacuum_spectrum(benchmark::State& state) {
  const LatticeSpec spec(static_cast<int>(state.range(0)), 2.0);
  const CovarianceMatrix cov = vacuum_covariance(spec);
  for (auto _ : state) {
    benchmark::DoNotOptimize(williamson_eigenvalues(cov));
  }
}
BENCHMARK(BM_vacuum_spectrum)->Arg(8)->Arg(32);

void BM_partner_pipeline(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const VacuumCorrelators corr = correlators(LatticeSpec(n, 1.0));
  const WindowFunctions win = bench_window(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(partner_window(standard_form(win, corr), corr));
  }
}
BENCHMARK(BM_partner_pipeline)->Arg(8)->Arg(32);

void BM_harvest(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const LatticeSpec spec(n, 1.0);
  const VacuumCorrelators corr = correlators(spec);
  const PartnerPair pair = partner_window(standard_form(bench_window(n), corr), corr);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        harvest(pair, DeviceState::vacuum(), DeviceState::vacuum(), spec));
  }
}
BENCHMARK(BM_harvest)->Arg(8)->Arg(32);

void BM_cost_coefficients(benchmark::State& state) {
  const N3Model model = build_n3(1.0, 0.01);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cost_coefficients(model));
    benchmark::DoNotOptimize(cost_coefficients_oracle(model));
  }
}
BENCHMARK(BM_cost_coefficients);

void BM_sweep_row(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(phi_sweep(2));
  }
}
BENCHMARK(BM_sweep_row);

}  // namespace

BENCHMARK_MAIN();
