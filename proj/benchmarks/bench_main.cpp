#include <benchmark/benchmark.h>

#include "hog/analytics.hpp"
#include "hog/foc.hpp"
#include "hog/model.hpp"
#include "hog/simulate.hpp"

namespace {

const hog::Params kParams{2.0, 1.0, 0.5, 0.3};

void BM_BgpRates(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hog::bgp_rates(kParams));
}
BENCHMARK(BM_BgpRates);

void BM_SolveControls(benchmark::State& state) {
  const auto [xs, ctr] = hog::bgp_initial_state(kParams, 1.0);
  benchmark::DoNotOptimize(ctr);
  for (auto _ : state)
    benchmark::DoNotOptimize(hog::solve_controls(kParams, xs.state.k, xs.state.h,
                                                 xs.costates.lambda1,
                                                 xs.costates.lambda2));
}
BENCHMARK(BM_SolveControls);

void BM_OdeRhs(benchmark::State& state) {
  const auto [xs, ctr] = hog::bgp_initial_state(kParams, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(hog::ode_rhs(kParams, xs, ctr));
}
BENCHMARK(BM_OdeRhs);

void BM_InitialState(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hog::bgp_initial_state(kParams, 1.0));
}
BENCHMARK(BM_InitialState);

void BM_Integrate(benchmark::State& state) {
  const auto [x0, ctr] = hog::bgp_initial_state(kParams, 1.0);
  benchmark::DoNotOptimize(ctr);
  for (auto _ : state)
    benchmark::DoNotOptimize(hog::integrate(kParams, x0, 20.0));
}
BENCHMARK(BM_Integrate);

void BM_VerifyBgp(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hog::verify_bgp(kParams, 1.0, 20.0));
}
BENCHMARK(BM_VerifyBgp);

void BM_BruteForceControls(benchmark::State& state) {
  const auto [xs, ctr] = hog::bgp_initial_state(kParams, 1.0);
  hog::GridSpec g;
  g.c_lo = ctr.c / 2.0;
  g.c_hi = ctr.c * 2.0;
  g.s_lo = 0.0;
  g.s_hi = ctr.s * 2.0;
  g.l_lo = ctr.l / 2.0;
  g.l_hi = ctr.l * 2.0;
  for (auto _ : state)
    benchmark::DoNotOptimize(hog::brute_force_controls(
        kParams, xs.state.k, xs.state.h, xs.costates.lambda1, xs.costates.lambda2, g));
}
BENCHMARK(BM_BruteForceControls);

}  // namespace

BENCHMARK_MAIN();
