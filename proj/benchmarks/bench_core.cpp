#include <benchmark/benchmark.h>

#include "lnr/analysis.hpp"
#include "lnr/bounds.hpp"
#include "lnr/oracle.hpp"
#include "lnr/quantum.hpp"
#include "lnr/rng.hpp"

namespace {

std::array<lnr::UnitVec3, 3> fixed_triple() {
  lnr::SplitMix64 g = lnr::substream(7u, 0u);
  return lnr::random_independent_triple(g);
}

void BM_ClosedFormMin(benchmark::State& state) {
  const auto e = fixed_triple();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        lnr::min_abs_projection_closed_form(e[0], e[1], e[2]));
  }
}
BENCHMARK(BM_ClosedFormMin);

void BM_BruteForceMin(benchmark::State& state) {
  const auto e = fixed_triple();
  const double step = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lnr::sphere_min_bruteforce(e[0], e[1], e[2], step));
  }
}
BENCHMARK(BM_BruteForceMin)->Arg(20)->Arg(50)->Arg(100);

void BM_BoundCategoryII(benchmark::State& state) {
  const auto s = lnr::make_symmetric_settings_II(lnr::deg_to_rad(112.63));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lnr::bound_category_II(s));
  }
}
BENCHMARK(BM_BoundCategoryII);

void BM_EvaluateViolationI(benchmark::State& state) {
  const auto s = lnr::make_orthogonal_settings_I(2.0 * std::atan(1.0 / 3.0));
  const lnr::CorrelationModel model{1.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(lnr::evaluate_violation(model, s));
  }
}
BENCHMARK(BM_EvaluateViolationI);

void BM_ScanSymmetricII(benchmark::State& state) {
  const lnr::CorrelationModel model{1.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(lnr::scan_symmetric_II(
        model, lnr::deg_to_rad(90.0), lnr::deg_to_rad(120.0),
        lnr::deg_to_rad(0.25)));
  }
}
BENCHMARK(BM_ScanSymmetricII);

void BM_RobustnessSweep(benchmark::State& state) {
  const auto s = lnr::make_orthogonal_settings_I(2.0 * std::atan(1.0 / 3.0));
  const lnr::CorrelationModel model{1.0};
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        lnr::robustness_sweep(s, model, lnr::deg_to_rad(1.0), n, 12345u));
  }
}
BENCHMARK(BM_RobustnessSweep)->Arg(100)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
