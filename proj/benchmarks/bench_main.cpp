#include <benchmark/benchmark.h>

#include "lgbell/bell.hpp"
#include "lgbell/quadrature.hpp"
#include "lgbell/specfun.hpp"
#include "lgbell/wigner.hpp"

namespace {

void BM_Laguerre(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  double x = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(lgbell::laguerre(p, 3, x));
    x += 1e-9;
  }
}
BENCHMARK(BM_Laguerre)->Arg(1)->Arg(10)->Arg(64);

void BM_WignerClosedForm(benchmark::State& state) {
  const lgbell::ModeIndex mode{static_cast<int>(state.range(0)), 0};
  lgbell::PhasePoint p{0.3, -0.2, 0.1, 0.45};
  for (auto _ : state) {
    benchmark::DoNotOptimize(lgbell::wigner_lg(mode, p));
    p.x += 1e-9;
  }
}
BENCHMARK(BM_WignerClosedForm)->Arg(1)->Arg(30);

void BM_WignerNumeric(benchmark::State& state) {
  const lgbell::ModeIndex mode{2, 1};
  const lgbell::NumericWigner engine(
      [mode](double x, double y) { return lgbell::lg_amplitude(mode, x, y); },
      lgbell::default_wigner_quadrature(mode));
  const lgbell::PhasePoint p{0.3, -0.2, 0.1, 0.45};
  for (auto _ : state) benchmark::DoNotOptimize(engine(p));
}
BENCHMARK(BM_WignerNumeric);

void BM_MaximizeRestricted(benchmark::State& state) {
  const auto pi = lgbell::lg_pi({1, 0});
  const auto cfg = lgbell::OptimizerConfig::restricted_defaults();
  for (auto _ : state) {
    benchmark::DoNotOptimize(lgbell::maximize_bell(pi, lgbell::SettingsKind::restricted_2, cfg));
  }
}
BENCHMARK(BM_MaximizeRestricted)->Unit(benchmark::kMillisecond);

void BM_MaximizeGeneral(benchmark::State& state) {
  const auto pi = lgbell::lg_pi({1, 0});
  const auto cfg = lgbell::OptimizerConfig::general_defaults();
  for (auto _ : state) {
    benchmark::DoNotOptimize(lgbell::maximize_bell(pi, lgbell::SettingsKind::general_8, cfg));
  }
}
BENCHMARK(BM_MaximizeGeneral)->Unit(benchmark::kMillisecond);

void BM_Moments(benchmark::State& state) {
  const lgbell::ModeIndex mode{static_cast<int>(state.range(0)), 0};
  const auto quad = lgbell::default_moment_quadrature(mode);
  for (auto _ : state) benchmark::DoNotOptimize(lgbell::moments(mode, quad));
}
BENCHMARK(BM_Moments)->Arg(1)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
