#include <benchmark/benchmark.h>

#include <cmath>

#include "sh1d/exact.hpp"
#include "sh1d/front_tracking.hpp"
#include "sh1d/lagrangian.hpp"
#include "sh1d/model.hpp"
#include "sh1d/noc.hpp"

using namespace sh1d;

namespace {

constexpr double deg = M_PI / 180.0;

EulerianField shock_field(int n) {
  const MaterialParams p{40.0 * deg, 40.0 * deg, 1.0, 0.0};
  StepProfile profile(24.0, 0.3, 1.3148317202133238, 0.9, 0.1);
  EulerianField f = initial_cell_averages(profile, 0.0, 36.0 / n, n);
  f.bc = EulerianBc::InflowOutflow;
  f.inflow_left = f.w[0];
  update_beta(f, p, Track::inclined_plane(40.0 * deg));
  return f;
}

void BM_NocStep(benchmark::State& state, ReconMethod method) {
  const MaterialParams p{40.0 * deg, 40.0 * deg, 1.0, 0.0};
  const Track track = Track::inclined_plane(40.0 * deg);
  EulerianField f = shock_field(static_cast<int>(state.range(0)));
  const double dt = cfl_dt(f, 0.4, 1e9);
  for (auto _ : state) {
    const Reconstruction r = reconstruct(f, method);
    EulerianField g = noc_step(f, r, dt, p, track);
    benchmark::DoNotOptimize(g.w.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_FrontTrackingStep(benchmark::State& state) {
  const MaterialParams p{30.0 * deg, 30.0 * deg, 1.0, 0.0};
  const Track track = Track::inclined_plane(40.0 * deg);
  const int n = static_cast<int>(state.range(0));
  ParabolicCapProfile cap(4.0, 3.2, 1.0, 1.2);
  const NocOptions opt{ReconMethod::WenoQuadratic, DerivativeForm::Jacobian};
  for (auto _ : state) {
    state.PauseTiming();
    FrontTrackedField ft = ft_init(cap, 0.0, 36.0 / n, n, 0.8, 7.2, p, track);
    const double dt = cfl_dt(ft.field, 0.3, 1e9);
    state.ResumeTiming();
    ft_advance(ft, dt, p, track, opt, 2);
    benchmark::DoNotOptimize(ft.field.w.data());
  }
  state.SetItemsProcessed(state.iterations() * n);
}

void BM_LagrangianStep(benchmark::State& state) {
  const MaterialParams p{30.0 * deg, 30.0 * deg, 1.0, 0.0};
  const Track track = Track::inclined_plane(40.0 * deg);
  ParabolicCapProfile cap(4.0, 3.2, 1.0, 1.2);
  LagrangianMesh mesh =
      lagrangian_init(cap, 0.8, 7.2, static_cast<int>(state.range(0)));
  const LagrangianOptions opt{LagrangianBc::MarginVacuum, true};
  for (auto _ : state) {
    lagrangian_step(mesh, 1e-6, p, track, opt);
    benchmark::DoNotOptimize(mesh.h.data());
  }
}

void BM_SolveG(benchmark::State& state) {
  const MaterialParams p{30.0 * deg, 30.0 * deg, 1.0, 0.0};
  const double beta = pressure_factor(p, 40.0 * deg, PressureBranch::Active);
  const SimilaritySetup sim{3.2, 0.0, 1.2, 40.0 * deg, 30.0 * deg, beta,
                            64.0 / 15.0, 4.0};
  double t = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_g(t, sim).g);
    t = t < 8.0 ? t + 0.05 : 0.1;
  }
}

void BM_ShockSpeed(benchmark::State& state) {
  const ShockSetup s{0.3, 0.9, 0.1, 1.8447701355455792, ShockFamily::First, 24.0};
  for (auto _ : state) benchmark::DoNotOptimize(shock_speed(s).v_n);
}

}  // namespace

BENCHMARK_CAPTURE(BM_NocStep, superbee, ReconMethod::Superbee)->Arg(360)->Arg(1440);
BENCHMARK_CAPTURE(BM_NocStep, weno_quadratic, ReconMethod::WenoQuadratic)
    ->Arg(360)
    ->Arg(1440);
BENCHMARK(BM_FrontTrackingStep)->Arg(360);
BENCHMARK(BM_LagrangianStep)->Arg(16)->Arg(256);
BENCHMARK(BM_SolveG);
BENCHMARK(BM_ShockSpeed);

BENCHMARK_MAIN();
