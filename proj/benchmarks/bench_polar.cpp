#include <benchmark/benchmark.h>

#include <random>

#include "polar/clifford/clifford.hpp"
#include "polar/energetics/energetics.hpp"
#include "polar/hydrogen/hydrogen.hpp"
#include "polar/superconduct/superconduct.hpp"

namespace {

using namespace polar;
namespace hy = polar::hydrogen;

void BM_PolarStateAt(benchmark::State& state) {
  const auto hf = hy::fields({});
  const Point p(0, 1.3, 0.9, 0);
  for (auto _ : state) benchmark::DoNotOptimize(hf.polar.at(p));
}
BENCHMARK(BM_PolarStateAt);

void BM_FluidProjection(benchmark::State& state) {
  const auto hf = hy::fields({});
  const auto st = hf.polar.at(Point(0, 1.3, 0.9, 0));
  const auto kin = st.kinematics();
  for (auto _ : state) {
    const auto et = energetics::energy_tensor(st);
    benchmark::DoNotOptimize(energetics::project_fluid(et.T_sym, st, kin));
  }
}
BENCHMARK(BM_FluidProjection);

void BM_ResidualGroups(benchmark::State& state) {
  const auto hf = hy::fields({});
  const auto st = hf.polar.at(Point(0, 1.3, 0.9, 0));
  const auto kin = st.kinematics();
  for (auto _ : state) {
    benchmark::DoNotOptimize(dynamics::residual_normal_form(st));
    benchmark::DoNotOptimize(dynamics::residual_momentum_group(st));
    benchmark::DoNotOptimize(dynamics::residual_AB_groups(st));
    benchmark::DoNotOptimize(dynamics::residual_projected(st, kin));
  }
}
BENCHMARK(BM_ResidualGroups);

void BM_MpdResiduals(benchmark::State& state) {
  const auto hf = hy::fields({});
  const Point p(0, 1.3, 0.9, 0);
  for (auto _ : state) benchmark::DoNotOptimize(energetics::mpd_residuals(hf.polar, p));
}
BENCHMARK(BM_MpdResiduals);

void BM_Bilinears(benchmark::State& state) {
  const auto g = clifford::build_gammas(clifford::Representation::Standard);
  std::mt19937_64 rng(1);
  std::normal_distribution<double> nd;
  clifford::Spinor psi;
  for (int i = 0; i < 4; ++i) psi(i) = {nd(rng), nd(rng)};
  for (auto _ : state) benchmark::DoNotOptimize(clifford::bilinears(psi, g));
}
BENCHMARK(BM_Bilinears);

void BM_VerifyHydrogen(benchmark::State& state) {
  hy::GridSpec grid;
  grid.n_r = grid.n_theta = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hy::verify({}, grid));
  state.SetItemsProcessed(state.iterations() * grid.n_r * grid.n_theta);
}
BENCHMARK(BM_VerifyHydrogen)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_Meissner(benchmark::State& state) {
  const int samples = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(superconduct::meissner_profile(100, 1, 1, 2.0, samples));
}
BENCHMARK(BM_Meissner)->Arg(1000)->Arg(100000);

}  // namespace
BENCHMARK_MAIN();
