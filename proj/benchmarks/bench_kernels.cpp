#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "cuweno/harness.hpp"
#include "cuweno/problems.hpp"
#include "cuweno/solver.hpp"

using namespace cuweno;

namespace {

std::vector<double> random_samples(std::size_t n) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> v(n);
  for (auto& x : v) x = dist(rng);
  return v;
}

void BM_Reconstruct(benchmark::State& state) {
  const auto scheme = static_cast<Scheme>(state.range(0));
  const SchemeConfig cfg = SchemeConfig::defaults(scheme);
  const std::size_t width = cfg.window_size();
  const auto data = random_samples(4096 + width);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        reconstruct_interface(std::span<const double>(data.data() + i, width), cfg));
    i = (i + 1) & 4095;
  }
  state.SetLabel(std::string(scheme_name(scheme)));
}

void BM_EulerRhs1D(benchmark::State& state) {
  const ProblemSpec spec = make_problem("sod").with_resolution(static_cast<int>(state.range(0)));
  const Grid& g = spec.grid;
  Field<3> u(g), dudt(g);
  for (int i = 0; i < g.nx; ++i) spec.initial(g.xc(i), 0.0, {u.cell(i, 0), 3});
  SpatialOperator<Euler1D> op(Euler1D{}, scheme_for(spec, Scheme::weno4_za), spec.boundaries);
  for (auto _ : state) {
    op(u, 0.0, dudt);
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * (g.nx + 1));
}

void BM_EulerRhs2D(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ProblemSpec spec = make_problem("riemann-2d").with_resolution(n);
  const Grid& g = spec.grid;
  Field<4> u(g), dudt(g);
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) spec.initial(g.xc(i), g.yc(j), {u.cell(i, j), 4});
  SpatialOperator<Euler2D> op(Euler2D{}, scheme_for(spec, Scheme::weno4_za), spec.boundaries);
  for (auto _ : state) {
    op(u, 0.0, dudt);
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * 2 * (g.nx + 1) * g.ny);
}

}  // namespace

BENCHMARK(BM_Reconstruct)->DenseRange(0, static_cast<int>(all_schemes().size()) - 1);
BENCHMARK(BM_EulerRhs1D)->Arg(200)->Arg(800);
BENCHMARK(BM_EulerRhs2D)->Arg(100)->Arg(200);

BENCHMARK_MAIN();
