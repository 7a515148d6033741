#include "cuweno/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "cuweno/riemann.hpp"
#include "cuweno/solver.hpp"
#include "cuweno/time_integration.hpp"

namespace cuweno {

std::vector<double> Snapshot::component(std::size_t v) const {
  const std::size_t n = grid.cell_count();
  std::vector<double> out(n);
  for (std::size_t c = 0; c < n; ++c) out[c] = values[c * nvar() + v];
  return out;
}

SchemeConfig scheme_for(const ProblemSpec& spec, Scheme s) {
  SchemeConfig cfg = SchemeConfig::defaults(s);
  cfg.p = spec.p;
  return cfg;
}

namespace {

template <class System>
RunResult run_system(const ProblemSpec& spec, const SchemeConfig& scheme,
                     const RunOptions& options, System sys) {
  constexpr std::size_t NV = System::nvar;
  const Grid& g = spec.grid;
  Field<NV> u(g);
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i)
      spec.initial(g.xc(i), g.yc(j), std::span<double>(u.cell(i, j), NV));

  SpatialOperator<System> op(sys, scheme, spec.boundaries, spec.mask, options.assembly);
  TvdRk3<Field<NV>> stepper;
  const TimeControls& tc = spec.time;
  const double spacing = g.dim == 2 ? std::min(g.dx(), g.dy()) : g.dx();

  const auto start = std::chrono::steady_clock::now();
  double t = 0.0;
  long steps = 0;
  while (t < tc.t_final && (options.max_steps < 0 || steps < options.max_steps)) {
    try {
      const double speed = tc.dt_rule == DtRule::cfl_over_speed ? op.max_speed(u) : 0.0;
      const double dt = compute_dt(speed, spacing, t, tc);
      const bool last = dt >= tc.t_final - t;
      stepper.step(u, t, dt, op);
      t = last ? tc.t_final : t + dt;
      ++steps;
    } catch (const std::runtime_error& e) {
      std::ostringstream os;
      os << spec.id << " [" << scheme_name(scheme.scheme) << "] step " << steps
         << ", t=" << t << ": " << e.what();
      throw SolverError(os.str());
    }
  }
  const auto stop = std::chrono::steady_clock::now();

  RunResult r;
  r.steps = steps;
  r.wall_seconds = std::chrono::duration<double>(stop - start).count();
  Snapshot& s = r.snapshot;
  s.problem = spec.id;
  s.scheme = scheme;
  s.equations = spec.equations;
  s.grid = g;
  s.mask = spec.mask;
  s.time = t;
  s.values.reserve(g.cell_count() * NV);
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i)
      for (std::size_t v = 0; v < NV; ++v) s.values.push_back(u.cell(i, j)[v]);
  return r;
}

}  // namespace

RunResult run_problem(const ProblemSpec& spec, const SchemeConfig& scheme,
                      const RunOptions& options) {
  spec.validate();
  scheme.validate();
  switch (spec.equations) {
    case EquationKind::advection: return run_system(spec, scheme, options, LinearAdvection{});
    case EquationKind::euler1d: return run_system(spec, scheme, options, Euler1D{});
    case EquationKind::euler2d: return run_system(spec, scheme, options, Euler2D{});
  }
  throw std::logic_error("unhandled equation kind");
}

ErrorNorms error_norms(std::span<const double> numeric, std::span<const double> exact) {
  if (numeric.size() != exact.size() || numeric.empty())
    throw std::invalid_argument("error_norms: sizes differ or are empty");
  ErrorNorms e;
  double sq = 0.0;
  for (std::size_t i = 0; i < numeric.size(); ++i) {
    const double d = std::abs(numeric[i] - exact[i]);
    e.l1 += d;
    sq += d * d;
    e.linf = std::max(e.linf, d);
  }
  const double n = static_cast<double>(numeric.size());
  e.l1 /= n;
  e.l2 = std::sqrt(sq / n);
  return e;
}

std::optional<double> ErrorReport::order(std::size_t row, Norm n) const {
  if (row == 0 || row >= errors.size()) return std::nullopt;
  const double coarse = errors[row - 1].get(n), fine = errors[row].get(n);
  if (!(coarse > 0.0 && fine > 0.0)) return std::nullopt;
  const double ratio = static_cast<double>(resolutions[row]) / resolutions[row - 1];
  return std::log(coarse / fine) / std::log(ratio);
}

std::vector<double> sample_onto(const Grid& fine, std::span<const double> fine_values,
                                const Grid& coarse) {
  std::vector<double> out(coarse.nx);
  const double h = fine.dx();
  for (int i = 0; i < coarse.nx; ++i) {
    const double s = (coarse.xc(i) - fine.x0) / h - 0.5;
    const int k = std::clamp(static_cast<int>(std::floor(s)), 0, fine.nx - 2);
    const double w = std::clamp(s - k, 0.0, 1.0);
    out[i] = (1.0 - w) * fine_values[k] + w * fine_values[k + 1];
  }
  return out;
}

std::vector<double> reference_solution(const ProblemSpec& spec) {
  const Grid& g = spec.grid;
  if (g.dim != 1) throw std::invalid_argument("reference solutions are 1D only");
  const double t = spec.time.t_final;
  std::vector<double> ref(g.nx);
  switch (spec.reference) {
    case ReferenceKind::analytic_advection:
      for (int i = 0; i < g.nx; ++i) ref[i] = advection_exact(g.xc(i), t);
      return ref;
    case ReferenceKind::exact_riemann: {
      const RiemannSolution sol = solve_riemann(spec.riemann->left, spec.riemann->right);
      for (int i = 0; i < g.nx; ++i)
        ref[i] = sol.sample((g.xc(i) - spec.riemann->x0) / t).rho;
      return ref;
    }
    case ReferenceKind::fine_grid: {
      const ProblemSpec fine = spec.with_resolution(g.nx * spec.reference_refinement);
      const RunResult r = run_problem(fine, scheme_for(fine, Scheme::weno5_js));
      return sample_onto(fine.grid, r.snapshot.component(0), g);
    }
    case ReferenceKind::none:
      break;
  }
  throw std::invalid_argument(spec.id + ": no reference solution available");
}

ErrorReport convergence_study(const ProblemSpec& spec, const SchemeConfig& scheme,
                              std::span<const int> resolutions, const RunOptions& options) {
  ErrorReport report;
  report.problem = spec.id;
  report.scheme = std::string(scheme_name(scheme.scheme));
  for (int n : resolutions) {
    ProblemSpec s = spec.with_resolution(n);
    s.time.dt_rule = DtRule::cfl_dx_pow_4over3;
    const RunResult r = run_problem(s, scheme, options);
    const std::vector<double> exact = reference_solution(s);
    const std::vector<double> numeric = r.snapshot.component(0);
    report.resolutions.push_back(n);
    report.errors.push_back(error_norms(numeric, exact));
  }
  return report;
}

}  // namespace cuweno
