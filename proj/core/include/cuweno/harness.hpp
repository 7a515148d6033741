#pragma once

// Running problems, measuring errors and convergence orders.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cuweno/flux.hpp"
#include "cuweno/kernels.hpp"
#include "cuweno/problems.hpp"

namespace cuweno {

/// Interior solution at the end of a run. `values` is cell-major, rows of
/// x-cells stacked in y: index (j * nx + i) * nvar + v.
struct Snapshot {
  std::string problem;
  SchemeConfig scheme;
  EquationKind equations = EquationKind::euler1d;
  Grid grid;
  std::optional<StepMask> mask;
  double time = 0.0;
  std::vector<double> values;

  std::size_t nvar() const { return nvar_of(equations); }
  double at(int i, int j, std::size_t v) const {
    return values[(static_cast<std::size_t>(j) * grid.nx + i) * nvar() + v];
  }
  /// Component v over all interior cells (row by row).
  std::vector<double> component(std::size_t v) const;
};

struct RunOptions {
  AssemblyOptions assembly;
  long max_steps = -1;  // stop early after this many steps when >= 0
};

struct RunResult {
  Snapshot snapshot;
  double wall_seconds = 0.0;
  long steps = 0;
};

/// Advances `spec` to its final time (or max_steps) with the given scheme.
/// Non-physical states and non-finite values are rethrown as SolverError
/// tagged with the step number and time.
RunResult run_problem(const ProblemSpec& spec, const SchemeConfig& scheme,
                      const RunOptions& options = {});

/// Scheme defaults for `s`, with p taken from the problem.
SchemeConfig scheme_for(const ProblemSpec& spec, Scheme s);

// ---------------------------------------------------------------------------

enum class Norm { l1, l2, linf };

struct ErrorNorms {
  double l1 = 0.0;
  double l2 = 0.0;
  double linf = 0.0;

  double get(Norm n) const { return n == Norm::l1 ? l1 : (n == Norm::l2 ? l2 : linf); }
};

/// L1 = mean |e|, L2 = sqrt(mean e^2), Linf = max |e|.
ErrorNorms error_norms(std::span<const double> numeric, std::span<const double> exact);

struct ErrorReport {
  std::string problem;
  std::string scheme;
  std::vector<int> resolutions;
  std::vector<ErrorNorms> errors;

  /// log2(e_{row-1} / e_row); defined for row >= 1 only.
  std::optional<double> order(std::size_t row, Norm n) const;
};

/// Runs the resolution ladder with the dx^(4/3) time-step rule and measures
/// errors of component 0 against the problem's reference.
ErrorReport convergence_study(const ProblemSpec& spec, const SchemeConfig& scheme,
                              std::span<const int> resolutions,
                              const RunOptions& options = {});

/// Reference values of component 0 (density, or u for advection) at the
/// interior cell centres of `spec` at its final time. 1D only.
std::vector<double> reference_solution(const ProblemSpec& spec);

/// Linear interpolation of fine-grid cell-centred data onto `coarse` centres.
std::vector<double> sample_onto(const Grid& fine, std::span<const double> fine_values,
                                const Grid& coarse);

}  // namespace cuweno
