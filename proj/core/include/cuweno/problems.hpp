#pragma once

// Registry of benchmark problems: smooth advection, Riemann shock tubes,
// shock/entropy-wave interaction, interacting blast waves, a 2D Riemann
// problem, the forward-facing step and the double Mach reflection.

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cuweno/boundary.hpp"
#include "cuweno/equations.hpp"
#include "cuweno/field.hpp"
#include "cuweno/time_integration.hpp"

namespace cuweno {

enum class EquationKind { advection, euler1d, euler2d };

std::size_t nvar_of(EquationKind k);
std::string_view equation_name(EquationKind k);

enum class ReferenceKind {
  none,
  analytic_advection,  // sin(pi (x - t))
  exact_riemann,       // exact Riemann solution from `riemann`
  fine_grid,           // WENO5-JS on a refined grid
};

struct RiemannData {
  Primitive1D left;
  Primitive1D right;
  double x0 = 0.0;
};

struct ProblemSpec {
  std::string id;
  std::string description;
  EquationKind equations = EquationKind::euler1d;
  Grid grid;
  /// Writes the conserved initial state at (x, y); y is 0 for 1D problems.
  std::function<void(double x, double y, std::span<double> conserved)> initial;
  BoundarySet boundaries;
  std::optional<StepMask> mask;
  TimeControls time;
  double p = 100.0;  // ZA global-indicator scale used for this problem
  ReferenceKind reference = ReferenceKind::none;
  std::optional<RiemannData> riemann;
  int reference_refinement = 5;

  std::size_t nvar() const { return nvar_of(equations); }

  /// Throws std::invalid_argument on resolution < 10, missing initial data or
  /// an inconsistent reference/boundary setup.
  void validate() const;

  /// Same problem on nx cells; 2D problems keep their aspect ratio unless ny > 0.
  ProblemSpec with_resolution(int nx, int ny = 0) const;
};

const std::vector<std::string>& problem_ids();

/// Throws std::invalid_argument listing the valid ids for an unknown name.
ProblemSpec make_problem(std::string_view id);

}  // namespace cuweno
