#pragma once

// Exact solution of the 1D Riemann problem for an ideal gas.
// Newton iteration on the star-region pressure from a two-rarefaction guess,
// followed by self-similar sampling in x/t.

#include <stdexcept>

#include "cuweno/equations.hpp"

namespace cuweno {

class VacuumGenerated : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class WaveKind { shock, rarefaction };

struct RiemannSolution {
  Primitive1D left;
  Primitive1D right;
  double gamma = kGamma;

  double p_star = 0.0;
  double u_star = 0.0;
  WaveKind left_wave = WaveKind::rarefaction;
  WaveKind right_wave = WaveKind::rarefaction;
  int iterations = 0;

  /// Primitive state at the similarity coordinate xi = (x - x0) / t.
  Primitive1D sample(double xi) const;

  /// |f_L(p*) + f_R(p*) + (u_R - u_L)|, zero at the exact star pressure.
  double residual() const;
};

/// Throws std::invalid_argument for non-positive input density or pressure
/// and VacuumGenerated when the data would open a vacuum.
RiemannSolution solve_riemann(const Primitive1D& left, const Primitive1D& right,
                              double gamma = kGamma);

inline Primitive1D exact_riemann(const Primitive1D& left, const Primitive1D& right,
                                 double gamma, double x_over_t) {
  return solve_riemann(left, right, gamma).sample(x_over_t);
}

/// Pressure function f_K(p) of one side of the fan and its derivative.
struct PressureFunction {
  double value;
  double derivative;
};
PressureFunction pressure_function(double p, const Primitive1D& side, double gamma);

}  // namespace cuweno
