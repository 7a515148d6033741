#include "cuweno/riemann.hpp"

#include <algorithm>
#include <cmath>

namespace cuweno {

namespace {

constexpr double kTolerance = 1e-12;
constexpr int kMaxIterations = 100;

double sound_speed(const Primitive1D& w, double gamma) {
  return std::sqrt(gamma * w.p / w.rho);
}

}  // namespace

PressureFunction pressure_function(double p, const Primitive1D& side, double gamma) {
  const double c = sound_speed(side, gamma);
  if (p > side.p) {
    const double a = 2.0 / ((gamma + 1.0) * side.rho);
    const double b = (gamma - 1.0) / (gamma + 1.0) * side.p;
    const double root = std::sqrt(a / (p + b));
    return {(p - side.p) * root, root * (1.0 - 0.5 * (p - side.p) / (b + p))};
  }
  const double ratio = p / side.p;
  const double z = (gamma - 1.0) / (2.0 * gamma);
  return {2.0 * c / (gamma - 1.0) * (std::pow(ratio, z) - 1.0),
          std::pow(ratio, -(gamma + 1.0) / (2.0 * gamma)) / (side.rho * c)};
}

RiemannSolution solve_riemann(const Primitive1D& left, const Primitive1D& right,
                              double gamma) {
  if (!(left.rho > 0.0 && left.p > 0.0 && right.rho > 0.0 && right.p > 0.0))
    throw std::invalid_argument("Riemann data must have positive density and pressure");

  const double cl = sound_speed(left, gamma);
  const double cr = sound_speed(right, gamma);
  const double du = right.u - left.u;
  if (2.0 / (gamma - 1.0) * (cl + cr) <= du)
    throw VacuumGenerated("Riemann data generate a vacuum");

  RiemannSolution sol;
  sol.left = left;
  sol.right = right;
  sol.gamma = gamma;

  // Two-rarefaction guess.
  const double z = (gamma - 1.0) / (2.0 * gamma);
  double p = std::pow((cl + cr - 0.5 * (gamma - 1.0) * du) /
                          (cl / std::pow(left.p, z) + cr / std::pow(right.p, z)),
                      1.0 / z);

  int it = 0;
  for (; it < kMaxIterations; ++it) {
    const PressureFunction fl = pressure_function(p, left, gamma);
    const PressureFunction fr = pressure_function(p, right, gamma);
    double next = p - (fl.value + fr.value + du) / (fl.derivative + fr.derivative);
    if (next <= 0.0) next = 0.5 * p;
    const double change = 2.0 * std::abs(next - p) / (next + p);
    p = next;
    if (change < kTolerance) break;
  }
  sol.iterations = it + 1;
  sol.p_star = p;
  const PressureFunction fl = pressure_function(p, left, gamma);
  const PressureFunction fr = pressure_function(p, right, gamma);
  sol.u_star = 0.5 * (left.u + right.u) + 0.5 * (fr.value - fl.value);
  sol.left_wave = p > left.p ? WaveKind::shock : WaveKind::rarefaction;
  sol.right_wave = p > right.p ? WaveKind::shock : WaveKind::rarefaction;
  return sol;
}

double RiemannSolution::residual() const {
  return std::abs(pressure_function(p_star, left, gamma).value +
                  pressure_function(p_star, right, gamma).value + right.u - left.u);
}

Primitive1D RiemannSolution::sample(double xi) const {
  const double g = gamma;
  const double gm = (g - 1.0) / (g + 1.0);
  if (xi <= u_star) {
    const double c = std::sqrt(g * left.p / left.rho);
    if (left_wave == WaveKind::shock) {
      const double ratio = p_star / left.p;
      const double speed =
          left.u - c * std::sqrt((g + 1.0) / (2.0 * g) * ratio + (g - 1.0) / (2.0 * g));
      if (xi <= speed) return left;
      return {left.rho * (ratio + gm) / (gm * ratio + 1.0), u_star, p_star};
    }
    const double head = left.u - c;
    if (xi <= head) return left;
    const double c_star = c * std::pow(p_star / left.p, (g - 1.0) / (2.0 * g));
    const double tail = u_star - c_star;
    if (xi > tail)
      return {left.rho * std::pow(p_star / left.p, 1.0 / g), u_star, p_star};
    const double factor = 2.0 / (g + 1.0) + gm / c * (left.u - xi);
    return {left.rho * std::pow(factor, 2.0 / (g - 1.0)),
            2.0 / (g + 1.0) * (c + 0.5 * (g - 1.0) * left.u + xi),
            left.p * std::pow(factor, 2.0 * g / (g - 1.0))};
  }

  const double c = std::sqrt(g * right.p / right.rho);
  if (right_wave == WaveKind::shock) {
    const double ratio = p_star / right.p;
    const double speed =
        right.u + c * std::sqrt((g + 1.0) / (2.0 * g) * ratio + (g - 1.0) / (2.0 * g));
    if (xi >= speed) return right;
    return {right.rho * (ratio + gm) / (gm * ratio + 1.0), u_star, p_star};
  }
  const double head = right.u + c;
  if (xi >= head) return right;
  const double c_star = c * std::pow(p_star / right.p, (g - 1.0) / (2.0 * g));
  const double tail = u_star + c_star;
  if (xi < tail) return {right.rho * std::pow(p_star / right.p, 1.0 / g), u_star, p_star};
  const double factor = 2.0 / (g + 1.0) - gm / c * (right.u - xi);
  return {right.rho * std::pow(factor, 2.0 / (g - 1.0)),
          2.0 / (g + 1.0) * (-c + 0.5 * (g - 1.0) * right.u + xi),
          right.p * std::pow(factor, 2.0 * g / (g - 1.0))};
}

}  // namespace cuweno
