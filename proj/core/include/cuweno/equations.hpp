#pragma once

// Equation systems: scalar linear advection and the 1D/2D Euler equations of
// an ideal gas. Each system exposes the same small surface so the solver can
// be written once:
//
//   nvar                      number of conserved components
//   flux(u, axis)             physical flux in direction `axis`
//   max_speed(u, axis)        |normal velocity| + sound speed
//   admissible(u)             positivity of density and pressure

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>

namespace cuweno {

inline constexpr double kGamma = 1.4;

enum class Axis { x, y };

template <std::size_t N>
using StateVec = std::array<double, N>;

/// Thrown when a state violates rho > 0 or P > 0. `cell` is a flat index into
/// whatever container the caller was scanning, or -1 when not applicable.
class NonPhysicalState : public std::runtime_error {
 public:
  NonPhysicalState(const std::string& what, long cell)
      : std::runtime_error(what), cell_(cell) {}
  long cell() const { return cell_; }

 private:
  long cell_;
};

[[noreturn]] void throw_nonphysical(double rho, double p, long cell);

// ---------------------------------------------------------------------------

struct LinearAdvection {
  static constexpr std::size_t nvar = 1;
  using State = StateVec<1>;

  double speed = 1.0;

  State flux(const State& u, Axis = Axis::x) const { return {speed * u[0]}; }
  double max_speed(const State&, Axis = Axis::x) const { return std::abs(speed); }
  bool admissible(const State& u) const { return std::isfinite(u[0]); }
};

inline double advection_flux(double u) { return u; }

/// Exact solution of u_t + u_x = 0 with u(x, 0) = sin(pi x).
inline double advection_exact(double x, double t) {
  return std::sin(std::numbers::pi * (x - t));
}

// ---------------------------------------------------------------------------

struct Primitive1D {
  double rho = 1.0;
  double u = 0.0;
  double p = 1.0;
};

struct Primitive2D {
  double rho = 1.0;
  double u = 0.0;
  double v = 0.0;
  double p = 1.0;
};

/// Conserved variables (rho, rho*u, E).
struct Euler1D {
  static constexpr std::size_t nvar = 3;
  using State = StateVec<3>;

  double gamma = kGamma;

  double pressure(const State& s) const {
    return (gamma - 1.0) * (s[2] - 0.5 * s[1] * s[1] / s[0]);
  }

  bool admissible(const State& s) const {
    return s[0] > 0.0 && pressure(s) > 0.0 && std::isfinite(s[2]);
  }

  State flux(const State& s, Axis = Axis::x) const {
    const double u = s[1] / s[0];
    const double p = pressure(s);
    return {s[1], s[1] * u + p, u * (s[2] + p)};
  }

  double sound_speed(const State& s) const {
    return std::sqrt(gamma * pressure(s) / s[0]);
  }

  double max_speed(const State& s, Axis = Axis::x) const {
    return std::abs(s[1] / s[0]) + sound_speed(s);
  }

  State to_conserved(const Primitive1D& w) const {
    return {w.rho, w.rho * w.u, w.p / (gamma - 1.0) + 0.5 * w.rho * w.u * w.u};
  }

  Primitive1D to_primitive(const State& s) const {
    return {s[0], s[1] / s[0], pressure(s)};
  }
};

/// Conserved variables (rho, rho*u, rho*v, E).
struct Euler2D {
  static constexpr std::size_t nvar = 4;
  using State = StateVec<4>;

  double gamma = kGamma;

  double pressure(const State& s) const {
    return (gamma - 1.0) * (s[3] - 0.5 * (s[1] * s[1] + s[2] * s[2]) / s[0]);
  }

  bool admissible(const State& s) const {
    return s[0] > 0.0 && pressure(s) > 0.0 && std::isfinite(s[3]);
  }

  State flux(const State& s, Axis axis) const {
    return axis == Axis::x ? flux_x(s) : flux_y(s);
  }

  State flux_x(const State& s) const {
    const double u = s[1] / s[0];
    const double p = pressure(s);
    return {s[1], s[1] * u + p, s[2] * u, u * (s[3] + p)};
  }

  State flux_y(const State& s) const {
    const double v = s[2] / s[0];
    const double p = pressure(s);
    return {s[2], s[1] * v, s[2] * v + p, v * (s[3] + p)};
  }

  double sound_speed(const State& s) const {
    return std::sqrt(gamma * pressure(s) / s[0]);
  }

  double max_speed(const State& s, Axis axis) const {
    const double vn = (axis == Axis::x ? s[1] : s[2]) / s[0];
    return std::abs(vn) + sound_speed(s);
  }

  State to_conserved(const Primitive2D& w) const {
    return {w.rho, w.rho * w.u, w.rho * w.v,
            w.p / (gamma - 1.0) + 0.5 * w.rho * (w.u * w.u + w.v * w.v)};
  }

  Primitive2D to_primitive(const State& s) const {
    return {s[0], s[1] / s[0], s[2] / s[0], pressure(s)};
  }
};

/// Largest |normal velocity| + c over `states` (both axes for 2D).
/// Throws NonPhysicalState carrying the offending index.
template <class System>
double max_wave_speed(const System& sys,
                      std::span<const typename System::State> states) {
  double smax = 0.0;
  for (std::size_t i = 0; i < states.size(); ++i) {
    const auto& s = states[i];
    if (!sys.admissible(s)) {
      if constexpr (System::nvar == 1) {
        throw NonPhysicalState("non-finite state", static_cast<long>(i));
      } else {
        throw_nonphysical(s[0], sys.pressure(s), static_cast<long>(i));
      }
    }
    smax = std::max(smax, sys.max_speed(s, Axis::x));
    if constexpr (System::nvar == 4) smax = std::max(smax, sys.max_speed(s, Axis::y));
  }
  return smax;
}

}  // namespace cuweno
