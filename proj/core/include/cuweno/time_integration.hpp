#pragma once

// Three-stage TVD Runge-Kutta (Shu-Osher) and time-step selection.

#include <algorithm>
#include <cmath>
#include <concepts>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string_view>
#include <utility>

#include "cuweno/errors.hpp"

namespace cuweno {

enum class DtRule {
  cfl_over_speed,     // dt = cfl * min(dx, dy) / max wave speed
  cfl_dx_pow_4over3,  // dt = cfl * dx^(4/3), used by the accuracy study
};

std::string_view dt_rule_name(DtRule r);
DtRule parse_dt_rule(std::string_view name);

struct TimeControls {
  double cfl = 0.4;
  double t_final = 1.0;
  DtRule dt_rule = DtRule::cfl_over_speed;

  void validate() const {
    if (!(cfl > 0.0 && cfl <= 1.0)) throw std::invalid_argument("cfl must be in (0, 1]");
    if (!(t_final > 0.0)) throw std::invalid_argument("t_final must be positive");
  }
};

/// Step size for the current state, clamped so the last step lands on t_final.
/// `spacing` is min(dx, dy); the 4/3 rule uses it as dx.
inline double compute_dt(double max_speed, double spacing, double t,
                         const TimeControls& tc) {
  double dt = 0.0;
  if (tc.dt_rule == DtRule::cfl_over_speed) {
    if (!(max_speed > 0.0))
      throw SolverError("zero wave speed: cannot choose a CFL time step");
    dt = tc.cfl * spacing / max_speed;
  } else {
    dt = tc.cfl * std::pow(spacing, 4.0 / 3.0);
  }
  return std::min(dt, tc.t_final - t);
}

/// Anything exposing its degrees of freedom as a contiguous span of doubles.
template <class V>
concept StateVector = std::copy_constructible<V> && requires(V v, const V cv) {
  { v.values() } -> std::convertible_to<std::span<double>>;
  { cv.values() } -> std::convertible_to<std::span<const double>>;
};

/// Shu-Osher three-stage TVD Runge-Kutta:
///   u1 = u + dt L(u)
///   u2 = 3/4 u + 1/4 u1 + 1/4 dt L(u1)
///   u  = 1/3 u + 2/3 u2 + 2/3 dt L(u2)
/// The right-hand side is called as rhs(V& state, double t, V& dudt); it may
/// modify ghost data of `state`.
template <StateVector V>
class TvdRk3 {
 public:
  template <class Rhs>
  void step(V& u, double t, double dt, Rhs&& rhs) {
    if (!(dt > 0.0)) throw std::invalid_argument("time step must be positive");
    if (!stage_) {
      stage_.emplace(u);
      dudt_.emplace(u);
    }
    V& w = *stage_;
    V& l = *dudt_;
    auto uv = u.values();

    rhs(u, t, l);
    {
      auto wv = w.values();
      auto lv = l.values();
      for (std::size_t k = 0; k < uv.size(); ++k) wv[k] = uv[k] + dt * lv[k];
      check(wv, 1);
    }
    rhs(w, t + dt, l);
    {
      auto wv = w.values();
      auto lv = l.values();
      for (std::size_t k = 0; k < uv.size(); ++k)
        wv[k] = 0.75 * uv[k] + 0.25 * wv[k] + 0.25 * dt * lv[k];
      check(wv, 2);
    }
    rhs(w, t + 0.5 * dt, l);
    {
      auto wv = w.values();
      auto lv = l.values();
      for (std::size_t k = 0; k < uv.size(); ++k)
        uv[k] = (uv[k] + 2.0 * wv[k] + 2.0 * dt * lv[k]) / 3.0;
      check(uv, 3);
    }
  }

 private:
  static void check(std::span<const double> v, int stage) {
    for (std::size_t k = 0; k < v.size(); ++k)
      if (!std::isfinite(v[k])) {
        std::ostringstream os;
        os << "RK stage " << stage << ": non-finite value at index " << k;
        throw SolverError(os.str());
      }
  }

  std::optional<V> stage_;
  std::optional<V> dudt_;
};

/// One TVD-RK3 step with freshly allocated scratch.
template <StateVector V, class Rhs>
void rk3_step(V& u, double t, double dt, Rhs&& rhs) {
  TvdRk3<V> stepper;
  stepper.step(u, t, dt, std::forward<Rhs>(rhs));
}

}  // namespace cuweno
