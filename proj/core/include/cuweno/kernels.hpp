#pragma once

// Scalar WENO reconstruction kernels.
//
// All kernels reconstruct the flux at the interface x_{i+1/2} for a positive
// wave speed, i.e. from a left-biased window. The mirrored (negative speed)
// reconstruction is obtained by feeding the same samples in reverse order.
//
// Third-order variants read (f_{i-1}, f_i, f_{i+1}); the fourth-order
// central-upwind variants read (f_{i-1}, f_i, f_{i+1}, f_{i+2}); the
// fifth-order baseline reads (f_{i-2}, ..., f_{i+2}).

#include <array>
#include <cassert>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cuweno {

enum class Scheme {
  weno3_js,
  weno3_z,
  weno4_js,
  weno4_za,
  weno5_js,
  fd4,  // WENO4 substencils blended with the linear weights only
};

struct SchemeConfig {
  Scheme scheme = Scheme::weno4_za;
  double epsilon = 1e-40;
  double p = 100.0;  // ZA only
  double q = 2.0;    // ZA only

  /// Defaults per scheme: epsilon 1e-40 for Z-type, 1e-6 for JS-type; p=100, q=2.
  static SchemeConfig defaults(Scheme s);

  /// Throws std::invalid_argument when epsilon <= 0, p <= 0 or q < 1.
  void validate() const;

  /// Number of samples read per interface reconstruction.
  std::size_t window_size() const { return window_size(scheme); }
  static std::size_t window_size(Scheme s);
};

std::string_view scheme_name(Scheme s);
/// Accepts the names produced by scheme_name(); throws std::invalid_argument otherwise.
Scheme parse_scheme(std::string_view name);
std::vector<Scheme> all_schemes();

namespace linear_weights {
inline constexpr std::array<double, 2> weno3{1.0 / 3.0, 2.0 / 3.0};
// The fourth-order weights are symmetric: d0 = d2 = 1/6.
inline constexpr std::array<double, 3> weno4{1.0 / 6.0, 2.0 / 3.0, 1.0 / 6.0};
inline constexpr std::array<double, 3> weno5{0.1, 0.6, 0.3};
}  // namespace linear_weights

struct StencilWindow {
  double f_m1 = 0.0;
  double f_0 = 0.0;
  double f_p1 = 0.0;
  double f_p2 = 0.0;

  bool finite() const {
    return std::isfinite(f_m1) && std::isfinite(f_0) && std::isfinite(f_p1) &&
           std::isfinite(f_p2);
  }
};

template <std::size_t K>
struct WeightVector {
  std::array<double, K> omega{};

  double operator[](std::size_t k) const { return omega[k]; }
  double sum() const {
    double s = 0.0;
    for (double w : omega) s += w;
    return s;
  }
};

struct CandidateFluxes4 {
  double fhat0 = 0.0;
  double fhat1 = 0.0;
  double fhat2 = 0.0;
};

struct LocalIndicators {
  double beta0 = 0.0;
  double beta1 = 0.0;
  double beta_d = 0.0;
};

struct SmoothnessSet {
  double beta0 = 0.0;
  double beta1 = 0.0;
  double beta_d = 0.0;
  double beta2 = 0.0;
  double beta4 = 0.0;
  double tau4 = 0.0;
};

namespace detail {
// (x)^q with an exact product for the default q = 2.
inline double power_q(double x, double q) {
  if (q == 2.0) return x * x;
  if (q == 1.0) return x;
  return std::pow(x, q);
}

template <std::size_t K>
inline WeightVector<K> normalize(const std::array<double, K>& alpha) {
  double total = 0.0;
  for (double a : alpha) total += a;
  WeightVector<K> w;
  for (std::size_t k = 0; k < K; ++k) w.omega[k] = alpha[k] / total;
  return w;
}
}  // namespace detail

// ---------------------------------------------------------------------------
// Fourth-order central-upwind kernels

inline CandidateFluxes4 candidate_fluxes4(const StencilWindow& w) {
  return {-0.5 * w.f_m1 + 1.5 * w.f_0, 0.5 * w.f_0 + 0.5 * w.f_p1,
          1.5 * w.f_p1 - 0.5 * w.f_p2};
}

inline double combine_linear4(const CandidateFluxes4& c) {
  constexpr auto d = linear_weights::weno4;
  return d[0] * c.fhat0 + d[1] * c.fhat1 + d[2] * c.fhat2;
}

/// Classical four-point central flux, evaluated directly from the samples.
inline double fd4_flux(const StencilWindow& w) {
  return (-w.f_m1 + 7.0 * w.f_0 + 7.0 * w.f_p1 - w.f_p2) / 12.0;
}

inline LocalIndicators beta_local(const StencilWindow& w) {
  const double a = w.f_m1 - w.f_0;
  const double b = w.f_0 - w.f_p1;
  const double c = w.f_p1 - w.f_p2;
  return {a * a, b * b, c * c};
}

/// Downwind indicator: the average of the three local indicators.
inline double beta_downwind_avg(double beta0, double beta1, double beta_d) {
  return (beta0 + beta1 + beta_d) / 3.0;
}

/// Smoothness of the cubic interpolant over the whole four-point stencil.
inline double beta_whole4(const StencilWindow& w) {
  const double a = w.f_m1, b = w.f_0, c = w.f_p1, e = w.f_p2;
  const double t1 = a - b - c + e;
  const double t2 = a - 3.0 * b + 3.0 * c - e;
  const double t3 = a - 15.0 * b + 15.0 * c - e;
  const double t4 = 13.0 * a + 29.0 * b - 61.0 * c + 19.0 * e;
  const double t5 = 61.0 * a - 151.0 * b + 119.0 * c - 29.0 * e;
  const double t6 = 41.0 * a - 15.0 * b + 15.0 * c - 41.0 * e;
  return t1 * t1 / 9.0 + 44299.0 / 103680.0 * t2 * t2 + 31.0 / 57600.0 * t3 * t3 +
         t4 * t4 / 2304.0 + t5 * t5 / 2304.0 + t6 * t6 / 32400.0;
}

inline double tau4(double beta4, double beta0, double beta1, double beta2, double p) {
  return std::abs(beta4 - (2.0 * beta0 - 3.0 * beta1 + 5.0 * beta2) / 4.0) / p;
}

inline SmoothnessSet smoothness_set(const StencilWindow& w, double p) {
  const LocalIndicators loc = beta_local(w);
  SmoothnessSet s;
  s.beta0 = loc.beta0;
  s.beta1 = loc.beta1;
  s.beta_d = loc.beta_d;
  s.beta2 = beta_downwind_avg(loc.beta0, loc.beta1, loc.beta_d);
  s.beta4 = beta_whole4(w);
  s.tau4 = tau4(s.beta4, s.beta0, s.beta1, s.beta2, p);
  return s;
}

inline WeightVector<3> weights_js4(double beta0, double beta1, double beta2,
                                   double epsilon) {
  constexpr auto d = linear_weights::weno4;
  const double b0 = beta0 + epsilon, b1 = beta1 + epsilon, b2 = beta2 + epsilon;
  return detail::normalize<3>({d[0] / (b0 * b0), d[1] / (b1 * b1), d[2] / (b2 * b2)});
}

inline WeightVector<3> weights_za4(double beta0, double beta1, double beta2,
                                   double tau, double epsilon, double q) {
  constexpr auto d = linear_weights::weno4;
  return detail::normalize<3>(
      {d[0] * (1.0 + detail::power_q(tau / (beta0 + epsilon), q)),
       d[1] * (1.0 + detail::power_q(tau / (beta1 + epsilon), q)),
       d[2] * (1.0 + detail::power_q(tau / (beta2 + epsilon), q))});
}

// ---------------------------------------------------------------------------
// Third-order kernels

inline double tau3(double beta0, double beta1) { return std::abs(beta0 - beta1); }

inline WeightVector<2> weights_js3(double beta0, double beta1, double epsilon) {
  constexpr auto d = linear_weights::weno3;
  const double b0 = beta0 + epsilon, b1 = beta1 + epsilon;
  return detail::normalize<2>({d[0] / (b0 * b0), d[1] / (b1 * b1)});
}

inline WeightVector<2> weights_z3(double beta0, double beta1, double tau,
                                  double epsilon) {
  constexpr auto d = linear_weights::weno3;
  const double r0 = tau / (beta0 + epsilon);
  const double r1 = tau / (beta1 + epsilon);
  return detail::normalize<2>({d[0] * (1.0 + r0 * r0), d[1] * (1.0 + r1 * r1)});
}

// ---------------------------------------------------------------------------
// Fifth-order Jiang-Shu baseline

struct Weno5Indicators {
  std::array<double, 3> beta{};
};

inline std::array<double, 3> candidate_fluxes5(std::span<const double, 5> f) {
  return {(2.0 * f[0] - 7.0 * f[1] + 11.0 * f[2]) / 6.0,
          (-f[1] + 5.0 * f[2] + 2.0 * f[3]) / 6.0,
          (2.0 * f[2] + 5.0 * f[3] - f[4]) / 6.0};
}

inline Weno5Indicators beta_weno5(std::span<const double, 5> f) {
  constexpr double c = 13.0 / 12.0;
  const double a0 = f[0] - 2.0 * f[1] + f[2], b0 = f[0] - 4.0 * f[1] + 3.0 * f[2];
  const double a1 = f[1] - 2.0 * f[2] + f[3], b1 = f[1] - f[3];
  const double a2 = f[2] - 2.0 * f[3] + f[4], b2 = 3.0 * f[2] - 4.0 * f[3] + f[4];
  return {{c * a0 * a0 + 0.25 * b0 * b0, c * a1 * a1 + 0.25 * b1 * b1,
           c * a2 * a2 + 0.25 * b2 * b2}};
}

inline WeightVector<3> weights_js5(const Weno5Indicators& ind, double epsilon) {
  constexpr auto d = linear_weights::weno5;
  std::array<double, 3> alpha{};
  for (std::size_t k = 0; k < 3; ++k) {
    const double b = ind.beta[k] + epsilon;
    alpha[k] = d[k] / (b * b);
  }
  return detail::normalize<3>(alpha);
}

// ---------------------------------------------------------------------------
// Dispatch

/// Nonlinear weights selected by `cfg` for a four-point window.
/// Only meaningful for weno4_js, weno4_za and fd4.
inline WeightVector<3> weights4(const StencilWindow& w, const SchemeConfig& cfg) {
  switch (cfg.scheme) {
    case Scheme::weno4_js: {
      const LocalIndicators loc = beta_local(w);
      const double b2 = beta_downwind_avg(loc.beta0, loc.beta1, loc.beta_d);
      return weights_js4(loc.beta0, loc.beta1, b2, cfg.epsilon);
    }
    case Scheme::weno4_za: {
      const SmoothnessSet s = smoothness_set(w, cfg.p);
      return weights_za4(s.beta0, s.beta1, s.beta2, s.tau4, cfg.epsilon, cfg.q);
    }
    default:
      return {linear_weights::weno4};
  }
}

/// Interface flux from `samples`, whose length must equal cfg.window_size().
inline double reconstruct_interface(std::span<const double> samples,
                                    const SchemeConfig& cfg) {
  assert(samples.size() == cfg.window_size());
  switch (cfg.scheme) {
    case Scheme::weno3_js:
    case Scheme::weno3_z: {
      const double fm1 = samples[0], f0 = samples[1], fp1 = samples[2];
      const double q0 = -0.5 * fm1 + 1.5 * f0;
      const double q1 = 0.5 * f0 + 0.5 * fp1;
      const double b0 = (fm1 - f0) * (fm1 - f0);
      const double b1 = (f0 - fp1) * (f0 - fp1);
      const WeightVector<2> w = cfg.scheme == Scheme::weno3_js
                                    ? weights_js3(b0, b1, cfg.epsilon)
                                    : weights_z3(b0, b1, tau3(b0, b1), cfg.epsilon);
      return w[0] * q0 + w[1] * q1;
    }
    case Scheme::weno4_js:
    case Scheme::weno4_za:
    case Scheme::fd4: {
      const StencilWindow win{samples[0], samples[1], samples[2], samples[3]};
      const CandidateFluxes4 c = candidate_fluxes4(win);
      if (cfg.scheme == Scheme::fd4) return combine_linear4(c);
      const WeightVector<3> w = weights4(win, cfg);
      return w[0] * c.fhat0 + w[1] * c.fhat1 + w[2] * c.fhat2;
    }
    case Scheme::weno5_js: {
      const std::span<const double, 5> f(samples.data(), 5);
      const auto q = candidate_fluxes5(f);
      const WeightVector<3> w = weights_js5(beta_weno5(f), cfg.epsilon);
      return w[0] * q[0] + w[1] * q[1] + w[2] * q[2];
    }
  }
  return 0.0;
}

/// Offset of the first sample relative to cell i for the left-biased window
/// of interface i+1/2 (-1 for three- and four-point windows, -2 for WENO5).
inline int window_offset(Scheme s) { return s == Scheme::weno5_js ? -2 : -1; }

}  // namespace cuweno
