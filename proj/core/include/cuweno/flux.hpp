#pragma once

// Interface flux assembly for systems: global Lax-Friedrichs splitting,
// characteristic projection with Roe-averaged eigenvectors, and the
// conservative flux difference.

#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "cuweno/equations.hpp"
#include "cuweno/errors.hpp"
#include "cuweno/kernels.hpp"

namespace cuweno {

template <std::size_t N>
using Matrix = std::array<std::array<double, N>, N>;

/// Left/right eigenvectors of the flux Jacobian. Columns of `right` are the
/// right eigenvectors; rows of `left` are the left eigenvectors; eigenvalues
/// ascend.
template <std::size_t N>
struct CharBasis {
  Matrix<N> left{};
  Matrix<N> right{};
  std::array<double, N> eigenvalues{};

  static CharBasis identity() {
    CharBasis b;
    for (std::size_t k = 0; k < N; ++k) b.left[k][k] = b.right[k][k] = 1.0;
    return b;
  }
};

template <std::size_t N>
inline std::array<double, N> multiply(const Matrix<N>& m, const std::array<double, N>& v) {
  std::array<double, N> out{};
  for (std::size_t r = 0; r < N; ++r) {
    double s = 0.0;
    for (std::size_t c = 0; c < N; ++c) s += m[r][c] * v[c];
    out[r] = s;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Roe-averaged eigen-decompositions

inline CharBasis<1> roe_basis(const LinearAdvection& sys, const StateVec<1>&,
                              const StateVec<1>&, Axis = Axis::x) {
  auto b = CharBasis<1>::identity();
  b.eigenvalues[0] = sys.speed;
  return b;
}

namespace detail {

struct RoeAverage {
  double un, ut, h, c;
};

// Roe average of the normal/tangential velocity and total enthalpy.
inline RoeAverage roe_average(double gamma, double rl, double unl, double utl, double hl,
                              double rr, double unr, double utr, double hr) {
  const double sl = std::sqrt(rl), sr = std::sqrt(rr);
  const double inv = 1.0 / (sl + sr);
  RoeAverage a;
  a.un = (sl * unl + sr * unr) * inv;
  a.ut = (sl * utl + sr * utr) * inv;
  a.h = (sl * hl + sr * hr) * inv;
  const double c2 = (gamma - 1.0) * (a.h - 0.5 * (a.un * a.un + a.ut * a.ut));
  if (!(c2 > 0.0)) throw NonPhysicalState("Roe average has non-positive c^2", -1);
  a.c = std::sqrt(c2);
  return a;
}

}  // namespace detail

inline CharBasis<3> roe_basis(const Euler1D& sys, const StateVec<3>& ul,
                              const StateVec<3>& ur, Axis = Axis::x) {
  if (!sys.admissible(ul)) throw_nonphysical(ul[0], sys.pressure(ul), -1);
  if (!sys.admissible(ur)) throw_nonphysical(ur[0], sys.pressure(ur), -1);
  const double hl = (ul[2] + sys.pressure(ul)) / ul[0];
  const double hr = (ur[2] + sys.pressure(ur)) / ur[0];
  const auto a = detail::roe_average(sys.gamma, ul[0], ul[1] / ul[0], 0.0, hl, ur[0],
                                     ur[1] / ur[0], 0.0, hr);
  const double u = a.un, c = a.c, h = a.h;
  const double b1 = (sys.gamma - 1.0) / (c * c);
  const double b2 = 0.5 * b1 * u * u;

  CharBasis<3> b;
  b.right = {{{1.0, 1.0, 1.0}, {u - c, u, u + c}, {h - u * c, 0.5 * u * u, h + u * c}}};
  b.left = {{{0.5 * (b2 + u / c), -0.5 * (b1 * u + 1.0 / c), 0.5 * b1},
             {1.0 - b2, b1 * u, -b1},
             {0.5 * (b2 - u / c), -0.5 * (b1 * u - 1.0 / c), 0.5 * b1}}};
  b.eigenvalues = {u - c, u, u + c};
  return b;
}

inline CharBasis<4> roe_basis(const Euler2D& sys, const StateVec<4>& ul,
                              const StateVec<4>& ur, Axis axis) {
  if (!sys.admissible(ul)) throw_nonphysical(ul[0], sys.pressure(ul), -1);
  if (!sys.admissible(ur)) throw_nonphysical(ur[0], sys.pressure(ur), -1);
  // n: normal momentum index, t: tangential momentum index.
  const std::size_t n = axis == Axis::x ? 1 : 2;
  const std::size_t t = axis == Axis::x ? 2 : 1;
  const double hl = (ul[3] + sys.pressure(ul)) / ul[0];
  const double hr = (ur[3] + sys.pressure(ur)) / ur[0];
  const auto a = detail::roe_average(sys.gamma, ul[0], ul[n] / ul[0], ul[t] / ul[0], hl,
                                     ur[0], ur[n] / ur[0], ur[t] / ur[0], hr);
  const double un = a.un, ut = a.ut, c = a.c, h = a.h;
  const double q2 = un * un + ut * ut;
  const double b1 = (sys.gamma - 1.0) / (c * c);
  const double b2 = 0.5 * b1 * q2;

  CharBasis<4> b;
  // Columns: u-c, u (entropy), u (shear), u+c.
  auto set_col = [&](std::size_t col, double rho, double mn, double mt, double e) {
    b.right[0][col] = rho;
    b.right[n][col] = mn;
    b.right[t][col] = mt;
    b.right[3][col] = e;
  };
  set_col(0, 1.0, un - c, ut, h - un * c);
  set_col(1, 1.0, un, ut, 0.5 * q2);
  set_col(2, 0.0, 0.0, 1.0, ut);
  set_col(3, 1.0, un + c, ut, h + un * c);

  auto set_row = [&](std::size_t row, double rho, double mn, double mt, double e) {
    b.left[row][0] = rho;
    b.left[row][n] = mn;
    b.left[row][t] = mt;
    b.left[row][3] = e;
  };
  set_row(0, 0.5 * (b2 + un / c), -0.5 * (b1 * un + 1.0 / c), -0.5 * b1 * ut, 0.5 * b1);
  set_row(1, 1.0 - b2, b1 * un, b1 * ut, -b1);
  set_row(2, -ut, 0.0, 1.0, 0.0);
  set_row(3, 0.5 * (b2 - un / c), -0.5 * (b1 * un - 1.0 / c), -0.5 * b1 * ut, 0.5 * b1);
  b.eigenvalues = {un - c, un, un, un + c};
  return b;
}

// ---------------------------------------------------------------------------
// Flux splitting

template <std::size_t N>
struct SplitFluxPair {
  std::vector<StateVec<N>> f_plus;   // right-going part, 1/2 (f + alpha u)
  std::vector<StateVec<N>> f_minus;  // left-going part, 1/2 (f - alpha u)
};

/// Componentwise global Lax-Friedrichs splitting. Throws on alpha <= 0.
template <std::size_t N>
SplitFluxPair<N> lax_friedrichs_split(std::span<const StateVec<N>> f,
                                      std::span<const StateVec<N>> u, double alpha) {
  if (!(alpha > 0.0)) throw std::invalid_argument("splitting speed must be positive");
  if (f.size() != u.size()) throw std::invalid_argument("flux/state size mismatch");
  SplitFluxPair<N> out;
  out.f_plus.resize(f.size());
  out.f_minus.resize(f.size());
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t v = 0; v < N; ++v) {
      out.f_plus[i][v] = 0.5 * (f[i][v] + alpha * u[i][v]);
      out.f_minus[i][v] = 0.5 * (f[i][v] - alpha * u[i][v]);
    }
  return out;
}

// ---------------------------------------------------------------------------

struct AssemblyOptions {
  bool characteristic = true;  // false: reconstruct conserved components directly
};

/// Number of cells in the window read by interface_flux: i-2 .. i+3 for the
/// interface i+1/2.
inline constexpr std::size_t kFluxWindow = 6;

template <class System>
class FluxAssembler {
 public:
  static constexpr std::size_t NV = System::nvar;
  using State = typename System::State;

  FluxAssembler(System sys, SchemeConfig cfg, AssemblyOptions opt = {})
      : sys_(sys), cfg_(cfg), opt_(opt) {
    cfg_.validate();
  }

  const System& system() const { return sys_; }
  const SchemeConfig& scheme() const { return cfg_; }
  const AssemblyOptions& options() const { return opt_; }

  /// Numerical flux at the interface between u[2] and u[3], given states and
  /// physical fluxes on cells i-2 .. i+3. `alpha` is the splitting speed.
  State interface_flux(std::span<const State, kFluxWindow> u,
                       std::span<const State, kFluxWindow> f, double alpha,
                       Axis axis) const {
    const int width = static_cast<int>(cfg_.window_size());
    const int off = window_offset(cfg_.scheme);
    // Cells touched by the left-biased and mirrored windows.
    const int first = 2 + off;
    const int last = 3 - off;

    std::array<State, kFluxWindow> v{};
    std::array<State, kFluxWindow> g{};
    CharBasis<NV> basis;
    if (opt_.characteristic) {
      basis = roe_basis(sys_, u[2], u[3], axis);
      for (int m = first; m <= last; ++m) {
        v[m] = multiply(basis.left, u[m]);
        g[m] = multiply(basis.left, f[m]);
      }
    } else {
      for (int m = first; m <= last; ++m) {
        v[m] = u[m];
        g[m] = f[m];
      }
    }

    State ghat{};
    std::array<double, 5> plus{};
    std::array<double, 5> minus{};
    for (std::size_t k = 0; k < NV; ++k) {
      for (int s = 0; s < width; ++s) {
        const int mp = first + s;
        const int mm = last - s;
        plus[s] = 0.5 * (g[mp][k] + alpha * v[mp][k]);
        minus[s] = 0.5 * (g[mm][k] - alpha * v[mm][k]);
      }
      const std::span<const double> wp(plus.data(), width);
      const std::span<const double> wm(minus.data(), width);
      ghat[k] = reconstruct_interface(wp, cfg_) + reconstruct_interface(wm, cfg_);
    }
    return opt_.characteristic ? multiply(basis.right, ghat) : ghat;
  }

  State interface_flux(std::span<const State, kFluxWindow> u, double alpha,
                       Axis axis) const {
    std::array<State, kFluxWindow> f;
    for (std::size_t m = 0; m < kFluxWindow; ++m) f[m] = sys_.flux(u[m], axis);
    return interface_flux(u, std::span<const State, kFluxWindow>(f), alpha, axis);
  }

 private:
  System sys_;
  SchemeConfig cfg_;
  AssemblyOptions opt_;
};

/// Accumulate -(F_{i+1/2} - F_{i-1/2}) / dx into `tendency`.
/// `fluxes` holds the n+1 interface fluxes of n cells, left to right.
template <std::size_t N>
void rhs_divergence(std::span<const StateVec<N>> fluxes, double dx,
                    std::span<StateVec<N>> tendency) {
  if (fluxes.size() != tendency.size() + 1)
    throw std::invalid_argument("rhs_divergence needs n+1 fluxes for n cells");
  const double inv = 1.0 / dx;
  for (std::size_t i = 0; i < tendency.size(); ++i)
    for (std::size_t v = 0; v < N; ++v)
      tendency[i][v] -= (fluxes[i + 1][v] - fluxes[i][v]) * inv;
}

}  // namespace cuweno
