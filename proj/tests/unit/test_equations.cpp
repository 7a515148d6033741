#include <doctest.h>

#include <array>
#include <cmath>
#include <vector>

#include "cuweno/equations.hpp"
#include "cuweno/flux.hpp"
#include "cuweno/riemann.hpp"
#include "generators.hpp"

using namespace cuweno;

namespace {

template <std::size_t N>
Matrix<N> product(const Matrix<N>& a, const Matrix<N>& b) {
  Matrix<N> c{};
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      for (std::size_t k = 0; k < N; ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

template <std::size_t N>
std::array<double, N> roe_apply(const CharBasis<N>& b, const std::array<double, N>& v) {
  auto w = multiply(b.left, v);
  for (std::size_t k = 0; k < N; ++k) w[k] *= b.eigenvalues[k];
  return multiply(b.right, w);
}

// Central-difference Jacobian of `flux` at s.
template <class F, std::size_t N>
Matrix<N> jacobian(F flux, const std::array<double, N>& s) {
  Matrix<N> J{};
  for (std::size_t c = 0; c < N; ++c) {
    const double h = 1e-6 * std::max(1.0, std::abs(s[c]));
    auto sp = s, sm = s;
    sp[c] += h;
    sm[c] -= h;
    const auto fp = flux(sp), fm = flux(sm);
    for (std::size_t r = 0; r < N; ++r) J[r][c] = (fp[r] - fm[r]) / (2.0 * h);
  }
  return J;
}

}  // namespace

TEST_CASE("Euler 1D primitive round trip and flux") {
  const Euler1D sys;
  const auto s = sys.to_conserved({1.0, 2.0, 3.0});
  CHECK(s[0] == 1.0);
  CHECK(s[1] == 2.0);
  CHECK(s[2] == doctest::Approx(3.0 / 0.4 + 2.0));
  const auto f = sys.flux(s);
  CHECK(f[0] == doctest::Approx(2.0));
  CHECK(f[1] == doctest::Approx(4.0 + 3.0));
  CHECK(f[2] == doctest::Approx(2.0 * (s[2] + 3.0)));
  CHECK(sys.max_speed(s) == doctest::Approx(2.0 + std::sqrt(1.4 * 3.0)));

  gen::Rng rng(20);
  for (int n = 0; n < 200; ++n) {
    const Primitive1D w = rng.primitive1d();
    const Primitive1D back = sys.to_primitive(sys.to_conserved(w));
    CHECK(back.rho == doctest::Approx(w.rho).epsilon(1e-12));
    CHECK(back.u == doctest::Approx(w.u).epsilon(1e-12));
    CHECK(back.p == doctest::Approx(w.p).epsilon(1e-10));
  }
}

TEST_CASE("Euler 2D primitive round trip and directional fluxes") {
  const Euler2D sys;
  gen::Rng rng(21);
  for (int n = 0; n < 200; ++n) {
    const Primitive2D w = rng.primitive2d();
    const auto s = sys.to_conserved(w);
    const Primitive2D back = sys.to_primitive(s);
    CHECK(back.v == doctest::Approx(w.v).epsilon(1e-12));
    CHECK(back.p == doctest::Approx(w.p).epsilon(1e-10));
    // y-flux is the x-flux with the momenta swapped.
    const auto swapped = StateVec<4>{s[0], s[2], s[1], s[3]};
    const auto fy = sys.flux(s, Axis::y), fx = sys.flux(swapped, Axis::x);
    CHECK(fy[0] == doctest::Approx(fx[0]));
    CHECK(fy[1] == doctest::Approx(fx[2]));
    CHECK(fy[2] == doctest::Approx(fx[1]));
    CHECK(fy[3] == doctest::Approx(fx[3]));
  }
}

TEST_CASE("admissibility and max wave speed") {
  const Euler1D sys;
  CHECK(sys.admissible(sys.to_conserved({1.0, 0.0, 1.0})));
  CHECK_FALSE(sys.admissible({-1.0, 0.0, 1.0}));
  CHECK_FALSE(sys.admissible({1.0, 0.0, -1.0}));
  std::vector<StateVec<3>> states{sys.to_conserved({1.0, 1.0, 1.0}), {1.0, 0.0, -1.0}};
  try {
    max_wave_speed(sys, std::span<const StateVec<3>>(states));
    FAIL("expected NonPhysicalState");
  } catch (const NonPhysicalState& e) {
    CHECK(e.cell() == 1);
  }
  states.pop_back();
  CHECK(max_wave_speed(sys, std::span<const StateVec<3>>(states)) ==
        doctest::Approx(1.0 + std::sqrt(1.4)));
}

TEST_CASE("property: Roe eigenvectors are mutually inverse") {
  gen::Rng rng(22);
  const Euler1D s1;
  const Euler2D s2;
  for (int n = 0; n < 300; ++n) {
    const auto b1 = roe_basis(s1, s1.to_conserved(rng.primitive1d()),
                              s1.to_conserved(rng.primitive1d()));
    const auto p1 = product(b1.left, b1.right);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        CHECK(p1[i][j] == doctest::Approx(i == j ? 1.0 : 0.0).scale(1.0).epsilon(1e-11));

    const Axis axis = n % 2 ? Axis::x : Axis::y;
    const auto b2 = roe_basis(s2, s2.to_conserved(rng.primitive2d()),
                              s2.to_conserved(rng.primitive2d()), axis);
    const auto p2 = product(b2.left, b2.right);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        CHECK(p2[i][j] == doctest::Approx(i == j ? 1.0 : 0.0).scale(1.0).epsilon(1e-11));
  }
}

TEST_CASE("property: Roe matrix satisfies the jump condition") {
  gen::Rng rng(23);
  const Euler1D s1;
  const Euler2D s2;
  for (int n = 0; n < 300; ++n) {
    const auto l1 = s1.to_conserved(rng.primitive1d()), r1 = s1.to_conserved(rng.primitive1d());
    const auto d1 = roe_apply(roe_basis(s1, l1, r1), StateVec<3>{r1[0] - l1[0], r1[1] - l1[1],
                                                                 r1[2] - l1[2]});
    const auto fl = s1.flux(l1), fr = s1.flux(r1);
    for (std::size_t k = 0; k < 3; ++k)
      CHECK(d1[k] == doctest::Approx(fr[k] - fl[k]).scale(std::abs(fr[k]) + std::abs(fl[k])).epsilon(1e-10));

    const Axis axis = n % 2 ? Axis::x : Axis::y;
    const auto l2 = s2.to_conserved(rng.primitive2d()), r2 = s2.to_conserved(rng.primitive2d());
    StateVec<4> jump{};
    for (std::size_t k = 0; k < 4; ++k) jump[k] = r2[k] - l2[k];
    const auto d2 = roe_apply(roe_basis(s2, l2, r2, axis), jump);
    const auto gl = s2.flux(l2, axis), gr = s2.flux(r2, axis);
    for (std::size_t k = 0; k < 4; ++k)
      CHECK(d2[k] == doctest::Approx(gr[k] - gl[k]).scale(std::abs(gr[k]) + std::abs(gl[k])).epsilon(1e-10));
  }
}

TEST_CASE("Roe decomposition at a single state matches a finite-difference Jacobian") {
  gen::Rng rng(24);
  const Euler2D sys;
  for (int n = 0; n < 50; ++n) {
    const auto s = sys.to_conserved(rng.primitive2d());
    for (Axis axis : {Axis::x, Axis::y}) {
      const auto b = roe_basis(sys, s, s, axis);
      const auto J = jacobian([&](const StateVec<4>& v) { return sys.flux(v, axis); }, s);
      for (std::size_t c = 0; c < 4; ++c) {
        StateVec<4> e{};
        e[c] = 1.0;
        const auto col = roe_apply(b, e);
        for (std::size_t r = 0; r < 4; ++r)
          CHECK(col[r] == doctest::Approx(J[r][c]).scale(1.0).epsilon(1e-5));
      }
      const double vn = (axis == Axis::x ? s[1] : s[2]) / s[0];
      const double c = sys.sound_speed(s);
      CHECK(b.eigenvalues[0] == doctest::Approx(vn - c));
      CHECK(b.eigenvalues[1] == doctest::Approx(vn));
      CHECK(b.eigenvalues[3] == doctest::Approx(vn + c));
    }
  }
}

// ---------------------------------------------------------------------------
// Exact Riemann solver. Star states from Toro's tables (Riemann Solvers and
// Numerical Methods for Fluid Dynamics, ch. 4).

TEST_CASE("exact Riemann solver reproduces tabulated star states") {
  struct Case {
    Primitive1D l, r;
    double p_star, u_star;
    double tol;  // tabulated to six figures, the near-vacuum case to three
  };
  const std::vector<Case> cases{
      {{1.0, 0.0, 1.0}, {0.125, 0.0, 0.1}, 0.30313, 0.92745, 2e-5},
      {{1.0, -2.0, 0.4}, {1.0, 2.0, 0.4}, 0.00189, 0.0, 5e-3},
      {{1.0, 0.0, 1000.0}, {1.0, 0.0, 0.01}, 460.894, 19.5975, 2e-5},
      {{1.0, 0.0, 0.01}, {1.0, 0.0, 100.0}, 46.0950, -6.19633, 2e-5},
      {{5.99924, 19.5975, 460.894}, {5.99242, -6.19633, 46.0950}, 1691.64, 8.68975, 2e-5},
  };
  for (const Case& c : cases) {
    const RiemannSolution sol = solve_riemann(c.l, c.r);
    CHECK(sol.p_star == doctest::Approx(c.p_star).epsilon(c.tol));
    CHECK(sol.u_star == doctest::Approx(c.u_star).epsilon(c.tol).scale(1.0));
    CHECK(sol.residual() < 1e-10 * std::max(1.0, sol.p_star));
  }
}

TEST_CASE("Sod and Lax star pressures have tiny residuals") {
  for (const auto& [l, r] : {std::pair<Primitive1D, Primitive1D>{{1.0, 0.0, 1.0}, {0.125, 0.0, 0.1}},
                             {{0.445, 0.698, 3.528}, {0.5, 0.0, 0.571}}}) {
    const RiemannSolution sol = solve_riemann(l, r);
    CHECK(sol.residual() < 1e-12);
    CHECK(sol.iterations <= 100);
  }
}

TEST_CASE("sampled Sod profile conserves mass and matches far-field states") {
  const Primitive1D l{1.0, 0.0, 1.0}, r{0.125, 0.0, 0.1};
  const RiemannSolution sol = solve_riemann(l, r);
  CHECK(sol.left_wave == WaveKind::rarefaction);
  CHECK(sol.right_wave == WaveKind::shock);
  CHECK(sol.sample(-10.0).rho == 1.0);
  CHECK(sol.sample(10.0).rho == 0.125);
  // Mass in [-5, 5] at t = 2 is unchanged since no wave reaches the ends.
  const int n = 200000;
  const double t = 2.0, h = 10.0 / n;
  double mass = 0.0;
  for (int i = 0; i < n; ++i) mass += sol.sample((-5.0 + (i + 0.5) * h) / t).rho * h;
  CHECK(mass == doctest::Approx(5.625).epsilon(1e-5));
}

TEST_CASE("pressure function derivative and failure modes") {
  const Primitive1D side{1.0, 0.0, 1.0};
  for (double p : {0.05, 0.5, 1.0, 3.0}) {
    const double h = 1e-7 * p;
    const double fd =
        (pressure_function(p + h, side, 1.4).value - pressure_function(p - h, side, 1.4).value) /
        (2.0 * h);
    CHECK(pressure_function(p, side, 1.4).derivative == doctest::Approx(fd).epsilon(1e-6));
  }
  CHECK_THROWS_AS(solve_riemann({1.0, -10.0, 1.0}, {1.0, 10.0, 1.0}), VacuumGenerated);
  CHECK_THROWS_AS(solve_riemann({0.0, 0.0, 1.0}, {1.0, 0.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(solve_riemann({1.0, 0.0, 1.0}, {1.0, 0.0, -1.0}), std::invalid_argument);
}
