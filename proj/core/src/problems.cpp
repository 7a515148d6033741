#include "cuweno/problems.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cuweno {

std::size_t nvar_of(EquationKind k) {
  switch (k) {
    case EquationKind::advection: return 1;
    case EquationKind::euler1d: return 3;
    case EquationKind::euler2d: return 4;
  }
  return 0;
}

std::string_view equation_name(EquationKind k) {
  switch (k) {
    case EquationKind::advection: return "advection";
    case EquationKind::euler1d: return "euler1d";
    case EquationKind::euler2d: return "euler2d";
  }
  return "?";
}

void ProblemSpec::validate() const {
  if (grid.nx < 10 || (grid.dim == 2 && grid.ny < 10))
    throw std::invalid_argument(id + ": resolution must be at least 10 cells");
  if (!initial) throw std::invalid_argument(id + ": missing initial condition");
  if (reference == ReferenceKind::exact_riemann && !riemann)
    throw std::invalid_argument(id + ": exact reference requires Riemann data");
  if ((equations == EquationKind::euler2d) != (grid.dim == 2))
    throw std::invalid_argument(id + ": grid dimension does not match equations");
  auto check = [&](const GhostPolicy& pol) {
    if (pol.kind == GhostKind::dirichlet_state && pol.state.size() != nvar())
      throw std::invalid_argument(id + ": dirichlet state has wrong size");
    if ((pol.kind == GhostKind::dmr_bottom || pol.kind == GhostKind::dmr_top) &&
        !pol.shock)
      throw std::invalid_argument(id + ": shock boundary without shock data");
  };
  check(boundaries.left);
  check(boundaries.right);
  if (grid.dim == 2) {
    check(boundaries.bottom);
    check(boundaries.top);
  }
  time.validate();
}

ProblemSpec ProblemSpec::with_resolution(int nx, int ny) const {
  ProblemSpec out = *this;
  if (grid.dim == 2 && ny <= 0) {
    ny = static_cast<int>(std::lround(static_cast<double>(grid.ny) * nx / grid.nx));
  }
  out.grid.nx = nx;
  if (grid.dim == 2) out.grid.ny = ny;
  return out;
}

namespace {

std::vector<double> as_vector(const StateVec<4>& s) { return {s.begin(), s.end()}; }

void write(std::span<double> dst, const StateVec<3>& s) {
  for (std::size_t v = 0; v < 3; ++v) dst[v] = s[v];
}
void write(std::span<double> dst, const StateVec<4>& s) {
  for (std::size_t v = 0; v < 4; ++v) dst[v] = s[v];
}

ProblemSpec advection() {
  ProblemSpec p;
  p.id = "advect-sine";
  p.description = "u_t + u_x = 0 on [-1,1], u0 = sin(pi x), periodic, T = 2";
  p.equations = EquationKind::advection;
  p.grid = Grid::line(160, -1.0, 1.0);
  p.initial = [](double x, double, std::span<double> u) {
    u[0] = advection_exact(x, 0.0);
  };
  p.boundaries = BoundarySet::all(GhostPolicy::periodic());
  p.time = {0.4, 2.0, DtRule::cfl_dx_pow_4over3};
  p.reference = ReferenceKind::analytic_advection;
  return p;
}

ProblemSpec shock_tube(std::string id, std::string description, Primitive1D left,
                       Primitive1D right, double t_final) {
  ProblemSpec p;
  p.id = std::move(id);
  p.description = std::move(description);
  p.equations = EquationKind::euler1d;
  p.grid = Grid::line(200, -5.0, 5.0);
  const Euler1D sys;
  const auto ul = sys.to_conserved(left), ur = sys.to_conserved(right);
  p.initial = [ul, ur](double x, double, std::span<double> u) {
    write(u, x <= 0.0 ? ul : ur);
  };
  p.boundaries = BoundarySet::all(GhostPolicy::transmissive());
  p.time = {0.4, t_final, DtRule::cfl_over_speed};
  p.reference = ReferenceKind::exact_riemann;
  p.riemann = RiemannData{left, right, 0.0};
  return p;
}

ProblemSpec shock_entropy(int k, int n) {
  ProblemSpec p;
  p.id = "shock-entropy-k" + std::to_string(k);
  p.description = "Mach 3 shock meeting a density sine wave, k = " + std::to_string(k);
  p.equations = EquationKind::euler1d;
  p.grid = Grid::line(n, -5.0, 5.0);
  const Euler1D sys;
  const auto post = sys.to_conserved({3.857143, 2.629369, 10.333333});
  p.initial = [sys, post, k](double x, double, std::span<double> u) {
    if (x < -4.0)
      write(u, post);
    else
      write(u, sys.to_conserved({1.0 + 0.2 * std::sin(k * x), 0.0, 1.0}));
  };
  p.boundaries = BoundarySet::all(GhostPolicy::transmissive());
  p.time = {0.4, 2.0, DtRule::cfl_over_speed};
  p.reference = ReferenceKind::fine_grid;
  return p;
}

ProblemSpec blast() {
  ProblemSpec p;
  p.id = "blast";
  p.description = "interacting blast waves on [0,1], reflective walls, T = 0.038";
  p.equations = EquationKind::euler1d;
  p.grid = Grid::line(800, 0.0, 1.0);
  const Euler1D sys;
  const auto l = sys.to_conserved({1.0, 0.0, 1000.0});
  const auto m = sys.to_conserved({1.0, 0.0, 0.01});
  const auto r = sys.to_conserved({1.0, 0.0, 100.0});
  p.initial = [l, m, r](double x, double, std::span<double> u) {
    write(u, x < 0.1 ? l : (x < 0.9 ? m : r));
  };
  p.boundaries = BoundarySet::all(GhostPolicy::reflective(Axis::x));
  p.time = {0.4, 0.038, DtRule::cfl_over_speed};
  p.reference = ReferenceKind::fine_grid;
  return p;
}

ProblemSpec riemann2d() {
  ProblemSpec p;
  p.id = "riemann-2d";
  p.description = "four-quadrant 2D Riemann problem on [0,1]^2, T = 0.3";
  p.equations = EquationKind::euler2d;
  p.grid = Grid::plane(400, 400, 0.0, 1.0, 0.0, 1.0);
  const Euler2D sys;
  const auto ne = sys.to_conserved({1.0, 0.1, 0.0, 1.0});
  const auto nw = sys.to_conserved({0.5313, 0.8276, 0.0, 0.4});
  const auto sw = sys.to_conserved({0.8, 0.1, 0.0, 0.4});
  const auto se = sys.to_conserved({0.5313, 0.1, 0.7276, 0.4});
  p.initial = [=](double x, double y, std::span<double> u) {
    if (y > 0.5)
      write(u, x > 0.5 ? ne : nw);
    else
      write(u, x > 0.5 ? se : sw);
  };
  p.boundaries = BoundarySet::all(GhostPolicy::transmissive());
  p.time = {0.4, 0.3, DtRule::cfl_over_speed};
  return p;
}

ProblemSpec forward_step() {
  ProblemSpec p;
  p.id = "ffs";
  p.description = "Mach 3 wind tunnel with a forward-facing step, T = 4";
  p.equations = EquationKind::euler2d;
  p.grid = Grid::plane(480, 160, 0.0, 3.0, 0.0, 1.0);
  const Euler2D sys;
  const auto inflow = sys.to_conserved({1.4, 3.0, 0.0, 1.0});
  p.initial = [inflow](double, double, std::span<double> u) { write(u, inflow); };
  p.boundaries.left = GhostPolicy::dirichlet(as_vector(inflow));
  p.boundaries.right = GhostPolicy::transmissive();
  p.boundaries.bottom = GhostPolicy::reflective(Axis::y);
  p.boundaries.top = GhostPolicy::reflective(Axis::y);
  p.mask = StepMask{0.6, 0.2};
  p.time = {0.4, 4.0, DtRule::cfl_over_speed};
  p.p = 20.0;
  return p;
}

ProblemSpec double_mach() {
  ProblemSpec p;
  p.id = "dmr";
  p.description = "double Mach reflection of a Mach 10 shock, T = 0.2";
  p.equations = EquationKind::euler2d;
  p.grid = Grid::plane(800, 200, 0.0, 4.0, 0.0, 1.0);
  const Euler2D sys;
  const double theta = std::numbers::pi / 6.0;
  const auto post =
      sys.to_conserved({8.0, 8.25 * std::cos(theta), -8.25 * std::sin(theta), 116.5});
  const auto pre = sys.to_conserved({1.4, 0.0, 0.0, 1.0});
  ObliqueShock shock{as_vector(post), as_vector(pre), 1.0 / 6.0, 10.0};
  p.initial = [post, pre, shock](double x, double y, std::span<double> u) {
    write(u, x < shock.position(y, 0.0) ? post : pre);
  };
  p.boundaries.left = GhostPolicy::dirichlet(as_vector(post));
  p.boundaries.right = GhostPolicy::transmissive();
  p.boundaries.bottom = GhostPolicy::dmr_bottom(shock);
  p.boundaries.top = GhostPolicy::dmr_top(shock);
  p.time = {0.4, 0.2, DtRule::cfl_over_speed};
  p.p = 10.0;
  return p;
}

}  // namespace

const std::vector<std::string>& problem_ids() {
  static const std::vector<std::string> ids{
      "advect-sine", "sod", "lax", "shock-entropy-k5", "shock-entropy-k10",
      "blast", "riemann-2d", "ffs", "dmr"};
  return ids;
}

ProblemSpec make_problem(std::string_view id) {
  if (id == "advect-sine") return advection();
  if (id == "sod")
    return shock_tube("sod", "Sod shock tube on [-5,5], T = 2", {1.0, 0.0, 1.0},
                      {0.125, 0.0, 0.1}, 2.0);
  if (id == "lax")
    return shock_tube("lax", "Lax shock tube on [-5,5], T = 1.3", {0.445, 0.698, 3.528},
                      {0.5, 0.0, 0.571}, 1.3);
  if (id == "shock-entropy-k5") return shock_entropy(5, 400);
  if (id == "shock-entropy-k10") return shock_entropy(10, 800);
  if (id == "blast") return blast();
  if (id == "riemann-2d") return riemann2d();
  if (id == "ffs") return forward_step();
  if (id == "dmr") return double_mach();

  std::string valid;
  for (const auto& s : problem_ids()) {
    if (!valid.empty()) valid += ", ";
    valid += s;
  }
  throw std::invalid_argument("unknown problem '" + std::string(id) + "' (valid: " + valid +
                              ")");
}

}  // namespace cuweno
