#pragma once

// Semi-discrete right-hand side L(u) = -(dF/dx + dG/dy) on a Field, built
// line by line from FluxAssembler. Each grid line is gathered into a
// contiguous buffer with its ghost cells, so x- and y-sweeps share the same
// code and the step mask is applied as a mirrored wall inside the buffer.

#include <algorithm>
#include <optional>
#include <sstream>
#include <vector>

#include "cuweno/boundary.hpp"
#include "cuweno/field.hpp"
#include "cuweno/flux.hpp"

namespace cuweno {

template <class System>
class SpatialOperator {
 public:
  static constexpr std::size_t NV = System::nvar;
  using State = typename System::State;
  using FieldType = Field<NV>;

  SpatialOperator(System sys, SchemeConfig cfg, BoundarySet bc,
                  std::optional<StepMask> mask = std::nullopt, AssemblyOptions opt = {})
      : assembler_(sys, cfg, opt), bc_(std::move(bc)), mask_(mask) {}

  const FluxAssembler<System>& assembler() const { return assembler_; }
  const BoundarySet& boundaries() const { return bc_; }
  const std::optional<StepMask>& mask() const { return mask_; }

  bool is_fluid(const Grid& g, int i, int j) const {
    return !mask_ || !mask_->solid(g, i, j);
  }

  /// Fills the ghost frame of `u` for time t, then writes L(u) into `dudt`.
  void operator()(FieldType& u, double t, FieldType& dudt) {
    const Grid& g = u.grid();
    if (g.ng < 3) throw std::invalid_argument("flux assembly needs 3 ghost cells");
    fill_ghosts(u, bc_, t);
    std::fill(dudt.values().begin(), dudt.values().end(), 0.0);
    const auto [ax, ay] = splitting_speeds(u);
    for (int j = 0; j < g.ny; ++j) sweep(u, dudt, Axis::x, j, ax);
    if (g.dim == 2)
      for (int i = 0; i < g.nx; ++i) sweep(u, dudt, Axis::y, i, ay);
  }

  /// Largest characteristic speed over interior fluid cells (both axes).
  double max_speed(const FieldType& u) const {
    const Grid& g = u.grid();
    const System& sys = assembler_.system();
    double smax = 0.0;
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i) {
        if (!is_fluid(g, i, j)) continue;
        const State s = checked(u, i, j);
        smax = std::max(smax, sys.max_speed(s, Axis::x));
        if (g.dim == 2) smax = std::max(smax, sys.max_speed(s, Axis::y));
      }
    return smax;
  }

 private:
  State checked(const FieldType& u, int i, int j) const {
    const State s = u.get(i, j);
    const System& sys = assembler_.system();
    if (!sys.admissible(s)) {
      std::ostringstream os;
      os << "non-physical state at cell (" << i << ", " << j << ")";
      if constexpr (NV > 1) os << ": rho=" << s[0] << " P=" << sys.pressure(s);
      throw NonPhysicalState(os.str(), static_cast<long>(j) * u.grid().nx + i);
    }
    return s;
  }

  // Global Lax-Friedrichs speeds per axis over fluid cells and the edge ghosts.
  std::pair<double, double> splitting_speeds(const FieldType& u) const {
    const Grid& g = u.grid();
    const System& sys = assembler_.system();
    double ax = 0.0, ay = 0.0;
    for (int j = 0; j < g.ny; ++j)
      for (int i = -g.ng; i < g.nx + g.ng; ++i) {
        const bool interior = i >= 0 && i < g.nx;
        if (!is_fluid(g, std::clamp(i, 0, g.nx - 1), j)) continue;
        const State s = checked(u, i, j);
        ax = std::max(ax, sys.max_speed(s, Axis::x));
        if (g.dim == 2 && interior) ay = std::max(ay, sys.max_speed(s, Axis::y));
      }
    if (g.dim == 2)
      for (int k = 0; k < g.ng; ++k)
        for (int i = 0; i < g.nx; ++i) {
          if (is_fluid(g, i, 0))
            ay = std::max(ay, sys.max_speed(checked(u, i, -1 - k), Axis::y));
          if (is_fluid(g, i, g.ny - 1))
            ay = std::max(ay, sys.max_speed(checked(u, i, g.ny + k), Axis::y));
        }
    // A resting state still needs a positive splitting speed.
    const double floor = 1e-12;
    return {std::max(ax, floor), std::max(ay, floor)};
  }

  void sweep(FieldType& u, FieldType& dudt, Axis axis, int line, double alpha) {
    const Grid& g = u.grid();
    const LineSegment seg = fluid_segment(g, mask_, axis, line);
    const int n = seg.end - seg.begin;
    if (n <= 0) return;
    const int ng = g.ng;
    const int len = n + 2 * ng;
    const System& sys = assembler_.system();

    line_u_.resize(len);
    line_f_.resize(len);
    flux_.resize(n + 1);
    tend_.assign(n, State{});

    auto at = [&](int s) -> const double* {
      return axis == Axis::x ? u.cell(s, line) : u.cell(line, s);
    };
    for (int k = 0; k < len; ++k) {
      const double* c = at(seg.begin - ng + k);
      for (std::size_t v = 0; v < NV; ++v) line_u_[k][v] = c[v];
    }
    const int flip = detail::normal_momentum<NV>(axis);
    if (seg.wall_at_end)
      for (int k = 0; k < ng; ++k) mirror(line_u_[ng + n - 1 - k], line_u_[ng + n + k], flip);
    if (seg.wall_at_begin)
      for (int k = 0; k < ng; ++k) mirror(line_u_[ng + k], line_u_[ng - 1 - k], flip);

    for (int k = 0; k < len; ++k) line_f_[k] = sys.flux(line_u_[k], axis);

    for (int m = 0; m <= n; ++m) {
      // Interface between buffer cells ng-1+m and ng+m; window starts two left.
      const int start = ng - 3 + m;
      const std::span<const State, kFluxWindow> wu(line_u_.data() + start, kFluxWindow);
      const std::span<const State, kFluxWindow> wf(line_f_.data() + start, kFluxWindow);
      flux_[m] = assembler_.interface_flux(wu, wf, alpha, axis);
      for (std::size_t v = 0; v < NV; ++v)
        if (!std::isfinite(flux_[m][v])) {
          std::ostringstream os;
          os << "non-finite " << (axis == Axis::x ? "x" : "y") << "-flux on line " << line
             << " at interface " << seg.begin + m << " (component " << v << ")";
          throw SolverError(os.str());
        }
    }

    rhs_divergence<NV>(flux_, axis == Axis::x ? g.dx() : g.dy(), tend_);
    for (int k = 0; k < n; ++k) {
      const int s = seg.begin + k;
      double* d = axis == Axis::x ? dudt.cell(s, line) : dudt.cell(line, s);
      for (std::size_t v = 0; v < NV; ++v) d[v] += tend_[k][v];
    }
  }

  static void mirror(const State& src, State& dst, int flip) {
    dst = src;
    if (flip >= 0) dst[flip] = -dst[flip];
  }

  FluxAssembler<System> assembler_;
  BoundarySet bc_;
  std::optional<StepMask> mask_;
  std::vector<State> line_u_, line_f_, flux_, tend_;
};

}  // namespace cuweno
