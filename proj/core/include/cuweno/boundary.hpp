#pragma once

// Ghost-cell boundary conditions and the forward-facing step mask.

#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cuweno/field.hpp"

namespace cuweno {

enum class GhostKind {
  periodic,
  transmissive,
  reflective_x,
  reflective_y,
  dirichlet_state,
  dmr_bottom,
  dmr_top,
};

std::string_view ghost_kind_name(GhostKind k);
GhostKind parse_ghost_kind(std::string_view name);

/// Oblique Mach-10 shock of the double Mach reflection, inclined at 60 degrees
/// to the x-axis. Its foot sits at x0 at t = 0.
struct ObliqueShock {
  std::vector<double> post;  // conserved
  std::vector<double> pre;   // conserved
  double x0 = 1.0 / 6.0;
  double mach = 10.0;

  /// x-position of the shock at height y and time t.
  double position(double y, double t) const {
    return x0 + (y + 2.0 * mach * t) / std::sqrt(3.0);
  }
};

struct GhostPolicy {
  GhostKind kind = GhostKind::transmissive;
  std::vector<double> state;           // dirichlet_state, conserved
  std::optional<ObliqueShock> shock;   // dmr_bottom / dmr_top

  static GhostPolicy periodic() { return {GhostKind::periodic, {}, {}}; }
  static GhostPolicy transmissive() { return {GhostKind::transmissive, {}, {}}; }
  static GhostPolicy reflective(Axis normal) {
    return {normal == Axis::x ? GhostKind::reflective_x : GhostKind::reflective_y, {}, {}};
  }
  static GhostPolicy dirichlet(std::vector<double> conserved) {
    return {GhostKind::dirichlet_state, std::move(conserved), {}};
  }
  static GhostPolicy dmr_bottom(ObliqueShock s) {
    return {GhostKind::dmr_bottom, {}, std::move(s)};
  }
  static GhostPolicy dmr_top(ObliqueShock s) { return {GhostKind::dmr_top, {}, std::move(s)}; }
};

struct BoundarySet {
  GhostPolicy left, right, bottom, top;

  static BoundarySet all(const GhostPolicy& p) { return {p, p, p, p}; }
};

/// Solid region x >= x_corner && y <= y_corner, tested at cell centres.
struct StepMask {
  double x_corner = 0.6;
  double y_corner = 0.2;

  bool solid(double x, double y) const { return x >= x_corner && y <= y_corner; }
  bool solid(const Grid& g, int i, int j) const { return solid(g.xc(i), g.yc(j)); }
};

/// Half-open range of fluid cells along one grid line.
struct LineSegment {
  int begin = 0;
  int end = 0;
  bool wall_at_begin = false;  // false: domain edge
  bool wall_at_end = false;
};

/// Fluid cells of row j (axis x) or column i (axis y). Without a mask this is
/// the whole line. The step is assumed to touch the bottom-right of the domain.
LineSegment fluid_segment(const Grid& g, const std::optional<StepMask>& mask, Axis axis,
                          int line);

namespace detail {

[[noreturn]] inline void bad_policy(GhostKind k, std::string_view side) {
  throw std::invalid_argument("boundary policy " + std::string(ghost_kind_name(k)) +
                              " is not valid on the " + std::string(side) + " side");
}

// Index of the momentum component normal to `axis` for an NV-component system.
template <std::size_t NV>
constexpr int normal_momentum(Axis axis) {
  if constexpr (NV == 3) return axis == Axis::x ? 1 : -1;
  if constexpr (NV == 4) return axis == Axis::x ? 1 : 2;
  return -1;
}

template <std::size_t NV>
inline void copy_cell(const double* src, double* dst, int flip) {
  for (std::size_t v = 0; v < NV; ++v) dst[v] = src[v];
  if (flip >= 0) dst[flip] = -dst[flip];
}

template <std::size_t NV>
inline void write_state(const std::vector<double>& s, double* dst) {
  if (s.size() != NV) throw std::invalid_argument("boundary state has wrong size");
  for (std::size_t v = 0; v < NV; ++v) dst[v] = s[v];
}

}  // namespace detail

/// Fill the ghost frame of `u` from the interior according to `bc` at time t.
/// Corner ghost cells of 2D fields are left untouched; dimension-by-dimension
/// sweeps never read them.
template <std::size_t NV>
void fill_ghosts(Field<NV>& u, const BoundarySet& bc, double t) {
  const Grid& g = u.grid();
  const int nx = g.nx, ny = g.ny, ng = g.ng;

  auto fill_x_side = [&](const GhostPolicy& pol, bool left) {
    const int flip = detail::normal_momentum<NV>(Axis::x);
    for (int j = 0; j < ny; ++j) {
      for (int k = 0; k < ng; ++k) {
        const int ghost = left ? -1 - k : nx + k;
        double* dst = u.cell(ghost, j);
        switch (pol.kind) {
          case GhostKind::periodic:
            detail::copy_cell<NV>(u.cell(left ? nx - 1 - k : k, j), dst, -1);
            break;
          case GhostKind::transmissive:
            detail::copy_cell<NV>(u.cell(left ? 0 : nx - 1, j), dst, -1);
            break;
          case GhostKind::reflective_x:
            if (flip < 0) detail::bad_policy(pol.kind, left ? "left" : "right");
            detail::copy_cell<NV>(u.cell(left ? k : nx - 1 - k, j), dst, flip);
            break;
          case GhostKind::dirichlet_state:
            detail::write_state<NV>(pol.state, dst);
            break;
          default:
            detail::bad_policy(pol.kind, left ? "left" : "right");
        }
      }
    }
  };

  auto fill_y_side = [&](const GhostPolicy& pol, bool bottom) {
    const int flip = detail::normal_momentum<NV>(Axis::y);
    for (int k = 0; k < ng; ++k) {
      const int ghost = bottom ? -1 - k : ny + k;
      const int mirror = bottom ? k : ny - 1 - k;
      for (int i = 0; i < nx; ++i) {
        double* dst = u.cell(i, ghost);
        switch (pol.kind) {
          case GhostKind::periodic:
            detail::copy_cell<NV>(u.cell(i, bottom ? ny - 1 - k : k), dst, -1);
            break;
          case GhostKind::transmissive:
            detail::copy_cell<NV>(u.cell(i, bottom ? 0 : ny - 1), dst, -1);
            break;
          case GhostKind::reflective_y:
            if (flip < 0) detail::bad_policy(pol.kind, bottom ? "bottom" : "top");
            detail::copy_cell<NV>(u.cell(i, mirror), dst, flip);
            break;
          case GhostKind::dirichlet_state:
            detail::write_state<NV>(pol.state, dst);
            break;
          case GhostKind::dmr_bottom:
            if (!bottom || !pol.shock || flip < 0)
              detail::bad_policy(pol.kind, bottom ? "bottom" : "top");
            if (g.xc(i) < pol.shock->x0)
              detail::write_state<NV>(pol.shock->post, dst);
            else
              detail::copy_cell<NV>(u.cell(i, mirror), dst, flip);
            break;
          case GhostKind::dmr_top:
            if (bottom || !pol.shock) detail::bad_policy(pol.kind, bottom ? "bottom" : "top");
            detail::write_state<NV>(
                g.xc(i) < pol.shock->position(g.y1, t) ? pol.shock->post : pol.shock->pre,
                dst);
            break;
          default:
            detail::bad_policy(pol.kind, bottom ? "bottom" : "top");
        }
      }
    }
  };

  fill_x_side(bc.left, true);
  fill_x_side(bc.right, false);
  if (g.dim == 2) {
    fill_y_side(bc.bottom, true);
    fill_y_side(bc.top, false);
  }
}

}  // namespace cuweno
