#include "cuweno/boundary.hpp"

#include <array>
#include <utility>

namespace cuweno {

namespace {

constexpr std::array<std::pair<GhostKind, std::string_view>, 7> kNames{{
    {GhostKind::periodic, "periodic"},
    {GhostKind::transmissive, "transmissive"},
    {GhostKind::reflective_x, "reflective_x"},
    {GhostKind::reflective_y, "reflective_y"},
    {GhostKind::dirichlet_state, "dirichlet_state"},
    {GhostKind::dmr_bottom, "dmr_bottom"},
    {GhostKind::dmr_top, "dmr_top"},
}};

}  // namespace

std::string_view ghost_kind_name(GhostKind k) {
  for (const auto& [kind, name] : kNames)
    if (kind == k) return name;
  return "?";
}

GhostKind parse_ghost_kind(std::string_view name) {
  for (const auto& [kind, n] : kNames)
    if (n == name) return kind;
  throw std::invalid_argument("unknown boundary policy '" + std::string(name) + "'");
}

LineSegment fluid_segment(const Grid& g, const std::optional<StepMask>& mask, Axis axis,
                          int line) {
  if (axis == Axis::x) {
    LineSegment seg{0, g.nx, false, false};
    if (!mask || g.dim != 2 || g.yc(line) > mask->y_corner) return seg;
    int i = 0;
    while (i < g.nx && !mask->solid(g, i, line)) ++i;
    seg.end = i;
    seg.wall_at_end = i < g.nx;
    return seg;
  }
  LineSegment seg{0, g.ny, false, false};
  if (!mask || g.xc(line) < mask->x_corner) return seg;
  int j = 0;
  while (j < g.ny && mask->solid(g, line, j)) ++j;
  seg.begin = j;
  seg.wall_at_begin = j > 0;
  return seg;
}

}  // namespace cuweno
