#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "cuweno/equations.hpp"

namespace cuweno {

/// Uniform cell-centred grid. One-dimensional grids have ny == 1 and carry
/// no ghost rows in y.
struct Grid {
  int dim = 1;
  int nx = 0;
  int ny = 1;
  int ng = 3;
  double x0 = 0.0, x1 = 1.0;
  double y0 = 0.0, y1 = 1.0;

  static Grid line(int n, double a, double b, int ghosts = 3) {
    return {1, n, 1, ghosts, a, b, 0.0, 1.0};
  }
  static Grid plane(int nx, int ny, double ax, double bx, double ay, double by,
                    int ghosts = 3) {
    return {2, nx, ny, ghosts, ax, bx, ay, by};
  }

  double dx() const { return (x1 - x0) / nx; }
  double dy() const { return dim == 2 ? (y1 - y0) / ny : 0.0; }
  double xc(int i) const { return x0 + (i + 0.5) * dx(); }
  double yc(int j) const { return dim == 2 ? y0 + (j + 0.5) * dy() : 0.0; }
  int ngy() const { return dim == 2 ? ng : 0; }
  int row_length() const { return nx + 2 * ng; }
  int column_length() const { return ny + 2 * ngy(); }
  std::size_t cell_count() const { return static_cast<std::size_t>(nx) * ny; }
};

/// Conserved variables on a Grid plus a ghost frame of width grid.ng.
/// Cells are addressed with interior-relative indices, so i ranges over
/// [-ng, nx + ng) and j over [-ngy, ny + ngy). Storage is cell-major.
template <std::size_t NV>
class Field {
 public:
  using State = StateVec<NV>;
  static constexpr std::size_t nvar = NV;

  Field() = default;
  explicit Field(const Grid& grid)
      : grid_(grid),
        values_(static_cast<std::size_t>(grid.row_length()) * grid.column_length() * NV,
                0.0) {
    if (grid.nx < 1 || grid.ny < 1 || grid.ng < 0)
      throw std::invalid_argument("grid must have at least one cell");
  }

  const Grid& grid() const { return grid_; }

  std::size_t offset(int i, int j = 0) const {
    return (static_cast<std::size_t>(j + grid_.ngy()) * grid_.row_length() +
            static_cast<std::size_t>(i + grid_.ng)) *
           NV;
  }

  double* cell(int i, int j = 0) { return values_.data() + offset(i, j); }
  const double* cell(int i, int j = 0) const { return values_.data() + offset(i, j); }

  State get(int i, int j = 0) const {
    State s;
    const double* c = cell(i, j);
    for (std::size_t v = 0; v < NV; ++v) s[v] = c[v];
    return s;
  }

  void set(int i, int j, const State& s) {
    double* c = cell(i, j);
    for (std::size_t v = 0; v < NV; ++v) c[v] = s[v];
  }
  void set(int i, const State& s) { set(i, 0, s); }

  std::span<double> values() { return values_; }
  std::span<const double> values() const { return values_; }

  /// Sum of component v over interior cells.
  double interior_sum(std::size_t v) const {
    double total = 0.0;
    for (int j = 0; j < grid_.ny; ++j)
      for (int i = 0; i < grid_.nx; ++i) total += cell(i, j)[v];
    return total;
  }

  /// Interior values of component v, row by row.
  std::vector<double> interior_component(std::size_t v) const {
    std::vector<double> out;
    out.reserve(grid_.cell_count());
    for (int j = 0; j < grid_.ny; ++j)
      for (int i = 0; i < grid_.nx; ++i) out.push_back(cell(i, j)[v]);
    return out;
  }

 private:
  Grid grid_;
  std::vector<double> values_;
};

}  // namespace cuweno
