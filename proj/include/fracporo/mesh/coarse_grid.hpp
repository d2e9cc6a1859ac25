#pragma once

#include <array>
#include <vector>

#include "fracporo/mesh/fine_mesh.hpp"

namespace fracporo {

/// Uniform rectangular coarse grid.
///
/// Vertices are numbered lexicographically with x fastest:
/// vertex (i, j) -> j * (nx + 1) + i. Cells likewise: cell (i, j) -> j * nx + i.
/// Cell vertices are listed counter-clockwise starting at the lower-left corner.
class CoarseGrid {
 public:
  CoarseGrid(const Box& extents, int nx, int ny);

  int nx() const { return nx_; }
  int ny() const { return ny_; }
  int num_vertices() const { return (nx_ + 1) * (ny_ + 1); }
  int num_cells() const { return nx_ * ny_; }
  const Box& extents() const { return extents_; }
  double hx() const { return hx_; }
  double hy() const { return hy_; }

  int vertex_id(int i, int j) const { return j * (nx_ + 1) + i; }
  int cell_id(int i, int j) const { return j * nx_ + i; }
  Point vertex(int v) const;
  std::array<int, 4> cell_vertices(int c) const;
  const std::vector<int>& vertex_cells(int v) const { return vertex_cells_[v]; }
  Box cell_box(int c) const;
  /// Union of the cells incident to vertex v (always a rectangle).
  Box patch_box(int v) const;

  /// Cell whose closure contains p (tolerance tol), preferring the cell that
  /// holds p in its interior. Returns -1 when p lies outside the domain.
  int locate(const Point& p, double tol) const;

  /// Bilinear hat function of vertex v evaluated at p.
  double hat(int v, const Point& p) const;

 private:
  Box extents_;
  int nx_, ny_;
  double hx_, hy_;
  std::vector<std::vector<int>> vertex_cells_;
};

CoarseGrid build_coarse_grid(const Box& extents, int nx, int ny);

}  // namespace fracporo
