#include "fracporo/mesh/coarse_grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fracporo/errors.hpp"

namespace fracporo {

CoarseGrid::CoarseGrid(const Box& extents, int nx, int ny) : extents_(extents), nx_(nx), ny_(ny) {
  if (nx < 1 || ny < 1)
    throw ConfigError("coarse grid needs nx, ny >= 1 (got " + std::to_string(nx) + ", " + std::to_string(ny) + ")");
  if (!(extents.width() > 0.0) || !(extents.height() > 0.0))
    throw ConfigError("coarse grid extents must be positive");
  hx_ = extents.width() / nx;
  hy_ = extents.height() / ny;
  vertex_cells_.resize(num_vertices());
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      const int c = cell_id(i, j);
      for (int v : cell_vertices(c)) vertex_cells_[v].push_back(c);
    }
  for (auto& cells : vertex_cells_) std::sort(cells.begin(), cells.end());
}

Point CoarseGrid::vertex(int v) const {
  const int i = v % (nx_ + 1);
  const int j = v / (nx_ + 1);
  // Last row/column snap exactly to the extents.
  const double x = i == nx_ ? extents_.x1 : extents_.x0 + i * hx_;
  const double y = j == ny_ ? extents_.y1 : extents_.y0 + j * hy_;
  return {x, y};
}

std::array<int, 4> CoarseGrid::cell_vertices(int c) const {
  const int i = c % nx_;
  const int j = c / nx_;
  return {vertex_id(i, j), vertex_id(i + 1, j), vertex_id(i + 1, j + 1), vertex_id(i, j + 1)};
}

Box CoarseGrid::cell_box(int c) const {
  const auto v = cell_vertices(c);
  const Point lo = vertex(v[0]);
  const Point hi = vertex(v[2]);
  return {lo.x, lo.y, hi.x, hi.y};
}

Box CoarseGrid::patch_box(int v) const {
  Box b = cell_box(vertex_cells_[v].front());
  for (int c : vertex_cells_[v]) {
    const Box cb = cell_box(c);
    b.x0 = std::min(b.x0, cb.x0);
    b.y0 = std::min(b.y0, cb.y0);
    b.x1 = std::max(b.x1, cb.x1);
    b.y1 = std::max(b.y1, cb.y1);
  }
  return b;
}

int CoarseGrid::locate(const Point& p, double tol) const {
  if (p.x < extents_.x0 - tol || p.x > extents_.x1 + tol || p.y < extents_.y0 - tol || p.y > extents_.y1 + tol)
    return -1;
  const int i = std::clamp(static_cast<int>(std::floor((p.x - extents_.x0) / hx_)), 0, nx_ - 1);
  const int j = std::clamp(static_cast<int>(std::floor((p.y - extents_.y0) / hy_)), 0, ny_ - 1);
  return cell_id(i, j);
}

double CoarseGrid::hat(int v, const Point& p) const {
  const Point c = vertex(v);
  const double wx = std::max(0.0, 1.0 - std::abs(p.x - c.x) / hx_);
  const double wy = std::max(0.0, 1.0 - std::abs(p.y - c.y) / hy_);
  return wx * wy;
}

CoarseGrid build_coarse_grid(const Box& extents, int nx, int ny) { return CoarseGrid(extents, nx, ny); }

}  // namespace fracporo
