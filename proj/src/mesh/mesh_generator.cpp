#include "fracporo/mesh/mesh_generator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <string>

#include "fracporo/errors.hpp"
#include "fracporo/hash.hpp"

namespace fracporo {

namespace {

enum Diagonal : char { kUnset = 0, kRising = 1, kFalling = 2 };  // "/" and "\"

}  // namespace

FineMesh generate_lattice_mesh(const LatticeMeshSpec& spec) {
  const int nx = spec.cells_x, ny = spec.cells_y;
  if (nx < 1 || ny < 1) throw ConfigError("lattice needs at least one cell per direction");
  const double hx = spec.extents.width() / nx, hy = spec.extents.height() / ny;
  auto node_id = [&](int i, int j) { return j * (nx + 1) + i; };

  std::vector<char> diag(static_cast<std::size_t>(nx) * ny, kUnset);
  std::vector<char> frac_node((nx + 1) * (ny + 1), 0);
  std::map<std::pair<int, int>, int> dedup;
  std::vector<Edge> fedges;
  auto add_edge = [&](int a, int b) {
    auto key = a < b ? std::pair{a, b} : std::pair{b, a};
    if (dedup.emplace(key, 0).second) fedges.push_back({a, b});
    frac_node[a] = frac_node[b] = 1;
  };

  for (const auto& f : spec.fractures) {
    const int di = f.i1 - f.i0, dj = f.j1 - f.j0;
    if (di == 0 && dj == 0) continue;
    if (di != 0 && dj != 0 && std::abs(di) != std::abs(dj))
      throw ConfigError("lattice fracture must be axis-aligned or diagonal");
    for (int v : {f.i0, f.i1})
      if (v < 0 || v > nx) throw ConfigError("lattice fracture leaves the lattice");
    for (int v : {f.j0, f.j1})
      if (v < 0 || v > ny) throw ConfigError("lattice fracture leaves the lattice");
    const int steps = std::max(std::abs(di), std::abs(dj));
    const int si = (di > 0) - (di < 0), sj = (dj > 0) - (dj < 0);
    for (int s = 0; s < steps; ++s) {
      const int i = f.i0 + s * si, j = f.j0 + s * sj;
      add_edge(node_id(i, j), node_id(i + si, j + sj));
      if (si != 0 && sj != 0) {
        const int ci = std::min(i, i + si), cj = std::min(j, j + sj);
        const char need = (si == sj) ? kRising : kFalling;
        char& d = diag[cj * nx + ci];
        if (d != kUnset && d != need)
          throw ConfigError("crossing diagonal fractures inside cell (" + std::to_string(ci) + ", " +
                            std::to_string(cj) + ")");
        d = need;
      }
    }
  }

  std::vector<Point> nodes((nx + 1) * (ny + 1));
  std::vector<std::uint8_t> tags(nodes.size(), kNoSide);
  for (int j = 0; j <= ny; ++j)
    for (int i = 0; i <= nx; ++i) {
      const int id = node_id(i, j);
      double x = i == nx ? spec.extents.x1 : spec.extents.x0 + i * hx;
      double y = j == ny ? spec.extents.y1 : spec.extents.y0 + j * hy;
      const bool boundary = i == 0 || j == 0 || i == nx || j == ny;
      const bool locked = spec.lock_every > 0 && (i % spec.lock_every == 0 || j % spec.lock_every == 0);
      if (!boundary && !locked && !frac_node[id] && spec.jitter > 0.0) {
        const std::uint64_t h = hash_combine(spec.seed, static_cast<std::uint64_t>(id));
        x += spec.jitter * hx * (2.0 * hash_unit(h) - 1.0);
        y += spec.jitter * hy * (2.0 * hash_unit(mix64(h)) - 1.0);
      }
      nodes[id] = {x, y};
      if (i == 0) tags[id] |= kLeft;
      if (i == nx) tags[id] |= kRight;
      if (j == 0) tags[id] |= kBottom;
      if (j == ny) tags[id] |= kTop;
    }

  std::vector<Triangle> tris;
  tris.reserve(2 * diag.size());
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      const int a = node_id(i, j), b = node_id(i + 1, j), c = node_id(i + 1, j + 1), d = node_id(i, j + 1);
      char dg = diag[j * nx + i];
      if (dg == kUnset)
        dg = (hash_combine(spec.seed ^ 0xd1a6ULL, static_cast<std::uint64_t>(j * nx + i)) & 1) ? kRising : kFalling;
      if (dg == kRising) {
        tris.push_back({a, b, c});
        tris.push_back({a, c, d});
      } else {
        tris.push_back({a, b, d});
        tris.push_back({b, c, d});
      }
    }
  return FineMesh(std::move(nodes), std::move(tris), {}, std::move(fedges), std::move(tags));
}

std::vector<LatticeFracture> reference_fracture_network(int cells) {
  // Layout on a 110-cell lattice: {i0, j0, direction i, direction j, length}.
  struct Ray {
    int i0, j0, si, sj, len;
  };
  static const Ray kRays[] = {
      {0, 60, 1, 0, 45},    // horizontal, from the left boundary
      {30, 20, 0, 1, 55},   // vertical, crosses the first one
      {55, 15, 1, 1, 35},   // rising diagonal
      {60, 95, 1, -1, 35},  // falling diagonal
      {65, 30, 1, 0, 35},   // horizontal, crosses the rising diagonal
      {80, 70, 0, 1, 30},   // vertical, crosses the falling diagonal
      {10, 80, 1, 1, 25},   // rising diagonal, upper left
      {40, 100, 1, 0, 15},  // short horizontal near the top
  };
  const double s = cells / 110.0;
  std::vector<LatticeFracture> out;
  for (const auto& r : kRays) {
    const int i0 = static_cast<int>(std::lround(r.i0 * s));
    const int j0 = static_cast<int>(std::lround(r.j0 * s));
    const int len = std::max(1, static_cast<int>(std::lround(r.len * s)));
    int i1 = std::min(cells, i0 + r.si * len), j1 = std::clamp(j0 + r.sj * len, 0, cells);
    if (r.si != 0 && r.sj != 0) {
      const int m = std::min(std::abs(i1 - i0), std::abs(j1 - j0));
      i1 = i0 + r.si * m;
      j1 = j0 + r.sj * m;
    }
    out.push_back({i0, j0, i1, j1});
  }
  return out;
}

}  // namespace fracporo
