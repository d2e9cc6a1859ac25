#include "fracporo/app/synthetic_field.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "fracporo/errors.hpp"
#include "fracporo/hash.hpp"

namespace fracporo {

namespace {

constexpr int kLattice = 8;
constexpr int kBands = 7;
constexpr double kCellNoise = 0.2;

double lattice_value(std::uint64_t seed, int i, int j) {
  return hash_unit(hash_combine(hash_combine(seed, 0x6c61747469636500ULL + i), static_cast<std::uint64_t>(j)));
}

double smooth(double t) { return t * t * (3.0 - 2.0 * t); }

double blob_score(std::uint64_t seed, double x, double y) {
  const double gx = x * kLattice, gy = y * kLattice;
  const int i = std::min(static_cast<int>(gx), kLattice - 1);
  const int j = std::min(static_cast<int>(gy), kLattice - 1);
  const double tx = smooth(gx - i), ty = smooth(gy - j);
  const double v00 = lattice_value(seed, i, j), v10 = lattice_value(seed, i + 1, j);
  const double v01 = lattice_value(seed, i, j + 1), v11 = lattice_value(seed, i + 1, j + 1);
  return (1 - ty) * ((1 - tx) * v00 + tx * v10) + ty * ((1 - tx) * v01 + tx * v11);
}

double band_score(std::uint64_t seed, double y) {
  const int band = std::min(static_cast<int>(y * kBands), kBands - 1);
  return hash_unit(hash_combine(seed ^ 0x62616e64ULL, static_cast<std::uint64_t>(band)));
}

std::vector<std::vector<int>> triangle_neighbours(const FineMesh& mesh) {
  std::map<std::pair<int, int>, int> first_owner;
  std::vector<std::vector<int>> adj(mesh.num_triangles());
  for (int t = 0; t < mesh.num_triangles(); ++t) {
    const auto& tri = mesh.triangle(t);
    for (int e = 0; e < 3; ++e) {
      const int a = tri[e], b = tri[(e + 1) % 3];
      const auto key = std::minmax(a, b);
      auto [it, inserted] = first_owner.emplace(key, t);
      if (!inserted) {
        adj[t].push_back(it->second);
        adj[it->second].push_back(t);
      }
    }
  }
  return adj;
}

}  // namespace

FieldStyle parse_field_style(const std::string& name) {
  if (name == "layered") return FieldStyle::kLayered;
  if (name == "lognormal-blobs") return FieldStyle::kLognormalBlobs;
  throw ValidationError("unknown field style '" + name + "' (expected layered or lognormal-blobs)");
}

std::vector<double> generate_synthetic_field(std::uint64_t seed, const FineMesh& mesh, double contrast,
                                             FieldStyle style) {
  if (!(contrast >= 1.0) || !std::isfinite(contrast)) throw DataError("field contrast must be >= 1");
  const int n = mesh.num_triangles();
  if (contrast == 1.0) return std::vector<double>(n, 1.0);

  const Box& box = mesh.bounds();
  std::vector<double> s(n);
  for (int t = 0; t < n; ++t) {
    const Point c = mesh.centroid(t);
    const double x = (c.x - box.x0) / box.width(), y = (c.y - box.y0) / box.height();
    const double base = style == FieldStyle::kLayered ? band_score(seed, y) : blob_score(seed, x, y);
    const double noise = hash_unit(hash_combine(seed ^ 0x63656c6cULL, static_cast<std::uint64_t>(t)));
    s[t] = (1.0 - kCellNoise) * base + kCellNoise * noise;
  }

  const auto adj = triangle_neighbours(mesh);
  for (int pass = 0; pass < 2; ++pass) {
    std::vector<double> next(n);
    for (int t = 0; t < n; ++t) {
      double sum = s[t];
      for (int nb : adj[t]) sum += s[nb];
      next[t] = sum / static_cast<double>(1 + adj[t].size());
    }
    s.swap(next);
  }

  const auto [lo, hi] = std::minmax_element(s.begin(), s.end());
  const double min = *lo, range = *hi - *lo;
  std::vector<double> field(n);
  for (int t = 0; t < n; ++t) {
    const double u = range > 0.0 ? (s[t] - min) / range : 0.0;
    field[t] = u <= 0.0 ? 1.0 : u >= 1.0 ? contrast : std::pow(contrast, u);
  }
  return field;
}

}  // namespace fracporo
