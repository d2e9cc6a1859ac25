#include "fracporo/mesh/fine_mesh.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <set>
#include <string>
#include <utility>

#include "fracporo/errors.hpp"

namespace fracporo {

BoundarySide parse_side(std::string_view tag) {
  if (tag.size() != 1) return kNoSide;
  switch (std::toupper(static_cast<unsigned char>(tag[0]))) {
    case 'L': return kLeft;
    case 'R': return kRight;
    case 'T': return kTop;
    case 'B': return kBottom;
    default: return kNoSide;
  }
}

char side_letter(BoundarySide side) {
  switch (side) {
    case kLeft: return 'L';
    case kRight: return 'R';
    case kTop: return 'T';
    case kBottom: return 'B';
    default: return '?';
  }
}

double Box::diameter() const { return std::hypot(width(), height()); }

namespace {

double signed_area(const Point& a, const Point& b, const Point& c) {
  return 0.5 * ((b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y));
}

std::pair<int, int> edge_key(int a, int b) { return a < b ? std::pair{a, b} : std::pair{b, a}; }

}  // namespace

FineMesh::FineMesh(std::vector<Point> nodes, std::vector<Triangle> triangles,
                   std::vector<int> regions, std::vector<Edge> fracture_edges,
                   std::vector<std::uint8_t> boundary_tags)
    : nodes_(std::move(nodes)),
      triangles_(std::move(triangles)),
      regions_(std::move(regions)),
      fracture_edges_(std::move(fracture_edges)),
      boundary_tags_(std::move(boundary_tags)) {
  const int n = num_nodes();
  if (n < 3 || triangles_.empty()) throw ValidationError("mesh needs at least 3 nodes and 1 triangle");
  if (regions_.empty()) regions_.assign(triangles_.size(), 0);
  if (regions_.size() != triangles_.size())
    throw ValidationError("region id count does not match triangle count");
  if (boundary_tags_.empty()) boundary_tags_.assign(nodes_.size(), kNoSide);
  if (boundary_tags_.size() != nodes_.size())
    throw ValidationError("boundary tag array does not match node count");

  bounds_ = {std::numeric_limits<double>::max(), std::numeric_limits<double>::max(),
             std::numeric_limits<double>::lowest(), std::numeric_limits<double>::lowest()};
  for (const auto& p : nodes_) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw ValidationError("non-finite node coordinate");
    bounds_.x0 = std::min(bounds_.x0, p.x);
    bounds_.y0 = std::min(bounds_.y0, p.y);
    bounds_.x1 = std::max(bounds_.x1, p.x);
    bounds_.y1 = std::max(bounds_.y1, p.y);
  }
  const double diam = bounds_.diameter();
  const double tol = 1e-9 * diam;
  if (bounds_.width() <= 0.0 || bounds_.height() <= 0.0) throw ValidationError("degenerate mesh bounds");

  std::set<std::pair<int, int>> tri_edges;
  for (std::size_t t = 0; t < triangles_.size(); ++t) {
    auto& tri = triangles_[t];
    for (int v : tri)
      if (v < 0 || v >= n)
        throw ValidationError("triangle " + std::to_string(t) + " references missing node " + std::to_string(v));
    if (tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2])
      throw ValidationError("triangle " + std::to_string(t) + " repeats a node");
    const double a = signed_area(nodes_[tri[0]], nodes_[tri[1]], nodes_[tri[2]]);
    if (std::abs(a) <= 1e-14 * diam * diam)
      throw ValidationError("triangle " + std::to_string(t) + " has zero area");
    if (a < 0.0) std::swap(tri[1], tri[2]);
    for (int k = 0; k < 3; ++k) tri_edges.insert(edge_key(tri[k], tri[(k + 1) % 3]));
  }

  std::set<std::pair<int, int>> seen;
  for (std::size_t e = 0; e < fracture_edges_.size(); ++e) {
    const auto& fe = fracture_edges_[e];
    for (int v : fe)
      if (v < 0 || v >= n)
        throw ValidationError("fracture edge " + std::to_string(e) + " references missing node " + std::to_string(v));
    if (fe[0] == fe[1]) throw ValidationError("fracture edge " + std::to_string(e) + " is degenerate");
    const auto key = edge_key(fe[0], fe[1]);
    if (!tri_edges.count(key))
      throw ValidationError("fracture edge (" + std::to_string(fe[0]) + ", " + std::to_string(fe[1]) +
                            ") is not an edge of any triangle");
    if (!seen.insert(key).second)
      throw ValidationError("duplicate fracture edge (" + std::to_string(fe[0]) + ", " + std::to_string(fe[1]) + ")");
  }

  for (int i = 0; i < n; ++i) {
    const auto& p = nodes_[i];
    std::uint8_t geometric = kNoSide;
    if (std::abs(p.x - bounds_.x0) <= tol) geometric |= kLeft;
    if (std::abs(p.x - bounds_.x1) <= tol) geometric |= kRight;
    if (std::abs(p.y - bounds_.y1) <= tol) geometric |= kTop;
    if (std::abs(p.y - bounds_.y0) <= tol) geometric |= kBottom;
    const std::uint8_t tag = boundary_tags_[i];
    if (tag & ~geometric)
      throw ValidationError("node " + std::to_string(i) + " is tagged with a side it does not lie on");
    if (geometric != kNoSide && tag == kNoSide)
      throw ValidationError("boundary node " + std::to_string(i) + " carries no boundary tag");
  }

  fracture_dof_.assign(nodes_.size(), -1);
  std::vector<char> on_fracture(nodes_.size(), 0);
  for (const auto& fe : fracture_edges_) on_fracture[fe[0]] = on_fracture[fe[1]] = 1;
  for (int i = 0; i < n; ++i) {
    if (on_fracture[i]) {
      fracture_dof_[i] = static_cast<int>(fracture_nodes_.size());
      fracture_nodes_.push_back(i);
    }
  }
}

double FineMesh::area(int t) const {
  const auto& tri = triangles_[t];
  return signed_area(nodes_[tri[0]], nodes_[tri[1]], nodes_[tri[2]]);
}

double FineMesh::total_area() const {
  double sum = 0.0;
  for (int t = 0; t < num_triangles(); ++t) sum += area(t);
  return sum;
}

Point FineMesh::centroid(int t) const {
  const auto& tri = triangles_[t];
  return {(nodes_[tri[0]].x + nodes_[tri[1]].x + nodes_[tri[2]].x) / 3.0,
          (nodes_[tri[0]].y + nodes_[tri[1]].y + nodes_[tri[2]].y) / 3.0};
}

double FineMesh::fracture_length(int e) const {
  const auto& a = nodes_[fracture_edges_[e][0]];
  const auto& b = nodes_[fracture_edges_[e][1]];
  return std::hypot(b.x - a.x, b.y - a.y);
}

}  // namespace fracporo
