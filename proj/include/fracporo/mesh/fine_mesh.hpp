#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "fracporo/types.hpp"

namespace fracporo {

/// Sides of the rectangular domain. A node may carry several (corners).
enum BoundarySide : std::uint8_t {
  kNoSide = 0,
  kLeft = 1,
  kRight = 2,
  kTop = 4,
  kBottom = 8,
};

/// Parses "L", "R", "T", "B" (case-insensitive). Returns kNoSide otherwise.
BoundarySide parse_side(std::string_view tag);
char side_letter(BoundarySide side);

struct Box {
  double x0 = 0.0, y0 = 0.0, x1 = 0.0, y1 = 0.0;

  double width() const { return x1 - x0; }
  double height() const { return y1 - y0; }
  double diameter() const;
};

using Triangle = std::array<int, 3>;
using Edge = std::array<int, 2>;

/// Conforming triangulation of a rectangle with a discrete fracture network
/// living on triangle edges.
///
/// Fracture pressure DOFs sit at fine nodes touched by fracture edges; a node
/// shared by several fracture edges (an intersection) carries one DOF.
/// Fracture DOFs are numbered by ascending node id.
class FineMesh {
 public:
  /// Validates every invariant and throws ValidationError on violation.
  /// Clockwise triangles are reoriented; degenerate ones are rejected.
  FineMesh(std::vector<Point> nodes, std::vector<Triangle> triangles,
           std::vector<int> regions, std::vector<Edge> fracture_edges,
           std::vector<std::uint8_t> boundary_tags);

  int num_nodes() const { return static_cast<int>(nodes_.size()); }
  int num_triangles() const { return static_cast<int>(triangles_.size()); }
  int num_fracture_edges() const { return static_cast<int>(fracture_edges_.size()); }
  int num_fracture_nodes() const { return static_cast<int>(fracture_nodes_.size()); }

  const std::vector<Point>& nodes() const { return nodes_; }
  const Point& node(int i) const { return nodes_[i]; }
  const std::vector<Triangle>& triangles() const { return triangles_; }
  const Triangle& triangle(int t) const { return triangles_[t]; }
  const std::vector<int>& regions() const { return regions_; }
  const std::vector<Edge>& fracture_edges() const { return fracture_edges_; }
  const std::vector<std::uint8_t>& boundary_tags() const { return boundary_tags_; }
  std::uint8_t boundary_tag(int node) const { return boundary_tags_[node]; }

  /// fracture DOF -> node id
  const std::vector<int>& fracture_nodes() const { return fracture_nodes_; }
  /// node id -> fracture DOF, or -1
  int fracture_dof(int node) const { return fracture_dof_[node]; }

  const Box& bounds() const { return bounds_; }

  double area(int t) const;
  double total_area() const;
  Point centroid(int t) const;
  double fracture_length(int e) const;

 private:
  std::vector<Point> nodes_;
  std::vector<Triangle> triangles_;
  std::vector<int> regions_;
  std::vector<Edge> fracture_edges_;
  std::vector<std::uint8_t> boundary_tags_;
  std::vector<int> fracture_nodes_;
  std::vector<int> fracture_dof_;
  Box bounds_;
};

}  // namespace fracporo
