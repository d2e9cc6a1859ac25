#pragma once

#include <vector>

#include "fracporo/mesh/coarse_grid.hpp"
#include "fracporo/mesh/scope.hpp"

namespace fracporo {

/// Local domain omega_l: the coarse cells sharing coarse vertex l.
struct Patch {
  int vertex = -1;
  std::vector<int> cells;
  Box box;
  MeshScope scope;
  std::vector<char> node_on_boundary;      // per local node, on the boundary of omega_l
  std::vector<char> fracture_on_boundary;  // per local fracture DOF

  int num_nodes() const { return scope.num_nodes(); }
  int num_fracture() const { return scope.num_fracture(); }
  std::vector<int> boundary_nodes() const;     // local indices
  std::vector<int> boundary_fracture() const;  // local indices
};

/// One patch per coarse vertex, in vertex order. The fine mesh must resolve
/// the coarse grid: every triangle lies in the closure of one coarse cell.
std::vector<Patch> build_patches(const CoarseGrid& grid, const FineMesh& mesh);

/// Membership tolerance shared by all point-in-cell tests.
double geometry_tolerance(const CoarseGrid& grid);

}  // namespace fracporo
