#pragma once

#include <cstdint>
#include <vector>

#include "fracporo/mesh/fine_mesh.hpp"

namespace fracporo {

/// Straight fracture on the generator lattice. Must be horizontal, vertical
/// or at 45 degrees; endpoints are lattice indices.
struct LatticeFracture {
  int i0, j0, i1, j1;
};

/// Triangulated lattice with per-cell diagonals and optional node jitter.
///
/// Cells crossed by a diagonal fracture get the matching diagonal; other
/// cells pick one from a hash of (seed, cell). Interior nodes off the lock
/// lines (every `lock_every`-th lattice line, used to keep coarse-cell edges
/// straight) and off fractures are displaced by up to `jitter * h` per axis.
struct LatticeMeshSpec {
  Box extents{0.0, 0.0, 1.0, 1.0};
  int cells_x = 10;
  int cells_y = 10;
  int lock_every = 0;
  double jitter = 0.0;
  std::uint64_t seed = 0;
  std::vector<LatticeFracture> fractures;
};

FineMesh generate_lattice_mesh(const LatticeMeshSpec& spec);

/// Reference fracture network laid out on a 110x110 lattice and rescaled to
/// `cells` lattice cells per side. Contains horizontal, vertical and diagonal
/// fractures with several intersections and one fracture reaching the left
/// boundary.
std::vector<LatticeFracture> reference_fracture_network(int cells);

}  // namespace fracporo
