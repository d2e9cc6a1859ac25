#pragma once

#include <vector>

#include "fracporo/mesh/fine_mesh.hpp"

namespace fracporo {

/// A sub-mesh used for assembly: a set of triangles and fracture edges plus
/// global->local numbering of the nodes and fracture DOFs they touch.
struct MeshScope {
  std::vector<int> triangles;
  std::vector<int> fracture_edges;
  std::vector<int> node_local;      // size num_nodes of the mesh, -1 outside
  std::vector<int> fracture_local;  // size num_fracture_nodes of the mesh, -1 outside
  std::vector<int> nodes;           // local -> global node
  std::vector<int> fracture_dofs;   // local -> global fracture DOF

  int num_nodes() const { return static_cast<int>(nodes.size()); }
  int num_fracture() const { return static_cast<int>(fracture_dofs.size()); }

  static MeshScope whole(const FineMesh& mesh);
  /// Local numbering follows ascending global ids.
  static MeshScope from_elements(const FineMesh& mesh, std::vector<int> triangles, std::vector<int> fracture_edges);
};

}  // namespace fracporo
