#include "fracporo/mesh/scope.hpp"

#include <algorithm>
#include <numeric>

namespace fracporo {

MeshScope MeshScope::whole(const FineMesh& mesh) {
  MeshScope s;
  s.triangles.resize(mesh.num_triangles());
  std::iota(s.triangles.begin(), s.triangles.end(), 0);
  s.fracture_edges.resize(mesh.num_fracture_edges());
  std::iota(s.fracture_edges.begin(), s.fracture_edges.end(), 0);
  s.node_local.resize(mesh.num_nodes());
  std::iota(s.node_local.begin(), s.node_local.end(), 0);
  s.nodes = s.node_local;
  s.fracture_local.resize(mesh.num_fracture_nodes());
  std::iota(s.fracture_local.begin(), s.fracture_local.end(), 0);
  s.fracture_dofs = s.fracture_local;
  return s;
}

MeshScope MeshScope::from_elements(const FineMesh& mesh, std::vector<int> triangles, std::vector<int> fracture_edges) {
  MeshScope s;
  s.triangles = std::move(triangles);
  s.fracture_edges = std::move(fracture_edges);
  std::vector<char> used(mesh.num_nodes(), 0);
  for (int t : s.triangles)
    for (int v : mesh.triangle(t)) used[v] = 1;
  std::vector<char> used_frac(mesh.num_fracture_nodes(), 0);
  for (int e : s.fracture_edges)
    for (int v : mesh.fracture_edges()[e]) {
      used[v] = 1;
      used_frac[mesh.fracture_dof(v)] = 1;
    }
  s.node_local.assign(mesh.num_nodes(), -1);
  for (int i = 0; i < mesh.num_nodes(); ++i)
    if (used[i]) {
      s.node_local[i] = static_cast<int>(s.nodes.size());
      s.nodes.push_back(i);
    }
  s.fracture_local.assign(mesh.num_fracture_nodes(), -1);
  for (int f = 0; f < mesh.num_fracture_nodes(); ++f)
    if (used_frac[f]) {
      s.fracture_local[f] = static_cast<int>(s.fracture_dofs.size());
      s.fracture_dofs.push_back(f);
    }
  return s;
}

}  // namespace fracporo
