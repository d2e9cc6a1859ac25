#include "fracporo/mesh/patch.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fracporo/errors.hpp"

namespace fracporo {

namespace {

bool inside(const Box& b, const Point& p, double tol) {
  return p.x >= b.x0 - tol && p.x <= b.x1 + tol && p.y >= b.y0 - tol && p.y <= b.y1 + tol;
}

bool on_box_boundary(const Box& b, const Point& p, double tol) {
  return std::abs(p.x - b.x0) <= tol || std::abs(p.x - b.x1) <= tol || std::abs(p.y - b.y0) <= tol ||
         std::abs(p.y - b.y1) <= tol;
}

}  // namespace

double geometry_tolerance(const CoarseGrid& grid) { return 1e-9 * grid.extents().diameter(); }

std::vector<int> Patch::boundary_nodes() const {
  std::vector<int> out;
  for (int i = 0; i < num_nodes(); ++i)
    if (node_on_boundary[i]) out.push_back(i);
  return out;
}

std::vector<int> Patch::boundary_fracture() const {
  std::vector<int> out;
  for (int i = 0; i < num_fracture(); ++i)
    if (fracture_on_boundary[i]) out.push_back(i);
  return out;
}

std::vector<Patch> build_patches(const CoarseGrid& grid, const FineMesh& mesh) {
  const double tol = geometry_tolerance(grid);
  for (int i = 0; i < mesh.num_nodes(); ++i)
    if (grid.locate(mesh.node(i), tol) < 0)
      throw GeometryError("fine node " + std::to_string(i) + " lies outside the coarse grid domain");

  std::vector<std::vector<int>> cell_triangles(grid.num_cells());
  for (int t = 0; t < mesh.num_triangles(); ++t) {
    const int c = grid.locate(mesh.centroid(t), tol);
    const Box cb = grid.cell_box(c);
    for (int v : mesh.triangle(t))
      if (!inside(cb, mesh.node(v), tol))
        throw GeometryError("triangle " + std::to_string(t) + " crosses a coarse cell boundary; the fine mesh must resolve the coarse grid");
    cell_triangles[c].push_back(t);
  }

  std::vector<Patch> patches(grid.num_vertices());
  for (int l = 0; l < grid.num_vertices(); ++l) {
    Patch& p = patches[l];
    p.vertex = l;
    p.cells = grid.vertex_cells(l);
    p.box = grid.patch_box(l);
    std::vector<int> tris;
    for (int c : p.cells) tris.insert(tris.end(), cell_triangles[c].begin(), cell_triangles[c].end());
    std::sort(tris.begin(), tris.end());
    std::vector<int> fedges;
    for (int e = 0; e < mesh.num_fracture_edges(); ++e) {
      const auto& fe = mesh.fracture_edges()[e];
      if (inside(p.box, mesh.node(fe[0]), tol) && inside(p.box, mesh.node(fe[1]), tol)) fedges.push_back(e);
    }
    p.scope = MeshScope::from_elements(mesh, std::move(tris), std::move(fedges));
    p.node_on_boundary.resize(p.scope.num_nodes());
    for (int i = 0; i < p.scope.num_nodes(); ++i)
      p.node_on_boundary[i] = on_box_boundary(p.box, mesh.node(p.scope.nodes[i]), tol);
    p.fracture_on_boundary.resize(p.scope.num_fracture());
    for (int i = 0; i < p.scope.num_fracture(); ++i)
      p.fracture_on_boundary[i] =
          on_box_boundary(p.box, mesh.node(mesh.fracture_nodes()[p.scope.fracture_dofs[i]]), tol);
  }
  return patches;
}

}  // namespace fracporo
