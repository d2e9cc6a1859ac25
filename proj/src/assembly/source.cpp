#include "fracporo/assembly/source.hpp"

namespace fracporo {

Vec assemble_manufactured_source(const ScalarField& f, const FineMesh& mesh, const MeshScope& scope) {
  // Interior points with barycentric (2/3, 1/6, 1/6) and permutations, weight 1/3.
  static constexpr double kMajor = 2.0 / 3.0, kMinor = 1.0 / 6.0;
  Vec load = Vec::Zero(scope.num_nodes());
  for (int t : scope.triangles) {
    const auto& tri = mesh.triangle(t);
    const Point& a = mesh.node(tri[0]);
    const Point& b = mesh.node(tri[1]);
    const Point& c = mesh.node(tri[2]);
    const double w = mesh.area(t) / 3.0;
    for (int q = 0; q < 3; ++q) {
      const double bary[3] = {q == 0 ? kMajor : kMinor, q == 1 ? kMajor : kMinor, q == 2 ? kMajor : kMinor};
      const Point x{bary[0] * a.x + bary[1] * b.x + bary[2] * c.x, bary[0] * a.y + bary[1] * b.y + bary[2] * c.y};
      const double fx = f(x);
      for (int k = 0; k < 3; ++k) load[scope.node_local[tri[k]]] += w * fx * bary[k];
    }
  }
  return load;
}

Vec assemble_manufactured_source(const ScalarField& f, const FineMesh& mesh) {
  return assemble_manufactured_source(f, mesh, MeshScope::whole(mesh));
}

Vec assemble_vector_source(const ScalarField& fx, const ScalarField& fy, const FineMesh& mesh) {
  const MeshScope scope = MeshScope::whole(mesh);
  const Vec lx = assemble_manufactured_source(fx, mesh, scope);
  const Vec ly = assemble_manufactured_source(fy, mesh, scope);
  Vec out(2 * lx.size());
  for (Eigen::Index k = 0; k < lx.size(); ++k) {
    out[2 * k] = lx[k];
    out[2 * k + 1] = ly[k];
  }
  return out;
}

}  // namespace fracporo
