#include "support/fixtures.hpp"

#include "fracporo/mesh/mesh_generator.hpp"

namespace fracporo::test {

FineMesh two_triangle_square(bool diagonal_fracture) {
  std::vector<Point> nodes{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  std::vector<Triangle> tris{{0, 1, 2}, {0, 2, 3}};
  std::vector<std::uint8_t> tags{kLeft | kBottom, kRight | kBottom, kRight | kTop, kLeft | kTop};
  std::vector<Edge> fractures;
  if (diagonal_fracture) fractures.push_back({0, 2});
  return FineMesh(std::move(nodes), std::move(tris), {}, std::move(fractures), std::move(tags));
}

FineMesh structured_mesh(int cells, bool fractured, double size, double jitter, int lock_every) {
  LatticeMeshSpec spec;
  spec.extents = {0.0, 0.0, size, size};
  spec.cells_x = spec.cells_y = cells;
  spec.jitter = jitter;
  spec.lock_every = lock_every;
  spec.seed = 7;
  if (fractured) {
    spec.fractures.push_back({cells / 4, cells / 2, 3 * cells / 4, cells / 2});
    spec.fractures.push_back({cells / 2 + 1, cells / 4, cells / 2 + 1, 3 * cells / 4});
  }
  return generate_lattice_mesh(spec);
}

PoroModel bulk_model(const FineMesh& mesh, double storage, double permeability, double biot, double youngs,
                     double poisson) {
  PoroModel model;
  ContinuumSpec m;
  m.name = "m";
  m.storage.assign(mesh.num_triangles(), storage);
  m.permeability.assign(mesh.num_triangles(), permeability);
  m.biot = biot;
  model.continua.push_back(std::move(m));
  model.elasticity.youngs.assign(mesh.num_triangles(), youngs);
  model.elasticity.poisson = poisson;
  return model;
}

namespace {

ContinuumSpec fracture_spec(const FineMesh& mesh, double permeability) {
  ContinuumSpec f;
  f.name = "f";
  f.support = Support::kFracture;
  f.storage.assign(mesh.num_fracture_edges(), 0.01);
  f.permeability.assign(mesh.num_fracture_edges(), permeability);
  return f;
}

}  // namespace

PoroModel fractured_model(const FineMesh& mesh, double eta, double bulk_permeability, double fracture_permeability) {
  PoroModel model = bulk_model(mesh, 0.1, bulk_permeability, 0.1);
  model.continua.push_back(fracture_spec(mesh, fracture_permeability));
  model.exchanges.push_back({0, 1, std::vector<double>(mesh.num_fracture_edges(), eta)});
  return model;
}

PoroModel triple_model(const FineMesh& mesh, double eta) {
  PoroModel model = bulk_model(mesh, 0.1, 1.0, 0.1);
  ContinuumSpec second = model.continua[0];
  second.name = "2";
  for (auto& k : second.permeability) k = 5.0;
  model.continua.push_back(second);
  model.continua.push_back(fracture_spec(mesh, 10.0));
  const auto t = static_cast<std::size_t>(mesh.num_triangles());
  const auto e = static_cast<std::size_t>(mesh.num_fracture_edges());
  model.exchanges.push_back({0, 1, std::vector<double>(t, eta)});
  model.exchanges.push_back({0, 2, std::vector<double>(e, eta)});
  model.exchanges.push_back({1, 2, std::vector<double>(e, eta)});
  return model;
}

std::string data_path(const std::string& relative) { return std::string(FRACPORO_DATA_DIR) + "/" + relative; }

}  // namespace fracporo::test
