// Writes lattice meshes with an embedded fracture network.

#include <iostream>

#include "CLI11.hpp"
#include "fracporo/errors.hpp"
#include "fracporo/mesh/mesh_generator.hpp"
#include "fracporo/mesh/mesh_io.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Generate a triangulated lattice mesh for fracporo"};
  int cells = 110;
  int lock_every = 11;
  double size = 50.0;
  double jitter = 0.08;
  std::uint64_t seed = 0;
  bool fractures = true;
  std::string out;
  app.add_option("--cells", cells, "lattice cells per side")->check(CLI::PositiveNumber);
  app.add_option("--lock-every", lock_every, "keep every k-th lattice line straight (0: none)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--size", size, "side length of the square domain")->check(CLI::PositiveNumber);
  app.add_option("--jitter", jitter, "node perturbation as a fraction of the lattice step")->check(CLI::Range(0.0, 0.3));
  app.add_option("--seed", seed, "seed of the diagonals and the jitter");
  app.add_flag("--fractures,!--no-fractures", fractures, "embed the reference fracture network");
  app.add_option("--out", out, "output mesh file")->required();
  CLI11_PARSE(app, argc, argv);

  try {
    fracporo::LatticeMeshSpec spec;
    spec.extents = {0.0, 0.0, size, size};
    spec.cells_x = spec.cells_y = cells;
    spec.lock_every = lock_every;
    spec.jitter = jitter;
    spec.seed = seed;
    if (fractures) spec.fractures = fracporo::reference_fracture_network(cells);
    const fracporo::FineMesh mesh = fracporo::generate_lattice_mesh(spec);
    fracporo::save_fine_mesh(out, mesh);
    std::cout << out << ": " << mesh.num_nodes() << " nodes, " << mesh.num_triangles() << " triangles, "
              << mesh.num_fracture_edges() << " fracture edges\n";
  } catch (const fracporo::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
