#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <sstream>

#include "fracporo/errors.hpp"
#include "fracporo/mesh/coarse_grid.hpp"
#include "fracporo/mesh/mesh_generator.hpp"
#include "fracporo/mesh/mesh_io.hpp"
#include "fracporo/mesh/partition_of_unity.hpp"
#include "fracporo/mesh/patch.hpp"
#include "support/fixtures.hpp"

namespace fracporo {
namespace {

TEST(CoarseGrid, CountsVerticesAndCells) {
  const CoarseGrid g = build_coarse_grid({0, 0, 50, 50}, 10, 10);
  EXPECT_EQ(g.num_vertices(), 121);
  EXPECT_EQ(g.num_cells(), 100);
  EXPECT_EQ(build_coarse_grid({0, 0, 1, 1}, 1, 1).num_vertices(), 4);
  const CoarseGrid h = build_coarse_grid({0, 0, 1, 1}, 2, 3);
  EXPECT_EQ(h.num_vertices(), 12);
  EXPECT_EQ(h.num_cells(), 6);
}

TEST(CoarseGrid, RejectsEmptyGrid) {
  EXPECT_THROW(build_coarse_grid({0, 0, 1, 1}, 0, 3), ConfigError);
}

TEST(CoarseGrid, NumbersLexicographically) {
  const CoarseGrid g = build_coarse_grid({0, 0, 2, 3}, 2, 3);
  EXPECT_EQ(g.vertex_id(1, 2), 7);
  EXPECT_DOUBLE_EQ(g.vertex(7).x, 1.0);
  EXPECT_DOUBLE_EQ(g.vertex(7).y, 2.0);
  const auto cv = g.cell_vertices(g.cell_id(1, 1));
  EXPECT_EQ(cv[0], g.vertex_id(1, 1));
  EXPECT_EQ(cv[2], g.vertex_id(2, 2));
}

TEST(CoarseGrid, HatFunctionsAreNodalAndBilinear) {
  const CoarseGrid g = build_coarse_grid({0, 0, 1, 1}, 1, 1);
  EXPECT_DOUBLE_EQ(g.hat(0, {0, 0}), 1.0);
  EXPECT_DOUBLE_EQ(g.hat(1, {0, 0}), 0.0);
  for (int v = 0; v < 4; ++v) EXPECT_DOUBLE_EQ(g.hat(v, {0.5, 0.5}), 0.25);
  EXPECT_EQ(g.locate({2.0, 0.5}, 1e-9), -1);
}

TEST(FineMesh, ReadsMinimalMesh) {
  std::istringstream in(R"(# unit square
NODES
0 0 0
1 1 0
2 1 1
3 0 1
TRIANGLES
0 0 1 2 0
1 0 2 3 0
BOUNDARY
0 L
0 B
1 R
1 B
2 R
2 T
3 L
3 T
)");
  const FineMesh m = read_fine_mesh(in);
  EXPECT_EQ(m.num_nodes(), 4);
  EXPECT_EQ(m.num_triangles(), 2);
  EXPECT_EQ(m.num_fracture_edges(), 0);
  EXPECT_EQ(m.boundary_tag(0), kLeft | kBottom);
  EXPECT_NEAR(m.total_area(), 1.0, 1e-14);
}

TEST(FineMesh, RejectsFractureEdgeOutsideNodeRange) {
  std::istringstream in("NODES\n0 0 0\n1 1 0\n2 1 1\n3 0 1\nTRIANGLES\n0 0 1 2 0\n1 0 2 3 0\nFRACTURE_EDGES\n0 99\n");
  EXPECT_THROW(read_fine_mesh(in), ValidationError);
}

TEST(FineMesh, RejectsUnknownSection) {
  std::istringstream in("NODES\n0 0 0\n1 1 0\n2 0 1\nTRIANGLES\n0 0 1 2 0\nQUADS\n");
  EXPECT_THROW(read_fine_mesh(in), ParseError);
}

TEST(FineMesh, RejectsMissingTriangles) {
  std::istringstream in("NODES\n0 0 0\n1 1 0\n2 0 1\n");
  EXPECT_THROW(read_fine_mesh(in), ParseError);
}

TEST(FineMesh, RejectsDegenerateTriangle) {
  std::istringstream in("NODES\n0 0 0\n1 1 0\n2 2 0\nTRIANGLES\n0 0 1 2 0\n");
  EXPECT_THROW(read_fine_mesh(in), ValidationError);
}

TEST(FineMesh, ReorientsClockwiseTriangles) {
  std::istringstream in("NODES\n0 0 0\n1 1 0\n2 0 1\nTRIANGLES\n0 0 2 1 0\n"
                         "BOUNDARY\n0 L\n0 B\n1 R\n1 B\n2 L\n2 T\n");
  const FineMesh m = read_fine_mesh(in);
  EXPECT_NEAR(m.area(0), 0.5, 1e-15);
}

TEST(FineMesh, DiagonalFractureHasLengthSqrt2) {
  const FineMesh m = test::two_triangle_square(true);
  ASSERT_EQ(m.num_fracture_edges(), 1);
  EXPECT_NEAR(m.fracture_length(0), std::sqrt(2.0), 1e-15);
  EXPECT_EQ(m.num_fracture_nodes(), 2);
  EXPECT_EQ(m.fracture_dof(0), 0);
  EXPECT_EQ(m.fracture_dof(2), 1);
  EXPECT_EQ(m.fracture_dof(1), -1);
}

TEST(FineMesh, RoundTripsThroughTextFormat) {
  const FineMesh m = test::structured_mesh(6, true, 2.0, 0.2);
  std::stringstream buf;
  write_fine_mesh(buf, m);
  const FineMesh r = read_fine_mesh(buf);
  ASSERT_EQ(r.num_nodes(), m.num_nodes());
  ASSERT_EQ(r.num_triangles(), m.num_triangles());
  EXPECT_EQ(r.fracture_edges(), m.fracture_edges());
  EXPECT_EQ(r.boundary_tags(), m.boundary_tags());
  for (int k = 0; k < m.num_nodes(); ++k) {
    EXPECT_EQ(r.node(k).x, m.node(k).x);
    EXPECT_EQ(r.node(k).y, m.node(k).y);
  }
  EXPECT_EQ(r.triangles(), m.triangles());
}

TEST(MeshGenerator, IntersectingFracturesShareOneDof) {
  LatticeMeshSpec spec;
  spec.cells_x = spec.cells_y = 4;
  spec.fractures = {{0, 2, 4, 2}, {2, 0, 2, 4}};
  const FineMesh m = generate_lattice_mesh(spec);
  EXPECT_EQ(m.num_fracture_edges(), 8);
  EXPECT_EQ(m.num_fracture_nodes(), 9);
}

TEST(MeshGenerator, DiagonalFractureFollowsTriangleEdges) {
  LatticeMeshSpec spec;
  spec.cells_x = spec.cells_y = 3;
  spec.fractures = {{0, 0, 3, 3}, {0, 3, 1, 2}};
  const FineMesh m = generate_lattice_mesh(spec);
  EXPECT_EQ(m.num_fracture_edges(), 4);
  spec.fractures.push_back({0, 1, 1, 0});
  spec.fractures.push_back({0, 0, 1, 1});
  spec.fractures.push_back({1, 0, 0, 1});
  EXPECT_THROW(generate_lattice_mesh(spec), ConfigError);
}

TEST(MeshGenerator, AreaSumsToDomain) {
  const FineMesh m = test::structured_mesh(20, true, 50.0, 0.3);
  EXPECT_NEAR(m.total_area(), 2500.0, 2500.0 * 1e-10);
}

TEST(MeshGenerator, ReferenceNetworkIsValidOnCoarseLattice) {
  LatticeMeshSpec spec;
  spec.cells_x = spec.cells_y = 32;
  spec.fractures = reference_fracture_network(32);
  const FineMesh m = generate_lattice_mesh(spec);
  EXPECT_GT(m.num_fracture_edges(), 40);
}

class PatchTest : public ::testing::Test {
 protected:
  FineMesh mesh = test::structured_mesh(8, true, 1.0, 0.2, 2);
  CoarseGrid grid = build_coarse_grid(mesh.bounds(), 4, 4);
  std::vector<Patch> patches = build_patches(grid, mesh);
};

TEST_F(PatchTest, OnePatchPerVertexWithStencilSizes) {
  ASSERT_EQ(static_cast<int>(patches.size()), 25);
  EXPECT_EQ(patches[grid.vertex_id(0, 0)].cells.size(), 1u);
  EXPECT_EQ(patches[grid.vertex_id(2, 0)].cells.size(), 2u);
  EXPECT_EQ(patches[grid.vertex_id(2, 2)].cells.size(), 4u);
}

TEST_F(PatchTest, NodeMultiplicityFollowsCoarseLocation) {
  // Cell interiors lie in 4 patches, coarse edges in up to 6, coarse vertices in up to 9.
  std::vector<int> count(mesh.num_nodes(), 0);
  for (const auto& p : patches)
    for (int g : p.scope.nodes) ++count[g];
  auto on_line = [](double v) { return std::abs(v * 4.0 - std::round(v * 4.0)) < 1e-12; };
  for (int k = 0; k < mesh.num_nodes(); ++k) {
    EXPECT_GE(count[k], 1);
    EXPECT_LE(count[k], 9);
    if (!on_line(mesh.node(k).x) && !on_line(mesh.node(k).y)) EXPECT_EQ(count[k], 4) << "node " << k;
  }
}

TEST_F(PatchTest, PartitionOfUnitySumsToOne) {
  const PartitionOfUnity pou = partition_of_unity(grid, mesh, patches);
  EXPECT_LT(pou.max_sum_deviation(mesh, patches), 1e-12);
  // A fine node on a coarse vertex sees chi = 1 there and 0 elsewhere.
  const int centre = grid.vertex_id(2, 2);
  const Point pv = grid.vertex(centre);
  for (int k = 0; k < mesh.num_nodes(); ++k) {
    if (std::abs(mesh.node(k).x - pv.x) > 1e-12 || std::abs(mesh.node(k).y - pv.y) > 1e-12) continue;
    for (int l = 0; l < static_cast<int>(patches.size()); ++l) {
      const int local = patches[l].scope.node_local[k];
      if (local < 0) continue;
      EXPECT_NEAR(pou.node_values(l)[local], l == centre ? 1.0 : 0.0, 1e-14);
    }
  }
}

TEST(PartitionOfUnity, CellCentreGetsQuarterFromEachVertex) {
  const FineMesh mesh = test::structured_mesh(2);
  const CoarseGrid grid = build_coarse_grid(mesh.bounds(), 1, 1);
  const auto patches = build_patches(grid, mesh);
  const PartitionOfUnity pou = partition_of_unity(grid, mesh, patches);
  const int centre = 4;  // node (1, 1) of the 3x3 lattice
  for (int l = 0; l < 4; ++l) EXPECT_NEAR(pou.node_values(l)[patches[l].scope.node_local[centre]], 0.25, 1e-15);
}

TEST(Patches, RejectMeshNotResolvingCoarseGrid) {
  const FineMesh mesh = test::structured_mesh(3);
  const CoarseGrid grid = build_coarse_grid(mesh.bounds(), 2, 2);
  EXPECT_THROW(build_patches(grid, mesh), GeometryError);
}

}  // namespace
}  // namespace fracporo
