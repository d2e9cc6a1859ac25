#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <Eigen/SparseCholesky>
#include <cmath>

#include "fracporo/assembly/assemble.hpp"
#include "fracporo/assembly/boundary.hpp"
#include "fracporo/assembly/element.hpp"
#include "fracporo/assembly/operators.hpp"
#include "fracporo/assembly/source.hpp"
#include "fracporo/errors.hpp"
#include "fracporo/mesh/mesh_generator.hpp"
#include "fracporo/mesh/scope.hpp"
#include "support/fixtures.hpp"

namespace fracporo {
namespace {

DenseMat dense(const SpMat& a) { return DenseMat(a); }

FineMesh unit_right_triangle() {
  return FineMesh({{0, 0}, {1, 0}, {0, 1}}, {{0, 1, 2}}, {}, {}, {kLeft | kBottom, kBottom, kLeft});
}

// Displacement field sampled at the nodes, interleaved.
Vec nodal_displacement(const FineMesh& m, double (*ux)(const Point&), double (*uy)(const Point&)) {
  Vec u(2 * m.num_nodes());
  for (int k = 0; k < m.num_nodes(); ++k) {
    u[2 * k] = ux(m.node(k));
    u[2 * k + 1] = uy(m.node(k));
  }
  return u;
}

TEST(Element, StiffnessOfUnitRightTriangle) {
  const auto t = p1_triangle({0, 0}, {1, 0}, {0, 1});
  const Mat3 k = p1_stiffness(t, 1.0);
  const double expected[3][3] = {{1, -0.5, -0.5}, {-0.5, 0.5, 0}, {-0.5, 0, 0.5}};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) EXPECT_NEAR(k[a][b], expected[a][b], 1e-15);
}

TEST(Element, MassOfUnitRightTriangle) {
  const auto t = p1_triangle({0, 0}, {1, 0}, {0, 1});
  const Mat3 m = p1_mass(t, 1.0);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) EXPECT_NEAR(m[a][b], (a == b ? 2.0 : 1.0) / 24.0, 1e-16);
}

TEST(Element, EdgeMatrices) {
  const Mat2 k = edge_stiffness(0.5, 1.0);
  EXPECT_DOUBLE_EQ(k[0][0], 2.0);
  EXPECT_DOUBLE_EQ(k[0][1], -2.0);
  const Mat2 m = edge_mass(1.0, 1.0);
  EXPECT_DOUBLE_EQ(m[0][0], 2.0 / 6.0);
  EXPECT_DOUBLE_EQ(m[0][1], 1.0 / 6.0);
}

TEST(Element, PlaneStrainLameParameters) {
  const Lame l = lame_parameters(1.0, 0.3);
  EXPECT_NEAR(l.lambda, 0.5769230769, 1e-9);
  EXPECT_NEAR(l.mu, 0.3846153846, 1e-9);
  EXPECT_THROW(lame_parameters(1.0, 0.5), DataError);
  EXPECT_THROW(lame_parameters(0.0, 0.3), DataError);
}

TEST(Stiffness, MatchesElementOnSingleTriangle) {
  const FineMesh m = unit_right_triangle();
  const PoroModel model = test::bulk_model(m, 0.0, 1.0, 0.0);
  const DenseMat a = dense(assemble_stiffness(model.continua[0], m, MeshScope::whole(m)));
  EXPECT_NEAR(a(0, 0), 1.0, 1e-15);
  EXPECT_NEAR(a(1, 2), 0.0, 1e-15);
}

TEST(Stiffness, ConstantsInKernelAndLinearInCoefficient) {
  const FineMesh m = test::structured_mesh(6, false, 3.0, 0.25);
  const PoroModel one = test::bulk_model(m, 0.0, 1.0, 0.0);
  PoroModel ten = one;
  for (auto& k : ten.continua[0].permeability) k *= 10.0;
  const SpMat a1 = assemble_stiffness(one.continua[0], m, MeshScope::whole(m));
  const SpMat a10 = assemble_stiffness(ten.continua[0], m, MeshScope::whole(m));
  EXPECT_LT((a1 * Vec::Ones(m.num_nodes())).cwiseAbs().maxCoeff(), 1e-13);
  EXPECT_LT((dense(a10) - 10.0 * dense(a1)).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LT((dense(a1) - dense(a1).transpose()).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Stiffness, RejectsNonPositivePermeability) {
  const FineMesh m = test::two_triangle_square();
  PoroModel model = test::bulk_model(m, 0.0, 1.0, 0.0);
  model.continua[0].permeability[1] = 0.0;
  EXPECT_THROW(assemble_stiffness(model.continua[0], m, MeshScope::whole(m)), DataError);
}

TEST(Stiffness, PoissonReproducesLinearSolution) {
  const FineMesh m = test::structured_mesh(8, false, 1.0, 0.3);
  const PoroModel model = test::bulk_model(m, 0.0, 2.5, 0.0);
  const SpMat a = assemble_stiffness(model.continua[0], m, MeshScope::whole(m));
  auto exact = [](const Point& p) { return 1.0 + 2.0 * p.x - 3.0 * p.y; };
  ConstraintSet cs;
  std::vector<double> values;
  for (int k = 0; k < m.num_nodes(); ++k)
    if (m.boundary_tag(k)) {
      cs.dofs.push_back(k);
      values.push_back(exact(m.node(k)));
    }
  cs.values = Eigen::Map<Vec>(values.data(), static_cast<Eigen::Index>(values.size()));
  const ConstrainedMatrix cm = apply_boundary_conditions(a, cs);
  Vec rhs = Vec::Zero(m.num_nodes());
  constrain_rhs(cm, cs, cs.values, rhs);
  Eigen::SimplicialLDLT<SpMat> solver(cm.matrix);
  const Vec u = solver.solve(rhs);
  for (int k = 0; k < m.num_nodes(); ++k) EXPECT_NEAR(u[k], exact(m.node(k)), 1e-10);
}

class FractureLine : public ::testing::Test {
 protected:
  // 2x2 lattice on [0,2]^2; a horizontal fracture from (0,1) to (2,1).
  FineMesh mesh = [] {
    LatticeMeshSpec spec;
    spec.extents = {0, 0, 2, 2};
    spec.cells_x = spec.cells_y = 2;
    spec.fractures = {{0, 1, 2, 1}};
    return generate_lattice_mesh(spec);
  }();
  PoroModel model = test::fractured_model(mesh, 1.0, 1.0, 1.0);
};

TEST_F(FractureLine, StiffnessIsTridiagonalChain) {
  ASSERT_EQ(mesh.num_fracture_nodes(), 3);
  const DenseMat a = dense(assemble_fracture_stiffness(model.continua[1], mesh, MeshScope::whole(mesh)));
  DenseMat expected(3, 3);
  expected << 1, -1, 0, -1, 2, -1, 0, -1, 1;
  EXPECT_LT((a - expected).cwiseAbs().maxCoeff(), 1e-15);
}

TEST_F(FractureLine, BulkFractureExchangeIsEdgeMass) {
  const ExchangeBlocks q = assemble_exchange(0, 1, model, model.exchanges[0], mesh, MeshScope::whole(mesh));
  const DenseMat off = dense(q.off);
  ASSERT_EQ(off.rows(), mesh.num_nodes());
  ASSERT_EQ(off.cols(), 3);
  // Fracture DOFs 0, 1, 2 sit at nodes 3, 4, 5.
  EXPECT_NEAR(off(3, 0), 2.0 / 6.0, 1e-15);
  EXPECT_NEAR(off(3, 1), 1.0 / 6.0, 1e-15);
  EXPECT_NEAR(off(4, 1), 4.0 / 6.0, 1e-15);
  EXPECT_NEAR(off(0, 0), 0.0, 1e-15);
  const DenseMat df = dense(q.diag_second);
  EXPECT_NEAR(df(0, 0), 2.0 / 6.0, 1e-15);
  EXPECT_NEAR(df(0, 1), 1.0 / 6.0, 1e-15);
  EXPECT_NEAR(dense(q.diag_first)(4, 4), 4.0 / 6.0, 1e-15);
  // Exchange of a common constant pressure is balanced.
  Vec pm = Vec::Ones(mesh.num_nodes()), pf = Vec::Ones(3);
  EXPECT_LT((q.diag_first * pm - q.off * pf).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LT((q.diag_second * pf - q.off.transpose() * pm).cwiseAbs().maxCoeff(), 1e-15);
}

TEST_F(FractureLine, FractureCouplingMustVanish) {
  model.continua[1].biot = 0.2;
  EXPECT_THROW(assemble_coupling(model.continua[1], mesh, MeshScope::whole(mesh)), ConfigError);
}

TEST(Mass, TotalsAndZeroStorage) {
  const FineMesh m = test::structured_mesh(5, false, 1.0, 0.2);
  const PoroModel model = test::bulk_model(m, 0.1, 1.0, 0.0);
  const SpMat mass = assemble_mass(model.continua[0], m, MeshScope::whole(m));
  const Vec one = Vec::Ones(m.num_nodes());
  EXPECT_NEAR(one.dot(mass * one), 0.1, 1e-14);
  const PoroModel none = test::bulk_model(m, 0.0, 1.0, 0.0);
  EXPECT_EQ(dense(assemble_mass(none.continua[0], m, MeshScope::whole(m))).cwiseAbs().maxCoeff(), 0.0);
}

TEST(Exchange, BulkBulkEqualsWeightedMass) {
  const FineMesh m = test::structured_mesh(4);
  PoroModel model = test::bulk_model(m, 0.1, 1.0, 0.0);
  model.continua.push_back(model.continua[0]);
  model.continua[1].name = "2";
  const ExchangeSpec unit{0, 1, std::vector<double>(m.num_triangles(), 1.0)};
  const ExchangeBlocks q = assemble_exchange(0, 1, model, unit, m, MeshScope::whole(m));
  const DenseMat mass = dense(assemble_plain_mass(Support::kBulk, m, MeshScope::whole(m)));
  EXPECT_LT((dense(q.off) - mass).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LT((dense(q.diag_first) - mass).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LT((dense(q.diag_second) - mass).cwiseAbs().maxCoeff(), 1e-15);
  const ExchangeSpec zero{0, 1, std::vector<double>(m.num_triangles(), 0.0)};
  EXPECT_EQ(dense(assemble_exchange(0, 1, model, zero, m, MeshScope::whole(m)).off).cwiseAbs().maxCoeff(), 0.0);
}

TEST(Coupling, KernelAndDilation) {
  const FineMesh m = test::structured_mesh(4, false, 1.0, 0.2);
  const PoroModel model = test::bulk_model(m, 0.1, 1.0, 1.0);
  const SpMat d = assemble_coupling(model.continua[0], m, MeshScope::whole(m));
  const Vec translation = nodal_displacement(m, [](const Point&) { return 1.0; }, [](const Point&) { return -2.0; });
  EXPECT_LT((d * translation).cwiseAbs().maxCoeff(), 1e-14);
  const Vec dilation = nodal_displacement(m, [](const Point& p) { return p.x; }, [](const Point& p) { return p.y; });
  EXPECT_NEAR(Vec::Ones(m.num_nodes()).dot(d * dilation), 2.0, 1e-13);
  const PoroModel passive = test::bulk_model(m, 0.1, 1.0, 0.0);
  EXPECT_EQ(dense(assemble_coupling(passive.continua[0], m, MeshScope::whole(m))).cwiseAbs().maxCoeff(), 0.0);
}

TEST(Elasticity, RigidBodyKernel) {
  const FineMesh m = test::structured_mesh(5, false, 2.0, 0.3);
  PoroModel model = test::bulk_model(m, 0.1, 1.0, 0.0, 1.0, 0.3);
  for (int t = 0; t < m.num_triangles(); ++t) model.elasticity.youngs[t] = 1.0 + t % 7;
  const SpMat a = assemble_elasticity(model.elasticity, m, MeshScope::whole(m));
  const Vec tx = nodal_displacement(m, [](const Point&) { return 1.0; }, [](const Point&) { return 0.0; });
  const Vec ty = nodal_displacement(m, [](const Point&) { return 0.0; }, [](const Point&) { return 1.0; });
  const Vec rot = nodal_displacement(m, [](const Point& p) { return -p.y; }, [](const Point& p) { return p.x; });
  const double scale = dense(a).cwiseAbs().maxCoeff();
  EXPECT_LT((a * tx).cwiseAbs().maxCoeff(), 1e-13 * scale);
  EXPECT_LT((a * ty).cwiseAbs().maxCoeff(), 1e-13 * scale);
  EXPECT_LT((a * rot).cwiseAbs().maxCoeff(), 1e-13 * scale);
}

TEST(Boundary, RollersMakeElasticitySpd) {
  const FineMesh m = test::structured_mesh(4);
  const PoroModel model = test::bulk_model(m, 0.1, 1.0, 0.1);
  const BiotOperators ops = assemble_operators(model, m);
  BoundaryConditions bc;
  bc.displacement = BoundaryConditions::rollers();
  const ConstraintSet cs = build_constraints(bc, model, m, ops.layout);
  ConstraintSet local;
  for (int k = 0; k < cs.size(); ++k) local.dofs.push_back(cs.dofs[k] - ops.layout.displacement_offset);
  local.values = cs.values;
  const ConstrainedMatrix cm = apply_boundary_conditions(ops.elasticity, local);
  Eigen::SimplicialLLT<SpMat> llt(cm.matrix);
  EXPECT_EQ(llt.info(), Eigen::Success);
  // Unconstrained elasticity is singular.
  Eigen::SelfAdjointEigenSolver<DenseMat> eig(dense(ops.elasticity));
  EXPECT_LT(eig.eigenvalues()[2], 1e-12 * eig.eigenvalues().maxCoeff());
}

TEST(Boundary, PressureDirichletMakesFlowSpd) {
  const FineMesh m = test::structured_mesh(4);
  const PoroModel model = test::bulk_model(m, 0.0, 1.0, 0.0);
  const BiotOperators ops = assemble_operators(model, m);
  BoundaryConditions bc;
  bc.pressure.push_back({0, kLeft, 0.0});
  const ConstraintSet cs = build_constraints(bc, model, m, ops.layout);
  EXPECT_EQ(cs.size(), 5);
  Eigen::SimplicialLLT<SpMat> llt(apply_boundary_conditions(ops.stiffness[0], cs).matrix);
  EXPECT_EQ(llt.info(), Eigen::Success);
}

TEST(Boundary, RejectsConflictsAndEmptySelections) {
  const FineMesh m = test::two_triangle_square();
  const PoroModel model = test::bulk_model(m, 0.1, 1.0, 0.1);
  const BiotOperators ops = assemble_operators(model, m);
  BoundaryConditions clash;
  clash.pressure = {{0, kLeft, 0.0}, {0, kBottom, 1.0}};
  EXPECT_THROW(build_constraints(clash, model, m, ops.layout), ConfigError);
  BoundaryConditions unknown;
  unknown.pressure = {{3, kLeft, 0.0}};
  EXPECT_THROW(build_constraints(unknown, model, m, ops.layout), ConfigError);
  BoundaryConditions sideless;
  sideless.pressure = {{0, 0, 0.0}};
  EXPECT_THROW(build_constraints(sideless, model, m, ops.layout), ConfigError);
  BoundaryConditions bad_component;
  bad_component.displacement = {{2, kLeft, 0.0}};
  EXPECT_THROW(build_constraints(bad_component, model, m, ops.layout), ConfigError);
}

TEST(Boundary, FractureAwayFromSideGetsNoConstraint) {
  const FineMesh inner = test::structured_mesh(8, true);
  const PoroModel fm = test::fractured_model(inner, 1.0);
  const BiotOperators ops = assemble_operators(fm, inner);
  BoundaryConditions left;
  left.pressure = {{1, kLeft, 0.0}};
  EXPECT_TRUE(build_constraints(left, fm, inner, ops.layout).empty());
}

TEST(Boundary, LiftMovesKnownValuesToRhs) {
  SpMat a(3, 3);
  a.insert(0, 0) = 2;
  a.insert(0, 1) = -1;
  a.insert(1, 0) = -1;
  a.insert(1, 1) = 2;
  a.insert(1, 2) = -1;
  a.insert(2, 1) = -1;
  a.insert(2, 2) = 2;
  ConstraintSet cs{{2}, Vec::Constant(1, 4.0)};
  const ConstrainedMatrix cm = apply_boundary_conditions(a, cs);
  Vec rhs = Vec::Zero(3);
  constrain_rhs(cm, cs, cs.values, rhs);
  EXPECT_DOUBLE_EQ(rhs[1], 4.0);
  EXPECT_DOUBLE_EQ(rhs[2], 4.0);
  EXPECT_DOUBLE_EQ(DenseMat(cm.matrix)(2, 2), 1.0);
  EXPECT_DOUBLE_EQ(DenseMat(cm.matrix)(1, 2), 0.0);
}

TEST(Source, QuadratureIntegratesPolynomials) {
  const FineMesh m = test::structured_mesh(4, false, 1.0, 0.25);
  EXPECT_EQ(assemble_manufactured_source([](const Point&) { return 0.0; }, m).cwiseAbs().maxCoeff(), 0.0);
  EXPECT_NEAR(assemble_manufactured_source([](const Point&) { return 1.0; }, m).sum(), 1.0, 1e-14);
  EXPECT_NEAR(assemble_manufactured_source([](const Point& p) { return p.x; }, m).sum(), 0.5, 1e-14);
  const Vec v = assemble_vector_source([](const Point&) { return 1.0; }, [](const Point&) { return 3.0; }, m);
  EXPECT_NEAR(v(Eigen::seq(0, Eigen::last, 2)).sum(), 1.0, 1e-14);
  EXPECT_NEAR(v(Eigen::seq(1, Eigen::last, 2)).sum(), 3.0, 1e-14);
}

TEST(Operators, BiotMatrixBlockStructure) {
  const FineMesh m = test::structured_mesh(3, true);
  const PoroModel model = test::fractured_model(m, 0.5);
  const BiotOperators ops = assemble_operators(model, m);
  const DofLayout& lay = ops.layout;
  EXPECT_EQ(lay.total(), m.num_nodes() + m.num_fracture_nodes() + 2 * m.num_nodes());
  const DenseMat a = dense(biot_matrix(ops, {2.0, 3.0}, {5.0, 0.0}));
  const int p0 = lay.pressure_offset[0], p1 = lay.pressure_offset[1], u = lay.displacement_offset;
  const int n = m.num_nodes(), nf = m.num_fracture_nodes();
  const DenseMat flow0 = 2.0 * dense(ops.mass[0]) + dense(ops.stiffness[0]) + dense(ops.exchanges[0].diag_first);
  EXPECT_LT((a.block(p0, p0, n, n) - flow0).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_LT((a.block(p0, p1, n, nf) + dense(ops.exchanges[0].off)).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_LT((a.block(p0, u, n, 2 * n) - 5.0 * dense(ops.coupling[0])).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_LT((a.block(u, p0, 2 * n, n) - dense(ops.coupling[0]).transpose()).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_LT((a.block(u, u, 2 * n, 2 * n) - dense(ops.elasticity)).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_EQ(a.block(u, p1, 2 * n, nf).cwiseAbs().maxCoeff(), 0.0);
}

}  // namespace
}  // namespace fracporo
