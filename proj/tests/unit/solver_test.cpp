#include <gtest/gtest.h>

#include <cmath>

#include "fracporo/errors.hpp"
#include "fracporo/fractional/l1_weights.hpp"
#include "fracporo/solver/biot_stepper.hpp"
#include "fracporo/solver/fine_solver.hpp"
#include "support/fixtures.hpp"

namespace fracporo {
namespace {

FineProblem drained_problem(const PoroModel& model, int steps, double final_time) {
  FineProblem p;
  p.model = model;
  p.bc.pressure.push_back({0, kLeft, 0.0});
  p.bc.displacement = BoundaryConditions::rollers();
  p.final_time = final_time;
  p.steps = steps;
  p.initial_pressure.assign(model.num_continua(), 1.0);
  return p;
}

TEST(FineSolver, UncoupledInitialDisplacementIsZero) {
  const FineMesh m = test::structured_mesh(4);
  FineSolver solver(m, drained_problem(test::bulk_model(m, 0.1, 1.0, 0.0), 2, 1.0));
  const Vec s = solver.initialize();
  EXPECT_EQ(solver.operators().layout.displacement(s).cwiseAbs().maxCoeff(), 0.0);
}

TEST(FineSolver, InitialDisplacementBalancesPressure) {
  const FineMesh m = test::structured_mesh(6, false, 1.0, 0.2);
  FineSolver solver(m, drained_problem(test::bulk_model(m, 0.1, 1.0, 0.1), 2, 1.0));
  const Vec s = solver.initialize();
  const BiotOperators& ops = solver.operators();
  const auto u = ops.layout.displacement(s);
  EXPECT_GT(u.cwiseAbs().maxCoeff(), 0.0);
  Vec residual = ops.elasticity * u + ops.coupling[0].transpose() * ops.layout.pressure(s, 0);
  for (int d : solver.constraints().dofs)
    if (d >= ops.layout.displacement_offset) residual[d - ops.layout.displacement_offset] = 0.0;
  EXPECT_LT(residual.norm(), 1e-10);
  for (int k = 0; k < m.num_nodes(); ++k)
    if (m.boundary_tag(k) & kLeft) EXPECT_EQ(ops.layout.pressure(s, 0)[k], 0.0);
}

TEST(FineSolver, FirstRightHandSideHasNoMemory) {
  const FineMesh m = test::structured_mesh(4);
  PoroModel model = test::bulk_model(m, 0.1, 1.0, 0.1);
  model.continua[0].alpha = 0.6;
  model.continua[0].beta = 0.8;
  FineSolver solver(m, drained_problem(model, 3, 3.0));
  const Vec s0 = solver.initialize();
  solver.stepper().start(s0);
  const Vec rhs = solver.stepper().build_rhs();
  const BiotOperators& ops = solver.operators();
  const double za = l1_weights(0.6, 1.0, 3).scale(), zb = l1_weights(0.8, 1.0, 3).scale();
  const Vec expected = za * (ops.mass[0] * ops.layout.pressure(s0, 0)) +
                       zb * (ops.coupling[0] * ops.layout.displacement(s0));
  EXPECT_LT((ops.layout.pressure(rhs, 0) - expected).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_EQ(ops.layout.displacement(rhs).cwiseAbs().maxCoeff(), 0.0);
}

TEST(FineSolver, ClassicalOrderRhsUsesLastStateOnly) {
  const FineMesh m = test::structured_mesh(4);
  FineSolver solver(m, drained_problem(test::bulk_model(m, 0.1, 1.0, 0.1), 3, 3.0));
  solver.stepper().start(solver.initialize());
  solver.stepper().step();
  const Vec& s1 = solver.stepper().history().back();
  const Vec rhs = solver.stepper().build_rhs();
  const BiotOperators& ops = solver.operators();
  const Vec expected = ops.mass[0] * ops.layout.pressure(s1, 0) + ops.coupling[0] * ops.layout.displacement(s1);
  EXPECT_LT((ops.layout.pressure(rhs, 0) - expected).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(FineSolver, SteadyHistoryHasNoMemory) {
  // Zero data everywhere: every state stays zero, so the fractional memory vanishes.
  const FineMesh m = test::structured_mesh(4);
  PoroModel model = test::bulk_model(m, 0.1, 1.0, 0.1);
  model.continua[0].alpha = model.continua[0].beta = 0.5;
  FineProblem p = drained_problem(model, 4, 1.0);
  p.initial_pressure = {0.0};
  FineSolver solver(m, p);
  const TimeHistory& h = solver.run();
  ASSERT_EQ(h.size(), 5);
  EXPECT_EQ(h.back().cwiseAbs().maxCoeff(), 0.0);
}

TEST(FineSolver, UncoupledPressureDecaysMonotonically) {
  const FineMesh m = test::structured_mesh(8);
  FineSolver solver(m, drained_problem(test::bulk_model(m, 0.1, 1.0, 0.0), 10, 10.0));
  const TimeHistory& h = solver.run();
  const DofLayout& lay = solver.operators().layout;
  for (int n = 1; n < h.size(); ++n) {
    const Vec prev = lay.pressure(h[n - 1], 0), cur = lay.pressure(h[n], 0);
    EXPECT_LE((cur - prev).maxCoeff(), 1e-14) << "step " << n;
    EXPECT_GE(cur.minCoeff(), -1e-14);
  }
  EXPECT_LT(lay.pressure(h.back(), 0).maxCoeff(), lay.pressure(h[1], 0).maxCoeff());
}

TEST(FineSolver, ReportsResidualBelowTolerance) {
  const FineMesh m = test::structured_mesh(6, true, 1.0, 0.2);
  FineSolver solver(m, drained_problem(test::fractured_model(m, 0.1), 3, 1.0));
  solver.run();
  EXPECT_GT(solver.stepper().max_residual(), 0.0);
  EXPECT_LT(solver.stepper().max_residual(), 1e-10);
}

TEST(FineSolver, HistoryCountsEveryStep) {
  const FineMesh m = test::structured_mesh(4);
  FineSolver solver(m, drained_problem(test::bulk_model(m, 0.1, 1.0, 0.1), 10, 86400.0));
  EXPECT_DOUBLE_EQ(solver.tau(), 8640.0);
  EXPECT_EQ(solver.run().size(), 11);
  EXPECT_THROW(solver.stepper().step(), ContractError);
}

TEST(FineSolver, RejectsUnanchoredFlow) {
  const FineMesh m = test::structured_mesh(3);
  FineProblem p = drained_problem(test::bulk_model(m, 0.0, 1.0, 0.1), 2, 1.0);
  p.bc.pressure.clear();
  EXPECT_THROW(FineSolver(m, p), ConfigError);
  p.model.continua[0].storage.assign(m.num_triangles(), 0.1);
  EXPECT_NO_THROW(FineSolver(m, p));
}

TEST(FineSolver, RejectsFloatingElasticity) {
  const FineMesh m = test::structured_mesh(3);
  FineProblem p = drained_problem(test::bulk_model(m, 0.1, 1.0, 0.1), 2, 1.0);
  p.bc.displacement.clear();
  EXPECT_THROW(FineSolver(m, p), ConfigError);
  p.bc.displacement = {{0, kLeft, 0.0}, {1, kLeft, 0.0}};
  EXPECT_NO_THROW(FineSolver(m, p));
  p.bc.displacement = {{0, kLeft, 0.0}, {1, kBottom, 0.0}};
  EXPECT_NO_THROW(FineSolver(m, p));
  p.bc.displacement = {{0, kLeft, 0.0}};
  EXPECT_THROW(FineSolver(m, p), ConfigError);
}

TEST(FineSolver, RejectsBadTimeSetup) {
  const FineMesh m = test::structured_mesh(3);
  FineProblem p = drained_problem(test::bulk_model(m, 0.1, 1.0, 0.1), 0, 1.0);
  EXPECT_THROW(FineSolver(m, p), ConfigError);
  p.steps = 2;
  p.initial_pressure.clear();
  EXPECT_THROW(FineSolver(m, p), ConfigError);
}

TEST(BiotStepper, StartRequiredBeforeStepping) {
  const FineMesh m = test::structured_mesh(3);
  const PoroModel model = test::bulk_model(m, 0.1, 1.0, 0.1);
  const BiotOperators ops = assemble_operators(model, m);
  BoundaryConditions bc;
  bc.displacement = BoundaryConditions::rollers();
  FractionalBiotStepper stepper(ops, 1.0, 2, build_constraints(bc, model, m, ops.layout));
  EXPECT_THROW(stepper.build_rhs(), ContractError);
  EXPECT_THROW(stepper.start(Vec::Zero(3)), ContractError);
  EXPECT_THROW(FractionalBiotStepper(ops, 0.0, 2), ConfigError);
}

}  // namespace
}  // namespace fracporo
