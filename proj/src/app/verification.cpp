#include "fracporo/app/verification.hpp"

#include <algorithm>
#include <cmath>

#include "fracporo/assembly/source.hpp"
#include "fracporo/errors.hpp"
#include "fracporo/fractional/mittag_leffler.hpp"
#include "fracporo/fractional/scalar_decay.hpp"
#include "fracporo/solver/biot_stepper.hpp"

namespace fracporo {

DecayStudy fractional_decay_study(double alpha, double c, double lam, double final_time, const std::vector<int>& steps) {
  DecayStudy study;
  study.alpha = alpha;
  study.steps = steps;
  const double exact = mittag_leffler(alpha, -(lam / c) * std::pow(final_time, alpha));
  for (int n : steps) {
    const auto p = solve_scalar_fractional_decay(alpha, c, lam, final_time / n, n);
    study.errors.push_back(std::abs(p.back() - exact));
  }
  for (std::size_t k = 0; k + 1 < study.errors.size(); ++k)
    study.orders.push_back(std::log2(study.errors[k] / study.errors[k + 1]));
  return study;
}

double manufactured_solution_error(const FineMesh& mesh, int steps, double final_time) {
  constexpr double kStorage = 0.2, kPerm = 1.5, kBiot = 0.4, kYoungs = 3.0, kPoisson = 0.25;
  PoroModel model;
  ContinuumSpec spec;
  spec.name = "m";
  spec.storage.assign(mesh.num_triangles(), kStorage);
  spec.permeability.assign(mesh.num_triangles(), kPerm);
  spec.biot = kBiot;
  model.continua.push_back(spec);
  model.elasticity.youngs.assign(mesh.num_triangles(), kYoungs);
  model.elasticity.poisson = kPoisson;
  const BiotOperators ops = assemble_operators(model, mesh);
  const DofLayout& lay = ops.layout;
  const int nodes = mesh.num_nodes();

  // All boundary DOFs carry the exact values.
  ConstraintSet cs;
  for (int k = 0; k < nodes; ++k)
    if (mesh.boundary_tag(k)) cs.dofs.push_back(lay.pressure_offset[0] + k);
  for (int k = 0; k < nodes; ++k)
    if (mesh.boundary_tag(k)) {
      cs.dofs.push_back(lay.displacement_offset + 2 * k);
      cs.dofs.push_back(lay.displacement_offset + 2 * k + 1);
    }
  std::sort(cs.dofs.begin(), cs.dofs.end());
  const double tau = final_time / steps;
  auto exact = [&](int n) {
    const double t = n * tau;
    Vec v = Vec::Zero(lay.total());
    for (int k = 0; k < nodes; ++k) {
      v[lay.pressure_offset[0] + k] = t * mesh.node(k).x;
      v[lay.displacement_offset + 2 * k] = t * mesh.node(k).x;
    }
    return v;
  };
  auto restrict = [&](const Vec& v) {
    Vec out(static_cast<Eigen::Index>(cs.dofs.size()));
    for (std::size_t k = 0; k < cs.dofs.size(); ++k) out[k] = v[cs.dofs[k]];
    return out;
  };
  cs.values = restrict(exact(0));

  // Flow: c x + gamma; mechanics with the printed sign: -gamma grad p = (-gamma t, 0).
  const Vec flow_load = assemble_manufactured_source([&](const Point& x) { return kStorage * x.x + kBiot; }, mesh);
  const Vec unit_x = assemble_vector_source([](const Point&) { return 1.0; }, [](const Point&) { return 0.0; }, mesh);
  FractionalBiotStepper stepper(ops, tau, steps, cs);
  stepper.set_source([&](int n) {
    Vec f = Vec::Zero(lay.total());
    lay.pressure(f, 0) = flow_load;
    lay.displacement(f) = -kBiot * (n * tau) * unit_x;
    return f;
  });
  stepper.set_dirichlet([&](int n) { return restrict(exact(n)); });
  stepper.start(stepper.equilibrate(exact(0)));
  double worst = (stepper.history()[0] - exact(0)).cwiseAbs().maxCoeff();
  for (int n = 1; n <= steps; ++n) worst = std::max(worst, (stepper.step() - exact(n)).cwiseAbs().maxCoeff());
  return worst;
}

}  // namespace fracporo
