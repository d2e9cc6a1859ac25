#include "fracporo/gmsfem/coarse_solver.hpp"

#include <Eigen/SparseCholesky>

#include "fracporo/errors.hpp"

namespace fracporo {

namespace {

SpMat congruence(const SpMat& left, const SpMat& m, const SpMat& right) {
  SpMat out = left * m * SpMat(right.transpose());
  out.makeCompressed();
  return out;
}

void check_space(const DofLayout& fine, const MultiscaleSpace& space) {
  if (space.num_continua() != fine.num_continua()) throw ContractError("space and operators disagree on continua");
  for (int i = 0; i < fine.num_continua(); ++i)
    if (space.projection(i).cols() != fine.pressure_size[i]) throw ContractError("pressure block size mismatch");
  if (space.projection(space.num_continua()).cols() != fine.displacement_size)
    throw ContractError("displacement block size mismatch");
}

}  // namespace

BiotOperators project_operators(const BiotOperators& fine, const MultiscaleSpace& space) {
  check_space(fine.layout, space);
  const int nc = fine.num_continua();
  const SpMat& ru = space.projection(nc);
  BiotOperators out;
  out.layout = space.coarse_layout();
  out.alpha = fine.alpha;
  out.beta = fine.beta;
  for (int i = 0; i < nc; ++i) {
    const SpMat& r = space.projection(i);
    out.mass.push_back(congruence(r, fine.mass[i], r));
    out.stiffness.push_back(congruence(r, fine.stiffness[i], r));
    out.coupling.push_back(congruence(r, fine.coupling[i], ru));
  }
  for (const auto& ex : fine.exchanges) {
    const SpMat& ra = space.projection(ex.first);
    const SpMat& rb = space.projection(ex.second);
    out.exchanges.push_back({ex.first, ex.second, congruence(ra, ex.diag_first, ra),
                             congruence(rb, ex.diag_second, rb), congruence(ra, ex.off, rb)});
  }
  out.elasticity = congruence(ru, fine.elasticity, ru);
  return out;
}

Vec project_pressures(const Vec& fine_state, const DofLayout& fine_layout, const std::vector<SpMat>& plain_mass,
                      const MultiscaleSpace& space) {
  check_space(fine_layout, space);
  if (fine_state.size() != fine_layout.total()) throw ContractError("fine state size mismatch");
  const DofLayout coarse = space.coarse_layout();
  Vec out = Vec::Zero(coarse.total());
  for (int i = 0; i < fine_layout.num_continua(); ++i) {
    if (coarse.pressure_size[i] == 0) continue;
    const SpMat& r = space.projection(i);
    const SpMat gram = congruence(r, plain_mass[i], r);
    Eigen::SimplicialLDLT<SpMat> ldlt(gram);
    if (ldlt.info() != Eigen::Success) throw NumericalError("coarse mass matrix is singular");
    const Vec rhs = r * (plain_mass[i] * fine_layout.pressure(fine_state, i));
    coarse.pressure(out, i) = ldlt.solve(rhs);
  }
  return out;
}

Vec downscale(const Vec& coarse_state, const MultiscaleSpace& space, const DofLayout& fine_layout) {
  check_space(fine_layout, space);
  const DofLayout coarse = space.coarse_layout();
  if (coarse_state.size() != coarse.total()) throw ContractError("coarse state size mismatch");
  Vec out(fine_layout.total());
  const int nc = fine_layout.num_continua();
  for (int i = 0; i < nc; ++i)
    fine_layout.pressure(out, i) = space.projection(i).transpose() * coarse.pressure(coarse_state, i);
  fine_layout.displacement(out) = space.projection(nc).transpose() * coarse.displacement(coarse_state);
  return out;
}

CoarseSolver::CoarseSolver(BiotOperators coarse_ops, double tau, int steps, StepperOptions options)
    : ops_(std::move(coarse_ops)), stepper_(ops_, tau, steps, ConstraintSet{}, options) {}

const TimeHistory& CoarseSolver::run(const Vec& initial_pressures) {
  stepper_.start(stepper_.equilibrate(initial_pressures));
  stepper_.run();
  return stepper_.history();
}

}  // namespace fracporo
