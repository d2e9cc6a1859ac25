#include "fracporo/solver/fine_solver.hpp"

#include <Eigen/QR>
#include <algorithm>
#include <array>
#include <vector>

#include "fracporo/errors.hpp"

namespace fracporo {

namespace {

// The constrained elasticity block is singular when some rigid motion vanishes
// on every constrained displacement DOF.
void check_mechanics_anchored(const FineMesh& mesh, const DofLayout& layout, const ConstraintSet& cs) {
  const Box& b = mesh.bounds();
  const double cx = 0.5 * (b.x0 + b.x1), cy = 0.5 * (b.y0 + b.y1);
  const double scale = std::max(b.x1 - b.x0, b.y1 - b.y0);
  std::vector<std::array<double, 3>> rows;
  for (int d : cs.dofs) {
    const int local = d - layout.displacement_offset;
    if (local < 0) continue;
    const Point& p = mesh.node(local / 2);
    const double rx = (p.x - cx) / scale, ry = (p.y - cy) / scale;
    rows.push_back(local % 2 == 0 ? std::array<double, 3>{1.0, 0.0, -ry} : std::array<double, 3>{0.0, 1.0, rx});
  }
  Eigen::MatrixXd r(static_cast<Eigen::Index>(rows.size()), 3);
  for (std::size_t k = 0; k < rows.size(); ++k)
    for (int j = 0; j < 3; ++j) r(static_cast<Eigen::Index>(k), j) = rows[k][j];
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(r);
  qr.setThreshold(1e-10);
  if (rows.size() < 3 || qr.rank() < 3)
    throw ConfigError("displacement conditions leave a rigid-body motion unconstrained");
}

}  // namespace

FineSolver::FineSolver(const FineMesh& mesh, FineProblem problem) : mesh_(mesh), problem_(std::move(problem)) {
  if (!(problem_.final_time > 0.0)) throw ConfigError("final time must be positive");
  if (problem_.steps < 1) throw ConfigError("at least one time step is required");
  if (static_cast<int>(problem_.initial_pressure.size()) != problem_.model.num_continua())
    throw ConfigError("one initial pressure per continuum expected");
  ops_ = assemble_operators(problem_.model, mesh_);
  constraints_ = build_constraints(problem_.bc, problem_.model, mesh_, ops_.layout);
  check_mechanics_anchored(mesh_, ops_.layout, constraints_);
  stepper_ = std::make_unique<FractionalBiotStepper>(ops_, tau(), problem_.steps, constraints_, problem_.options);
}

Vec FineSolver::initialize() const {
  const DofLayout& lay = ops_.layout;
  Vec state = Vec::Zero(lay.total());
  for (int i = 0; i < lay.num_continua(); ++i) lay.pressure(state, i).setConstant(problem_.initial_pressure[i]);
  return stepper_->equilibrate(std::move(state));
}

const TimeHistory& FineSolver::run() {
  stepper_->start(initialize());
  stepper_->run();
  return stepper_->history();
}

}  // namespace fracporo
