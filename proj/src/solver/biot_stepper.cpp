#include "fracporo/solver/biot_stepper.hpp"

#include <Eigen/SparseLU>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <vector>

#include "fracporo/errors.hpp"

namespace fracporo {

namespace {

using Factor = Eigen::SparseLU<SpMat, Eigen::COLAMDOrdering<int>>;

// Symmetric scaling d_i = 1/sqrt(|a_ii|) (row max when the diagonal vanishes),
// so that blocks of very different magnitude factor with comparable accuracy.
Vec equilibration(const SpMat& a) {
  Vec diag = Vec::Zero(a.rows()), rowmax = Vec::Zero(a.rows());
  for (int c = 0; c < a.outerSize(); ++c)
    for (SpMat::InnerIterator it(a, c); it; ++it) {
      rowmax[it.row()] = std::max(rowmax[it.row()], std::abs(it.value()));
      if (it.row() == it.col()) diag[it.row()] = std::abs(it.value());
    }
  Vec d(a.rows());
  for (Eigen::Index i = 0; i < d.size(); ++i) {
    const double s = diag[i] > 0.0 ? diag[i] : rowmax[i];
    d[i] = s > 0.0 ? 1.0 / std::sqrt(s) : 1.0;
  }
  return d;
}

}  // namespace

struct FractionalBiotStepper::Factorization {
  Factor lu;
  Vec scale;

  bool factor(const SpMat& a, std::string& why) {
    scale = equilibration(a);
    const SpMat scaled = scale.asDiagonal() * a * scale.asDiagonal();
    lu.analyzePattern(scaled);
    lu.factorize(scaled);
    if (lu.info() != Eigen::Success) {
      why = lu.lastErrorMessage();
      return false;
    }
    return true;
  }

  Vec solve(const Vec& b) const {
    const Vec y = lu.solve(scale.cwiseProduct(b));
    return scale.cwiseProduct(y);
  }
};

namespace {

// Residual b - a x accumulated in extended precision so refinement is not
// limited by cancellation between blocks of very different scale.
Vec extended_residual(const SpMat& a, const Vec& b, const Vec& x) {
  std::vector<long double> acc(b.data(), b.data() + b.size());
  for (int c = 0; c < a.outerSize(); ++c)
    for (SpMat::InnerIterator it(a, c); it; ++it)
      acc[it.row()] -= static_cast<long double>(it.value()) * x[it.col()];
  Vec r(b.size());
  for (Eigen::Index i = 0; i < r.size(); ++i) r[i] = static_cast<double>(acc[i]);
  return r;
}

std::string describe(const SpMat& a, const std::string& why) {
  std::ostringstream os;
  os << "sparse LU failed on " << a.rows() << "x" << a.cols() << " matrix with " << a.nonZeros()
     << " nonzeros: " << why;
  return os.str();
}

}  // namespace

FractionalBiotStepper::FractionalBiotStepper(const BiotOperators& ops, double tau, int steps,
                                             ConstraintSet constraints, StepperOptions options)
    : ops_(ops),
      tau_(tau),
      steps_(steps),
      constraints_(std::move(constraints)),
      options_(options),
      factor_(std::make_unique<Factorization>()) {
  if (!(tau > 0.0)) throw ConfigError("time step must be positive");
  if (steps < 1) throw ConfigError("at least one time step is required");
  const int nc = ops.num_continua();
  if (static_cast<int>(ops.alpha.size()) != nc || static_cast<int>(ops.beta.size()) != nc)
    throw ContractError("one pair of fractional orders per continuum expected");

  auto index_of = [&](double order) {
    auto it = std::find(orders_.begin(), orders_.end(), order);
    if (it != orders_.end()) return static_cast<int>(it - orders_.begin());
    orders_.push_back(order);
    weights_.emplace_back(order, tau, steps);
    return static_cast<int>(orders_.size()) - 1;
  };
  std::vector<double> pressure_scale(nc), strain_scale(nc);
  for (int i = 0; i < nc; ++i) {
    alpha_index_.push_back(index_of(ops.alpha[i]));
    beta_index_.push_back(index_of(ops.beta[i]));
    pressure_scale[i] = weights_[alpha_index_[i]].scale();
    strain_scale[i] = weights_[beta_index_[i]].scale();
  }
  check_flow_anchored();

  system_ = apply_boundary_conditions(biot_matrix(ops, pressure_scale, strain_scale), constraints_);
  std::string why;
  if (!factor_->factor(system_.matrix, why)) throw NumericalError(describe(system_.matrix, why));
}

FractionalBiotStepper::~FractionalBiotStepper() = default;

void FractionalBiotStepper::check_flow_anchored() const {
  const DofLayout& lay = ops_.layout;
  const int nc = ops_.num_continua();
  std::vector<int> group(nc);
  std::iota(group.begin(), group.end(), 0);
  auto root = [&](int i) {
    while (group[i] != i) i = group[i];
    return i;
  };
  for (const auto& ex : ops_.exchanges)
    if (ex.off.nonZeros() > 0 && ex.off.norm() > 0.0) group[root(ex.first)] = root(ex.second);

  std::vector<char> anchored(nc, 0);
  for (int i = 0; i < nc; ++i) {
    if (lay.pressure_size[i] == 0 || ops_.mass[i].norm() > 0.0) anchored[root(i)] = 1;
  }
  for (int d : constraints_.dofs)
    for (int i = 0; i < nc; ++i)
      if (d >= lay.pressure_offset[i] && d < lay.pressure_offset[i] + lay.pressure_size[i]) anchored[root(i)] = 1;
  for (int i = 0; i < nc; ++i)
    if (!anchored[root(i)])
      throw ConfigError("flow block is singular: continuum " + std::to_string(i) +
                        " has no storage, no Dirichlet pressure and no exchange with one that does");
}

Vec FractionalBiotStepper::dirichlet_values(int n) const {
  if (constraints_.empty()) return Vec();
  if (!dirichlet_) return constraints_.values;
  Vec v = dirichlet_(n);
  if (v.size() != constraints_.size()) throw ContractError("Dirichlet callback returned wrong size");
  return v;
}

// The residual is measured on the equilibrated system, where flow and mechanics
// rows carry comparable magnitudes regardless of physical units. Refinement runs
// until the residual reaches machine precision or stops improving.
Vec FractionalBiotStepper::solve_checked(const SpMat& a, const Factorization& f, const Vec& b,
                                         double& residual) const {
  const auto scaled_norm = [&](const Vec& v) { return f.scale.cwiseProduct(v).norm(); };
  Vec x = f.solve(b);
  const double bnorm = scaled_norm(b);
  const double denom = bnorm > 0.0 ? bnorm : 1.0;
  Vec r = extended_residual(a, b, x);
  residual = scaled_norm(r) / denom;
  const double target = std::numeric_limits<double>::epsilon();
  for (int k = 0; k < options_.max_refinements && residual > target; ++k) {
    const Vec dx = f.solve(r);
    const Vec rn = extended_residual(a, b, x + dx);
    const double next = scaled_norm(rn) / denom;
    if (!(next < 0.5 * residual)) break;
    x += dx;
    r = rn;
    residual = next;
  }
  if (!x.allFinite()) throw NumericalError("linear solve produced non-finite values");
  if (residual > options_.residual_tolerance) {
    std::ostringstream os;
    os << "relative residual " << residual << " above tolerance " << options_.residual_tolerance << " on "
       << a.rows() << "x" << a.cols() << " system";
    throw NumericalError(os.str());
  }
  return x;
}

Vec FractionalBiotStepper::equilibrate(Vec state) const {
  const DofLayout& lay = ops_.layout;
  if (state.size() != lay.total()) throw ContractError("state size does not match the layout");
  const Vec values = dirichlet_values(0);
  for (int k = 0; k < constraints_.size(); ++k) state[constraints_.dofs[k]] = values[k];

  const int ou = lay.displacement_offset;
  ConstraintSet ucs;
  std::vector<double> uvals;
  for (int k = 0; k < constraints_.size(); ++k)
    if (constraints_.dofs[k] >= ou) {
      ucs.dofs.push_back(constraints_.dofs[k] - ou);
      uvals.push_back(values[k]);
    }
  ucs.values = Eigen::Map<const Vec>(uvals.data(), static_cast<Eigen::Index>(uvals.size()));

  Vec rhs = Vec::Zero(lay.displacement_size);
  if (source_) rhs = lay.displacement(source_(0));
  for (int i = 0; i < ops_.num_continua(); ++i)
    rhs -= ops_.coupling[i].transpose() * lay.pressure(state, i);
  const ConstrainedMatrix cm = apply_boundary_conditions(ops_.elasticity, ucs);
  constrain_rhs(cm, ucs, ucs.values, rhs);

  Factorization f;
  std::string why;
  if (!f.factor(cm.matrix, why)) throw ConfigError("elasticity block is singular under the displacement conditions");
  double residual = 0.0;
  try {
    lay.displacement(state) = solve_checked(cm.matrix, f, rhs, residual);
  } catch (const NumericalError&) {
    throw ConfigError("elasticity block is singular under the displacement conditions");
  }
  return state;
}

void FractionalBiotStepper::start(Vec state0) {
  if (state0.size() != ops_.layout.total()) throw ContractError("state size does not match the layout");
  history_ = TimeHistory(std::move(state0));
}

Vec FractionalBiotStepper::build_rhs() const {
  if (history_.empty()) throw ContractError("stepper has no initial state");
  const int n = history_.size();
  if (n > steps_) throw ContractError("all configured steps have been taken");
  const DofLayout& lay = ops_.layout;
  const Vec& prev = history_.back();

  std::vector<Vec> memory;
  memory.reserve(weights_.size());
  for (const auto& w : weights_) memory.push_back(memory_sum(w, history_));

  Vec rhs = Vec::Zero(lay.total());
  const auto u_prev = lay.displacement(prev);
  for (int i = 0; i < ops_.num_continua(); ++i) {
    const L1Weights& wa = weights_[alpha_index_[i]];
    const L1Weights& wb = weights_[beta_index_[i]];
    const Vec p_hist = lay.pressure(prev, i) - lay.pressure(memory[alpha_index_[i]], i);
    const Vec u_hist = u_prev - lay.displacement(memory[beta_index_[i]]);
    lay.pressure(rhs, i) = wa.scale() * (ops_.mass[i] * p_hist) + wb.scale() * (ops_.coupling[i] * u_hist);
  }
  if (source_) {
    const Vec f = source_(n);
    if (f.size() != lay.total()) throw ContractError("source callback returned wrong size");
    rhs += f;
  }
  return rhs;
}

const Vec& FractionalBiotStepper::step() {
  Vec rhs = build_rhs();
  const int n = history_.size();
  constrain_rhs(system_, constraints_, dirichlet_values(n), rhs);
  double residual = 0.0;
  Vec x = solve_checked(system_.matrix, *factor_, rhs, residual);
  max_residual_ = std::max(max_residual_, residual);
  history_.push(std::move(x));
  return history_.back();
}

void FractionalBiotStepper::run() {
  while (history_.size() <= steps_) step();
}

}  // namespace fracporo
