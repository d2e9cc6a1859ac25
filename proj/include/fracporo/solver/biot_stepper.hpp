#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "fracporo/assembly/boundary.hpp"
#include "fracporo/assembly/operators.hpp"
#include "fracporo/fractional/time_history.hpp"

namespace fracporo {

struct StepperOptions {
  double residual_tolerance = 1e-10;  // relative residual of the equilibrated system per solve
  int max_refinements = 4;
};

/// L1 time stepping of the stacked Biot system
///
///   zeta_a,i M_i (p_i^n - p_i^{n-1} + mem_a,i) + (A_i + Q) p^n + zeta_b,i D_i (u^n - u^{n-1} + mem_b,i) = f_i^n
///   sum_j D_j^T p_j^n + A_u u^n = f_u^n
///
/// where mem are the L1 memory sums over the full history. The left-hand
/// matrix does not change between steps and is factored once. Works on any
/// BiotOperators, fine or projected; the operators must outlive the stepper.
class FractionalBiotStepper {
 public:
  using StepVector = std::function<Vec(int n)>;

  /// Throws ConfigError if some group of exchange-connected continua has no
  /// storage and no Dirichlet DOF (the flow block is then singular).
  FractionalBiotStepper(const BiotOperators& ops, double tau, int steps, ConstraintSet constraints = {},
                        StepperOptions options = {});
  ~FractionalBiotStepper();
  FractionalBiotStepper(const FractionalBiotStepper&) = delete;
  FractionalBiotStepper& operator=(const FractionalBiotStepper&) = delete;

  /// Full-layout load added at step n (time n * tau). Default none.
  void set_source(StepVector source) { source_ = std::move(source); }
  /// Values of the constrained DOFs at step n. Default: the ConstraintSet values.
  void set_dirichlet(StepVector values) { dirichlet_ = std::move(values); }

  /// Completes a state whose pressure blocks are set: imposes the constraint
  /// values of step 0 and solves A_u u = f_u(0) - sum_j D_j^T p_j.
  /// Throws ConfigError if the constrained elasticity block is singular.
  Vec equilibrate(Vec state) const;

  /// Resets the history to the given initial state.
  void start(Vec state0);
  /// Right-hand side of step n = history().size().
  Vec build_rhs() const;
  /// Advances one step and returns the new state.
  const Vec& step();
  /// Advances until `steps` steps are stored.
  void run();

  const TimeHistory& history() const { return history_; }
  const SpMat& matrix() const { return system_.matrix; }
  const DofLayout& layout() const { return ops_.layout; }
  double tau() const { return tau_; }
  int steps() const { return steps_; }
  double max_residual() const { return max_residual_; }

 private:
  struct Factorization;

  Vec solve_checked(const SpMat& a, const Factorization& f, const Vec& b, double& residual) const;
  Vec dirichlet_values(int n) const;
  void check_flow_anchored() const;

  const BiotOperators& ops_;
  double tau_;
  int steps_;
  ConstraintSet constraints_;
  StepperOptions options_;
  std::vector<double> orders_;  // distinct orders
  std::vector<L1Weights> weights_;
  std::vector<int> alpha_index_, beta_index_;
  ConstrainedMatrix system_;
  std::unique_ptr<Factorization> factor_;
  StepVector source_;
  StepVector dirichlet_;
  TimeHistory history_;
  double max_residual_ = 0.0;
};

}  // namespace fracporo
