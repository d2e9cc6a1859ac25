#pragma once

#include <memory>
#include <vector>

#include "fracporo/assembly/boundary.hpp"
#include "fracporo/solver/biot_stepper.hpp"

namespace fracporo {

struct FineProblem {
  PoroModel model;
  BoundaryConditions bc;
  double final_time = 1.0;
  int steps = 1;
  std::vector<double> initial_pressure;  // per continuum, constant in space
  StepperOptions options;
};

/// Reference solver on the fine grid. Keeps the mesh by reference.
class FineSolver {
 public:
  FineSolver(const FineMesh& mesh, FineProblem problem);

  const FineMesh& mesh() const { return mesh_; }
  const FineProblem& problem() const { return problem_; }
  const BiotOperators& operators() const { return ops_; }
  const ConstraintSet& constraints() const { return constraints_; }
  FractionalBiotStepper& stepper() { return *stepper_; }
  const FractionalBiotStepper& stepper() const { return *stepper_; }
  double tau() const { return problem_.final_time / problem_.steps; }

  /// p_i = initial value (Dirichlet values where imposed), u from the
  /// elastostatic equation.
  Vec initialize() const;
  /// Runs all steps from initialize() and returns the states 0..N.
  const TimeHistory& run();

 private:
  const FineMesh& mesh_;
  FineProblem problem_;
  BiotOperators ops_;
  ConstraintSet constraints_;
  std::unique_ptr<FractionalBiotStepper> stepper_;
};

}  // namespace fracporo
