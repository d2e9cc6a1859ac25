#pragma once

#include <vector>

#include "fracporo/gmsfem/multiscale_space.hpp"
#include "fracporo/solver/biot_stepper.hpp"

namespace fracporo {

/// Galerkin projection of every operator family: X^H = R_a X R_b^T.
BiotOperators project_operators(const BiotOperators& fine, const MultiscaleSpace& space);

/// Per-block L2 projection of the pressure blocks of a fine state onto the
/// coarse space, using the given plain mass matrices (one per continuum).
/// The displacement block of the result is zero.
Vec project_pressures(const Vec& fine_state, const DofLayout& fine_layout, const std::vector<SpMat>& plain_mass,
                      const MultiscaleSpace& space);

/// Fine-grid state R^T x^H, block by block.
Vec downscale(const Vec& coarse_state, const MultiscaleSpace& space, const DofLayout& fine_layout);

/// Coarse time stepping: owns the projected operators and the stepper.
class CoarseSolver {
 public:
  CoarseSolver(BiotOperators coarse_ops, double tau, int steps, StepperOptions options = {});

  const BiotOperators& operators() const { return ops_; }
  const FractionalBiotStepper& stepper() const { return stepper_; }

  /// Starts from the given coarse pressures (displacement recomputed from the
  /// coarse elastostatic equation) and runs all steps.
  const TimeHistory& run(const Vec& initial_pressures);

 private:
  BiotOperators ops_;
  FractionalBiotStepper stepper_;
};

}  // namespace fracporo
