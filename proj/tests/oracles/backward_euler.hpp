#pragma once

#include <vector>

#include "fracporo/assembly/model.hpp"
#include "fracporo/assembly/operators.hpp"
#include "fracporo/mesh/fine_mesh.hpp"

namespace fracporo::oracle {

/// Independent backward-Euler Biot stepper used to cross-check the L1 solver
/// at order one. It assembles its own element integrals, numbers unknowns
/// node by node (bulk pressures, then u_x, u_y; fracture pressures last, in
/// descending node order) and eliminates Dirichlet unknowns from the system.
struct Problem {
  struct PressureCondition {
    int continuum;
    std::uint8_t sides;
    double value;
  };
  std::vector<PressureCondition> pressure_conditions;
  bool rollers = true;  // u_x = 0 on left/right, u_y = 0 on top/bottom
  double tau = 1.0;
  int steps = 1;
  std::vector<double> initial_pressure;  // per continuum
};

/// States 0..steps mapped onto `layout` (the solver's block ordering).
std::vector<Vec> solve_backward_euler(const FineMesh& mesh, const PoroModel& model, const Problem& problem,
                                      const DofLayout& layout);

}  // namespace fracporo::oracle
