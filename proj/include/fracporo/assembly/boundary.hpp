#pragma once

#include <cstdint>
#include <vector>

#include "fracporo/assembly/operators.hpp"

namespace fracporo {

/// p_i = value on the nodes tagged with any of `sides`.
struct PressureDirichlet {
  int continuum = 0;
  std::uint8_t sides = 0;
  double value = 0.0;
};

/// u_component = value on the nodes tagged with any of `sides`.
struct DisplacementDirichlet {
  int component = 0;
  std::uint8_t sides = 0;
  double value = 0.0;
};

/// Essential conditions only; flux and traction conditions are natural.
struct BoundaryConditions {
  std::vector<PressureDirichlet> pressure;
  std::vector<DisplacementDirichlet> displacement;

  /// u_x = 0 on left/right, u_y = 0 on top/bottom.
  static std::vector<DisplacementDirichlet> rollers();
};

/// Constrained rows of a stacked state, ascending, with their values.
struct ConstraintSet {
  std::vector<int> dofs;
  Vec values;

  bool empty() const { return dofs.empty(); }
  int size() const { return static_cast<int>(dofs.size()); }
  bool homogeneous() const { return values.size() == 0 || values.cwiseAbs().maxCoeff() == 0.0; }
  /// Flags per DOF of a state of size n.
  std::vector<char> mask(int n) const;
};

/// Maps the conditions onto the fine layout. A bulk condition that selects
/// no tagged node, or two conditions prescribing different values on the
/// same DOF, raise ConfigError. A fracture condition may select nothing.
ConstraintSet build_constraints(const BoundaryConditions& bc, const PoroModel& model, const FineMesh& mesh,
                                const DofLayout& layout);

/// Matrix with constrained rows and columns replaced by the identity, plus the
/// removed columns (constrained rows zeroed) for lifting the values to the RHS.
struct ConstrainedMatrix {
  SpMat matrix;
  SpMat lift;
};

ConstrainedMatrix apply_boundary_conditions(const SpMat& a, const ConstraintSet& cs);

/// rhs <- rhs - lift * values, then rhs[dof] = value.
void constrain_rhs(const ConstrainedMatrix& cm, const ConstraintSet& cs, const Vec& values, Vec& rhs);

}  // namespace fracporo
