#include "fracporo/assembly/boundary.hpp"

#include <map>
#include <string>

#include "fracporo/errors.hpp"

namespace fracporo {

std::vector<DisplacementDirichlet> BoundaryConditions::rollers() {
  return {{0, static_cast<std::uint8_t>(kLeft | kRight), 0.0}, {1, static_cast<std::uint8_t>(kTop | kBottom), 0.0}};
}

std::vector<char> ConstraintSet::mask(int n) const {
  std::vector<char> m(n, 0);
  for (int d : dofs) m[d] = 1;
  return m;
}

ConstraintSet build_constraints(const BoundaryConditions& bc, const PoroModel& model, const FineMesh& mesh,
                                const DofLayout& layout) {
  std::map<int, double> fixed;
  auto fix = [&](int dof, double value) {
    auto [it, inserted] = fixed.emplace(dof, value);
    if (!inserted && it->second != value)
      throw ConfigError("conflicting Dirichlet values on DOF " + std::to_string(dof));
  };

  for (const auto& c : bc.pressure) {
    if (c.continuum < 0 || c.continuum >= model.num_continua())
      throw ConfigError("pressure condition on unknown continuum " + std::to_string(c.continuum));
    if (c.sides == 0) throw ConfigError("pressure condition without boundary side");
    const ContinuumSpec& spec = model.continua[c.continuum];
    const int offset = layout.pressure_offset[c.continuum];
    int hits = 0;
    if (spec.is_fracture()) {
      for (int dof = 0; dof < mesh.num_fracture_nodes(); ++dof)
        if (mesh.boundary_tag(mesh.fracture_nodes()[dof]) & c.sides) {
          fix(offset + dof, c.value);
          ++hits;
        }
      // A fracture network need not reach the selected sides.
      continue;
    }
    for (int node = 0; node < mesh.num_nodes(); ++node)
      if (mesh.boundary_tag(node) & c.sides) {
        fix(offset + node, c.value);
        ++hits;
      }
    if (hits == 0) throw ConfigError("pressure condition on '" + spec.name + "' selects no tagged node");
  }

  for (const auto& c : bc.displacement) {
    if (c.component < 0 || c.component > 1) throw ConfigError("displacement component must be 0 or 1");
    if (c.sides == 0) throw ConfigError("displacement condition without boundary side");
    int hits = 0;
    for (int node = 0; node < mesh.num_nodes(); ++node)
      if (mesh.boundary_tag(node) & c.sides) {
        fix(layout.displacement_offset + 2 * node + c.component, c.value);
        ++hits;
      }
    if (hits == 0) throw ConfigError("displacement condition selects no tagged node");
  }

  ConstraintSet cs;
  cs.values.resize(static_cast<Eigen::Index>(fixed.size()));
  int k = 0;
  for (const auto& [dof, value] : fixed) {
    cs.dofs.push_back(dof);
    cs.values[k++] = value;
  }
  return cs;
}

ConstrainedMatrix apply_boundary_conditions(const SpMat& a, const ConstraintSet& cs) {
  const int n = static_cast<int>(a.rows());
  if (a.cols() != n) throw ContractError("constrained matrix must be square");
  std::vector<int> position(n, -1);
  for (int k = 0; k < cs.size(); ++k) {
    if (cs.dofs[k] < 0 || cs.dofs[k] >= n) throw ContractError("constraint DOF out of range");
    position[cs.dofs[k]] = k;
  }
  std::vector<Triplet> keep, lift;
  keep.reserve(a.nonZeros());
  for (int col = 0; col < a.outerSize(); ++col)
    for (SpMat::InnerIterator it(a, col); it; ++it) {
      const int r = static_cast<int>(it.row()), c = static_cast<int>(it.col());
      if (position[r] >= 0) continue;
      if (position[c] >= 0)
        lift.emplace_back(r, position[c], it.value());
      else
        keep.emplace_back(r, c, it.value());
    }
  for (int d : cs.dofs) keep.emplace_back(d, d, 1.0);
  ConstrainedMatrix out;
  out.matrix.resize(n, n);
  out.matrix.setFromTriplets(keep.begin(), keep.end());
  out.matrix.makeCompressed();
  out.lift.resize(n, cs.size());
  out.lift.setFromTriplets(lift.begin(), lift.end());
  return out;
}

void constrain_rhs(const ConstrainedMatrix& cm, const ConstraintSet& cs, const Vec& values, Vec& rhs) {
  if (values.size() != cs.size()) throw ContractError("one value per constrained DOF expected");
  if (cs.empty()) return;
  rhs -= cm.lift * values;
  for (int k = 0; k < cs.size(); ++k) rhs[cs.dofs[k]] = values[k];
}

}  // namespace fracporo
