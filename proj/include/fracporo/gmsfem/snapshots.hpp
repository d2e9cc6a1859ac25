#pragma once

#include <vector>

#include "fracporo/assembly/operators.hpp"
#include "fracporo/mesh/patch.hpp"

namespace fracporo {

/// Local problem on a patch: stiffness, spectral weight and the boundary DOFs
/// that carry the snapshot deltas. DOFs are patch-local and stacked.
struct LocalProblem {
  int patch = -1;
  DofLayout layout;             // pressure: one block per continuum; displacement: one block
  SpMat stiffness;              // coupled flow stiffness + exchange, or elasticity
  SpMat weight;                 // k-weighted mass, or (lambda + 2 mu)-weighted vector mass
  std::vector<int> boundary;    // stacked DOFs on the patch boundary, ascending
};

/// Coupled steady flow on the patch: block stiffness A_i plus exchange terms,
/// weighted by the block-diagonal permeability mass.
LocalProblem local_pressure_problem(const Patch& patch, const PoroModel& model, const FineMesh& mesh);

/// Plane-strain elasticity on the patch with the modulus-weighted mass.
LocalProblem local_displacement_problem(const Patch& patch, const PoroModel& model, const FineMesh& mesh);

/// Harmonic extensions of nodal deltas: column k equals 1 at boundary DOF k,
/// 0 at the other boundary DOFs, and solves the local problem inside.
struct SnapshotSet {
  int patch = -1;
  DenseMat vectors;          // rows: stacked local DOFs, columns: snapshots
  std::vector<int> boundary; // delta location of each column

  int count() const { return static_cast<int>(vectors.cols()); }
};

/// Throws DataError if the interior system is singular.
SnapshotSet compute_snapshots(const LocalProblem& problem);

SnapshotSet compute_pressure_snapshots(const Patch& patch, const PoroModel& model, const FineMesh& mesh);
SnapshotSet compute_displacement_snapshots(const Patch& patch, const PoroModel& model, const FineMesh& mesh);

/// max over columns of |A_II x_I + A_IB x_B| relative to the column's scale.
double snapshot_interior_residual(const LocalProblem& problem, const SnapshotSet& snaps);

}  // namespace fracporo
