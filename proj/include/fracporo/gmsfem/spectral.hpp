#pragma once

#include "fracporo/gmsfem/snapshots.hpp"

namespace fracporo {

/// Solution of the snapshot-space pencil  A~ y = lambda S~ y  with
/// A~ = Psi^T A Psi and S~ = Psi^T S Psi. Eigenpairs ascending, S~-orthonormal.
struct SpectralBasis {
  int patch = -1;
  Vec eigenvalues;
  DenseMat coefficients;  // eigenvectors in snapshot coordinates (columns)
  DenseMat vectors;       // Psi * coefficients: eigenvectors on the local DOFs
  DenseMat reduced_stiffness;
  DenseMat reduced_weight;

  int count() const { return static_cast<int>(eigenvalues.size()); }
};

/// S~ is diagonalized first; its directions with eigenvalue below
/// 1e-12 * max are dropped (degenerate snapshots) and the remaining pencil
/// becomes a standard symmetric problem. Throws NumericalError if nothing is left.
SpectralBasis solve_spectral_problem(const LocalProblem& problem, const SnapshotSet& snaps);

/// ||A~ y - lambda S~ y|| / ||S~ y|| for eigenpair k.
double generalized_residual(const SpectralBasis& basis, int k);

}  // namespace fracporo
