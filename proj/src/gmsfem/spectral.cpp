#include "fracporo/gmsfem/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <string>

#include "fracporo/errors.hpp"

namespace fracporo {

namespace {

constexpr double kWeightCutoff = 1e-12;

DenseMat symmetrized(const DenseMat& m) { return 0.5 * (m + m.transpose()); }

}  // namespace

SpectralBasis solve_spectral_problem(const LocalProblem& problem, const SnapshotSet& snaps) {
  SpectralBasis out;
  out.patch = problem.patch;
  const DenseMat& psi = snaps.vectors;
  out.reduced_stiffness = symmetrized(psi.transpose() * (problem.stiffness * psi));
  out.reduced_weight = symmetrized(psi.transpose() * (problem.weight * psi));
  if (psi.cols() == 0) {
    out.eigenvalues.resize(0);
    out.coefficients.resize(0, 0);
    out.vectors.resize(psi.rows(), 0);
    return out;
  }

  Eigen::SelfAdjointEigenSolver<DenseMat> weight_eig(out.reduced_weight);
  if (weight_eig.info() != Eigen::Success)
    throw NumericalError("weight eigendecomposition failed on patch " + std::to_string(problem.patch));
  const Vec& d = weight_eig.eigenvalues();
  const double cutoff = kWeightCutoff * d.cwiseAbs().maxCoeff();
  int first = 0;
  while (first < d.size() && d[first] <= cutoff) ++first;
  const int kept = static_cast<int>(d.size()) - first;
  if (kept == 0) throw NumericalError("snapshot space degenerate on patch " + std::to_string(problem.patch));

  // T maps reduced coordinates to snapshot coordinates with T^T S~ T = I.
  DenseMat t = weight_eig.eigenvectors().rightCols(kept);
  for (int k = 0; k < kept; ++k) t.col(k) /= std::sqrt(d[first + k]);
  const DenseMat reduced = symmetrized(t.transpose() * out.reduced_stiffness * t);
  Eigen::SelfAdjointEigenSolver<DenseMat> eig(reduced);
  if (eig.info() != Eigen::Success)
    throw NumericalError("spectral problem failed on patch " + std::to_string(problem.patch));

  out.eigenvalues = eig.eigenvalues();
  out.coefficients = t * eig.eigenvectors();
  out.vectors = psi * out.coefficients;
  return out;
}

double generalized_residual(const SpectralBasis& basis, int k) {
  const Vec y = basis.coefficients.col(k);
  const Vec sy = basis.reduced_weight * y;
  const Vec r = basis.reduced_stiffness * y - basis.eigenvalues[k] * sy;
  return r.norm() / sy.norm();
}

}  // namespace fracporo
