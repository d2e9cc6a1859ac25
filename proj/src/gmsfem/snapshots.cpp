#include "fracporo/gmsfem/snapshots.hpp"

#include <Eigen/SparseLU>
#include <algorithm>
#include <cmath>
#include <string>

#include "fracporo/errors.hpp"

namespace fracporo {

namespace {

SpMat block_diagonal(const std::vector<SpMat>& blocks, const DofLayout& layout) {
  std::vector<Triplet> trips;
  for (int i = 0; i < static_cast<int>(blocks.size()); ++i)
    for (int k = 0; k < blocks[i].outerSize(); ++k)
      for (SpMat::InnerIterator it(blocks[i], k); it; ++it)
        trips.emplace_back(layout.pressure_offset[i] + it.row(), layout.pressure_offset[i] + it.col(), it.value());
  SpMat m(layout.displacement_offset, layout.displacement_offset);
  m.setFromTriplets(trips.begin(), trips.end());
  return m;
}

SpMat select(const SpMat& a, const std::vector<int>& rows, const std::vector<int>& cols) {
  std::vector<int> rpos(a.rows(), -1), cpos(a.cols(), -1);
  for (int k = 0; k < static_cast<int>(rows.size()); ++k) rpos[rows[k]] = k;
  for (int k = 0; k < static_cast<int>(cols.size()); ++k) cpos[cols[k]] = k;
  std::vector<Triplet> trips;
  for (int k = 0; k < a.outerSize(); ++k)
    for (SpMat::InnerIterator it(a, k); it; ++it)
      if (rpos[it.row()] >= 0 && cpos[it.col()] >= 0) trips.emplace_back(rpos[it.row()], cpos[it.col()], it.value());
  SpMat m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
  m.setFromTriplets(trips.begin(), trips.end());
  return m;
}

std::vector<int> complement(int n, const std::vector<int>& taken) {
  std::vector<char> mark(n, 0);
  for (int d : taken) mark[d] = 1;
  std::vector<int> out;
  for (int d = 0; d < n; ++d)
    if (!mark[d]) out.push_back(d);
  return out;
}

}  // namespace

LocalProblem local_pressure_problem(const Patch& patch, const PoroModel& model, const FineMesh& mesh) {
  const MeshScope& scope = patch.scope;
  LocalProblem lp;
  lp.patch = patch.vertex;
  std::vector<int> sizes;
  std::vector<SpMat> stiffness, weight;
  for (const auto& spec : model.continua) {
    sizes.push_back(field_size(spec, scope));
    if (spec.is_fracture()) {
      stiffness.push_back(assemble_fracture_stiffness(spec, mesh, scope));
    } else {
      stiffness.push_back(assemble_stiffness(spec, mesh, scope));
    }
    weight.push_back(assemble_weighted_mass(spec.support, spec.permeability, mesh, scope));
  }
  lp.layout = DofLayout::from_sizes(sizes, 0);

  BiotOperators ops;
  ops.layout = lp.layout;
  ops.stiffness = std::move(stiffness);
  for (int i = 0; i < model.num_continua(); ++i) ops.mass.emplace_back(sizes[i], sizes[i]);
  for (const auto& ex : model.exchanges) {
    ExchangeBlocks b = assemble_exchange(ex.first, ex.second, model, ex, mesh, scope);
    ops.exchanges.push_back({b.first, b.second, std::move(b.diag_first), std::move(b.diag_second), std::move(b.off)});
  }
  lp.stiffness = flow_matrix(ops, std::vector<double>(model.num_continua(), 0.0));
  lp.weight = block_diagonal(weight, lp.layout);

  for (int i = 0; i < model.num_continua(); ++i) {
    const bool frac = model.continua[i].is_fracture();
    const std::vector<int> local = frac ? patch.boundary_fracture() : patch.boundary_nodes();
    for (int d : local) lp.boundary.push_back(lp.layout.pressure_offset[i] + d);
  }
  return lp;
}

LocalProblem local_displacement_problem(const Patch& patch, const PoroModel& model, const FineMesh& mesh) {
  LocalProblem lp;
  lp.patch = patch.vertex;
  lp.layout = DofLayout::from_sizes({}, 2 * patch.num_nodes());
  lp.stiffness = assemble_elasticity(model.elasticity, mesh, patch.scope);
  lp.weight = assemble_modulus_mass(model.elasticity, mesh, patch.scope);
  for (int d : patch.boundary_nodes()) {
    lp.boundary.push_back(2 * d);
    lp.boundary.push_back(2 * d + 1);
  }
  return lp;
}

SnapshotSet compute_snapshots(const LocalProblem& problem) {
  const int n = static_cast<int>(problem.stiffness.rows());
  const std::vector<int> interior = complement(n, problem.boundary);
  const int nb = static_cast<int>(problem.boundary.size());

  SnapshotSet snaps;
  snaps.patch = problem.patch;
  snaps.boundary = problem.boundary;
  snaps.vectors = DenseMat::Zero(n, nb);
  for (int k = 0; k < nb; ++k) snaps.vectors(problem.boundary[k], k) = 1.0;
  if (interior.empty() || nb == 0) return snaps;

  const SpMat a_ii = select(problem.stiffness, interior, interior);
  const SpMat a_ib = select(problem.stiffness, interior, problem.boundary);
  Eigen::SparseLU<SpMat, Eigen::COLAMDOrdering<int>> lu;
  lu.analyzePattern(a_ii);
  lu.factorize(a_ii);
  if (lu.info() != Eigen::Success)
    throw DataError("singular local problem on patch " + std::to_string(problem.patch) + ": " + lu.lastErrorMessage());
  const DenseMat rhs = -(a_ib * DenseMat::Identity(nb, nb));
  const DenseMat x = lu.solve(rhs);
  if (!x.allFinite()) throw DataError("singular local problem on patch " + std::to_string(problem.patch));
  for (int r = 0; r < static_cast<int>(interior.size()); ++r) snaps.vectors.row(interior[r]) = x.row(r);
  return snaps;
}

SnapshotSet compute_pressure_snapshots(const Patch& patch, const PoroModel& model, const FineMesh& mesh) {
  return compute_snapshots(local_pressure_problem(patch, model, mesh));
}

SnapshotSet compute_displacement_snapshots(const Patch& patch, const PoroModel& model, const FineMesh& mesh) {
  return compute_snapshots(local_displacement_problem(patch, model, mesh));
}

double snapshot_interior_residual(const LocalProblem& problem, const SnapshotSet& snaps) {
  const DenseMat r = problem.stiffness * snaps.vectors;
  std::vector<char> on_boundary(problem.stiffness.rows(), 0);
  for (int d : problem.boundary) on_boundary[d] = 1;
  const double scale = problem.stiffness.diagonal().cwiseAbs().maxCoeff();
  double worst = 0.0;
  for (int k = 0; k < snaps.count(); ++k) {
    double res = 0.0;
    for (int i = 0; i < r.rows(); ++i)
      if (!on_boundary[i]) res = std::max(res, std::abs(r(i, k)));
    worst = std::max(worst, scale > 0.0 ? res / scale : res);
  }
  return worst;
}

}  // namespace fracporo
