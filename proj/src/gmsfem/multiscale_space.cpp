#include "fracporo/gmsfem/multiscale_space.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fracporo/errors.hpp"
#include "fracporo/parallel.hpp"

namespace fracporo {

namespace {

struct PatchResult {
  PatchBasis basis;
  SpectralDiagnostics diag;
};

void check_basis(const SpectralBasis& sb, int keep, SpectralDiagnostics& diag) {
  const double top = sb.eigenvalues.cwiseAbs().maxCoeff();
  const double scale = top > 0.0 ? top : 1.0;
  diag.min_relative_eigenvalue = std::min(diag.min_relative_eigenvalue, sb.eigenvalues.minCoeff() / scale);
  for (int k = 0; k < keep; ++k) {
    diag.max_residual = std::max(diag.max_residual, generalized_residual(sb, k));
    const Vec y = sb.coefficients.col(k);
    diag.max_normalization_error =
        std::max(diag.max_normalization_error, std::abs(y.dot(sb.reduced_weight * y) - 1.0));
  }
}

PatchResult solve_patch(const Patch& patch, const PoroModel& model, const FineMesh& mesh, int keep) {
  PatchResult out;
  out.basis.patch = patch.vertex;

  const LocalProblem lp = local_pressure_problem(patch, model, mesh);
  const SnapshotSet ps = compute_snapshots(lp);
  const SpectralBasis pb = solve_spectral_problem(lp, ps);
  if (pb.count() < keep)
    throw ConfigError("patch " + std::to_string(patch.vertex) + " has " + std::to_string(pb.count()) +
                      " pressure eigenpairs, fewer than the requested " + std::to_string(keep));
  check_basis(pb, keep, out.diag);
  out.diag.max_snapshot_residual = snapshot_interior_residual(lp, ps);

  const bool interior = patch.cells.size() == 4;
  if (interior) {
    const Vec ones = Vec::Ones(ps.count());
    const double quotient = ones.dot(pb.reduced_stiffness * ones) / ones.dot(pb.reduced_weight * ones);
    const double top = pb.eigenvalues.cwiseAbs().maxCoeff();
    out.diag.max_constant_quotient = std::abs(quotient) / top;
    if (std::abs(pb.eigenvalues[0]) > 1e-10 * top) out.diag.interior_patches_without_zero_mode = 1;
  }

  const LocalProblem lu = local_displacement_problem(patch, model, mesh);
  const SnapshotSet us = compute_snapshots(lu);
  const SpectralBasis ub = solve_spectral_problem(lu, us);
  if (ub.count() < keep)
    throw ConfigError("patch " + std::to_string(patch.vertex) + " has " + std::to_string(ub.count()) +
                      " displacement eigenpairs, fewer than the requested " + std::to_string(keep));
  check_basis(ub, keep, out.diag);
  out.diag.max_snapshot_residual = std::max(out.diag.max_snapshot_residual, snapshot_interior_residual(lu, us));

  out.basis.pressure_layout = lp.layout;
  out.basis.pressure_eigenvalues = pb.eigenvalues.head(keep);
  out.basis.pressure = pb.vectors.leftCols(keep);
  out.basis.displacement_eigenvalues = ub.eigenvalues.head(keep);
  out.basis.displacement = ub.vectors.leftCols(keep);
  return out;
}

}  // namespace

PatchBases compute_patch_bases(const std::vector<Patch>& patches, const PoroModel& model, const FineMesh& mesh,
                               int keep, int threads) {
  if (keep < 1) throw ConfigError("basis count must be at least 1");
  model.validate(mesh);
  const int n = static_cast<int>(patches.size());
  std::vector<PatchResult> results(n);
  parallel_for(n, threads, [&](int l) { results[l] = solve_patch(patches[l], model, mesh, keep); });

  PatchBases out;
  for (auto& r : results) {
    SpectralDiagnostics& d = out.diagnostics;
    d.max_residual = std::max(d.max_residual, r.diag.max_residual);
    d.min_relative_eigenvalue = std::min(d.min_relative_eigenvalue, r.diag.min_relative_eigenvalue);
    d.max_normalization_error = std::max(d.max_normalization_error, r.diag.max_normalization_error);
    d.max_constant_quotient = std::max(d.max_constant_quotient, r.diag.max_constant_quotient);
    d.max_snapshot_residual = std::max(d.max_snapshot_residual, r.diag.max_snapshot_residual);
    d.interior_patches_without_zero_mode += r.diag.interior_patches_without_zero_mode;
    out.patches.push_back(std::move(r.basis));
  }
  return out;
}

std::vector<int> independent_rows(const SpMat& rows, double tol) {
  const int n = static_cast<int>(rows.rows());
  const DenseMat gram = DenseMat(rows * rows.transpose());
  std::vector<int> kept;
  DenseMat chol = DenseMat::Zero(n, n);  // lower factor of the Gram matrix of kept rows
  Vec g(n);
  for (int k = 0; k < n; ++k) {
    const double gkk = gram(k, k);
    if (!(gkk > 0.0)) continue;
    const int m = static_cast<int>(kept.size());
    for (int j = 0; j < m; ++j) g[j] = gram(kept[j], k);
    Vec x = g.head(m);
    if (m > 0) chol.topLeftCorner(m, m).triangularView<Eigen::Lower>().solveInPlace(x);
    const double residual = gkk - x.squaredNorm();
    if (residual <= tol * gkk) continue;
    chol.row(m).head(m) = x.transpose();
    chol(m, m) = std::sqrt(residual);
    kept.push_back(k);
  }
  return kept;
}

MultiscaleSpace::MultiscaleSpace(std::vector<SpMat> rows, int basis_per_vertex, int num_vertices)
    : rows_(std::move(rows)), per_vertex_(basis_per_vertex), num_vertices_(num_vertices) {
  for (const auto& r : rows_)
    if (r.rows() != static_cast<Eigen::Index>(per_vertex_) * num_vertices_)
      throw ContractError("basis block has the wrong number of rows");
  select_rows();
}

void MultiscaleSpace::select_rows() {
  projection_.clear();
  selected_.clear();
  for (const auto& r : rows_) {
    selected_.push_back(independent_rows(r));
    const auto& sel = selected_.back();
    SpMat pick(static_cast<Eigen::Index>(sel.size()), r.rows());
    std::vector<Triplet> trips;
    for (int k = 0; k < static_cast<int>(sel.size()); ++k) trips.emplace_back(k, sel[k], 1.0);
    pick.setFromTriplets(trips.begin(), trips.end());
    projection_.push_back(pick * r);
    projection_.back().makeCompressed();
  }
}

int MultiscaleSpace::effective_dofs() const {
  int total = 0;
  for (const auto& s : selected_) total += static_cast<int>(s.size());
  return total;
}

DofLayout MultiscaleSpace::coarse_layout() const {
  std::vector<int> sizes;
  for (int b = 0; b < num_continua(); ++b) sizes.push_back(static_cast<int>(selected_[b].size()));
  return DofLayout::from_sizes(sizes, static_cast<int>(selected_.back().size()));
}

MultiscaleSpace MultiscaleSpace::truncate(int basis_per_vertex) const {
  if (basis_per_vertex < 1 || basis_per_vertex > per_vertex_)
    throw ConfigError("cannot truncate to " + std::to_string(basis_per_vertex) + " basis functions per vertex");
  const int limit = basis_per_vertex * num_vertices_;
  MultiscaleSpace out;
  out.per_vertex_ = basis_per_vertex;
  out.num_vertices_ = num_vertices_;
  for (int b = 0; b < num_blocks(); ++b) {
    out.rows_.push_back(rows_[b].topRows(limit));
    std::vector<int> sel;
    for (int r : selected_[b])
      if (r < limit) sel.push_back(r);
    const int count = static_cast<int>(sel.size());
    out.selected_.push_back(std::move(sel));
    out.projection_.push_back(projection_[b].topRows(count));
  }
  return out;
}

MultiscaleSpace build_multiscale_space(const PatchBases& bases, const std::vector<Patch>& patches,
                                       const PartitionOfUnity& pou, const PoroModel& model,
                                       const DofLayout& fine_layout, const ConstraintSet& constraints,
                                       int basis_per_vertex) {
  if (!constraints.homogeneous())
    throw ConfigError("the multiscale space supports homogeneous Dirichlet conditions only");
  const int nv = static_cast<int>(patches.size());
  if (static_cast<int>(bases.patches.size()) != nv || pou.num_patches() != nv)
    throw ContractError("one basis and one partition function per patch expected");
  const int m = basis_per_vertex;
  for (const auto& pb : bases.patches)
    if (pb.pressure.cols() < m || pb.displacement.cols() < m)
      throw ConfigError("requested " + std::to_string(m) + " basis functions per vertex, only " +
                        std::to_string(std::min(pb.pressure.cols(), pb.displacement.cols())) + " available");

  const int nc = model.num_continua();
  const std::vector<char> fixed = constraints.mask(fine_layout.total());
  std::vector<std::vector<Triplet>> trips(nc + 1);

  for (int j = 0; j < m; ++j) {
    for (int l = 0; l < nv; ++l) {
      const Patch& patch = patches[l];
      const PatchBasis& pb = bases.patches[l];
      const int row = j * nv + l;
      const auto& chi_nodes = pou.node_values(l);
      const auto& chi_frac = pou.fracture_values(l);
      for (int i = 0; i < nc; ++i) {
        const bool frac = model.continua[i].is_fracture();
        const int off = pb.pressure_layout.pressure_offset[i];
        const int size = pb.pressure_layout.pressure_size[i];
        for (int a = 0; a < size; ++a) {
          const int global = frac ? patch.scope.fracture_dofs[a] : patch.scope.nodes[a];
          if (fixed[fine_layout.pressure_offset[i] + global]) continue;
          const double v = (frac ? chi_frac[a] : chi_nodes[a]) * pb.pressure(off + a, j);
          if (v != 0.0) trips[i].emplace_back(row, global, v);
        }
      }
      for (int a = 0; a < patch.num_nodes(); ++a)
        for (int c = 0; c < 2; ++c) {
          const int global = 2 * patch.scope.nodes[a] + c;
          if (fixed[fine_layout.displacement_offset + global]) continue;
          const double v = chi_nodes[a] * pb.displacement(2 * a + c, j);
          if (v != 0.0) trips[nc].emplace_back(row, global, v);
        }
    }
  }

  std::vector<SpMat> rows;
  for (int b = 0; b <= nc; ++b) {
    const int cols = b < nc ? fine_layout.pressure_size[b] : fine_layout.displacement_size;
    SpMat r(m * nv, cols);
    r.setFromTriplets(trips[b].begin(), trips[b].end());
    r.makeCompressed();
    rows.push_back(std::move(r));
  }
  return MultiscaleSpace(std::move(rows), m, nv);
}

}  // namespace fracporo
