#pragma once

#include <vector>

#include "fracporo/assembly/boundary.hpp"
#include "fracporo/gmsfem/spectral.hpp"
#include "fracporo/mesh/partition_of_unity.hpp"

namespace fracporo {

/// Checks gathered while the local spectral problems are solved.
struct SpectralDiagnostics {
  double max_residual = 0.0;            // generalized eigen residual over retained pairs
  double min_relative_eigenvalue = 0.0; // min lambda / max |lambda| over all pairs
  double max_normalization_error = 0.0; // | y^T S~ y - 1 | over retained pairs
  double max_constant_quotient = 0.0;   // interior patches: Rayleigh quotient of the constant / max lambda
  double max_snapshot_residual = 0.0;
  int interior_patches_without_zero_mode = 0;
};

/// Retained eigenvectors of one patch, on patch-local DOFs.
struct PatchBasis {
  int patch = -1;
  DofLayout pressure_layout;
  Vec pressure_eigenvalues;
  DenseMat pressure;      // stacked continuum blocks, one column per eigenvector
  Vec displacement_eigenvalues;
  DenseMat displacement;  // interleaved components
};

struct PatchBases {
  std::vector<PatchBasis> patches;
  SpectralDiagnostics diagnostics;
};

/// Snapshots and spectral problems on every patch, keeping the `keep`
/// smallest eigenpairs. Patches are distributed over `threads` workers;
/// the result does not depend on the thread count. Throws ConfigError if a
/// patch has fewer than `keep` eigenpairs.
PatchBases compute_patch_bases(const std::vector<Patch>& patches, const PoroModel& model, const FineMesh& mesh,
                               int keep, int threads = 1);

/// Coarse space: for every block (each continuum, then displacement) a matrix
/// whose rows are basis functions on the fine DOFs of that block.
///
/// Row r = j * N_v + l holds chi^l times eigenvector j of patch l, restricted
/// to the block. Rows are zero at fine DOFs with a (homogeneous) Dirichlet
/// condition. Rows that are linearly dependent on earlier rows are not
/// selected; this keeps the coarse system nonsingular where a block is empty
/// or degenerate on some patches (fracture blocks).
class MultiscaleSpace {
 public:
  MultiscaleSpace() = default;
  MultiscaleSpace(std::vector<SpMat> rows, int basis_per_vertex, int num_vertices);

  int basis_per_vertex() const { return per_vertex_; }
  int num_vertices() const { return num_vertices_; }
  int num_blocks() const { return static_cast<int>(rows_.size()); }
  int num_continua() const { return num_blocks() - 1; }
  /// (continua + 1) * M * N_v
  int nominal_dofs() const { return num_blocks() * per_vertex_ * num_vertices_; }
  /// Number of selected rows over all blocks.
  int effective_dofs() const;

  /// Full (unselected) rows of block b.
  const SpMat& rows(int b) const { return rows_[b]; }
  /// Selected rows of block b: the projection used by the coarse system.
  const SpMat& projection(int b) const { return projection_[b]; }
  const std::vector<int>& selected(int b) const { return selected_[b]; }
  DofLayout coarse_layout() const;

  /// Space with M' <= M basis functions per vertex. Identical to building
  /// with M' directly since rows are ordered by eigenvector index.
  MultiscaleSpace truncate(int basis_per_vertex) const;

 private:
  void select_rows();

  std::vector<SpMat> rows_;
  std::vector<SpMat> projection_;
  std::vector<std::vector<int>> selected_;
  int per_vertex_ = 0;
  int num_vertices_ = 0;
};

/// Assembles the POU-multiplied basis with M functions per vertex.
/// `constraints` are fine-layout Dirichlet DOFs and must be homogeneous.
MultiscaleSpace build_multiscale_space(const PatchBases& bases, const std::vector<Patch>& patches,
                                       const PartitionOfUnity& pou, const PoroModel& model,
                                       const DofLayout& fine_layout, const ConstraintSet& constraints,
                                       int basis_per_vertex);

/// Indices of rows kept by a greedy Cholesky pass over the Gram matrix
/// R R^T: row k is dropped when its squared distance to the span of the kept
/// rows is at most tol * |row k|^2.
std::vector<int> independent_rows(const SpMat& rows, double tol = 1e-10);

}  // namespace fracporo
