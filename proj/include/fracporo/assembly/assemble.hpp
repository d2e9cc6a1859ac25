#pragma once

#include <vector>

#include "fracporo/assembly/model.hpp"
#include "fracporo/mesh/scope.hpp"
#include "fracporo/types.hpp"

namespace fracporo {

// Assemblers work on a MeshScope so the same code builds global matrices
// (MeshScope::whole) and patch-local ones. Row/column indices are scope-local:
// nodes for bulk fields, fracture DOFs for the fracture field, and
// 2 * node + component for displacement. Triplets are merged in element order,
// which makes every matrix bitwise reproducible.

/// Bulk stiffness int k grad(phi_l) . grad(phi_n). Throws DataError if k <= 0.
SpMat assemble_stiffness(const ContinuumSpec& spec, const FineMesh& mesh, const MeshScope& scope);

/// 1D stiffness along fracture edges, k constant per edge.
SpMat assemble_fracture_stiffness(const ContinuumSpec& spec, const FineMesh& mesh, const MeshScope& scope);

/// Consistent mass weighted by the storage coefficient c (bulk or fracture by support).
SpMat assemble_mass(const ContinuumSpec& spec, const FineMesh& mesh, const MeshScope& scope);

/// Consistent mass with an arbitrary nonnegative per-element weight.
SpMat assemble_weighted_mass(Support support, const std::vector<double>& weight, const FineMesh& mesh,
                             const MeshScope& scope);

/// Same with unit weight.
SpMat assemble_plain_mass(Support support, const FineMesh& mesh, const MeshScope& scope);

/// int gamma div(Phi) phi: rows pressure DOFs, columns displacement DOFs.
/// Fracture continua must have gamma == 0 and yield an empty (zero) block.
SpMat assemble_coupling(const ContinuumSpec& spec, const FineMesh& mesh, const MeshScope& scope);

/// int sigma(Phi_l) : eps(Phi_n) in plane strain. Throws DataError for invalid E, nu.
SpMat assemble_elasticity(const ElasticitySpec& spec, const FineMesh& mesh, const MeshScope& scope);

/// Vector mass with weight w per triangle (same weight on both components).
SpMat assemble_vector_mass(const std::vector<double>& weight, const FineMesh& mesh, const MeshScope& scope);

/// (lambda + 2 mu)-weighted vector mass.
SpMat assemble_modulus_mass(const ElasticitySpec& spec, const FineMesh& mesh, const MeshScope& scope);

/// Exchange term int eta phi_l phi_n between two continua.
///
/// For the flow row of `first` the contribution is diag_first * p_first - off * p_second;
/// for `second` it is diag_second * p_second - off^T * p_first. Bulk-bulk pairs integrate
/// over triangles (all three blocks equal the eta-weighted mass); bulk-fracture pairs
/// integrate along fracture edges, linking the bulk trace DOFs with co-located fracture DOFs.
struct ExchangeBlocks {
  int first = 0;
  int second = 0;
  SpMat diag_first;
  SpMat diag_second;
  SpMat off;  // rows: first, columns: second
};

ExchangeBlocks assemble_exchange(int first, int second, const PoroModel& model, const ExchangeSpec& exchange,
                                 const FineMesh& mesh, const MeshScope& scope);

/// Number of scope-local DOFs of a continuum.
int field_size(const ContinuumSpec& spec, const MeshScope& scope);

}  // namespace fracporo
