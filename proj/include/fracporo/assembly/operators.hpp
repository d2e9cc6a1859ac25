#pragma once

#include <vector>

#include "fracporo/assembly/assemble.hpp"

namespace fracporo {

/// Block layout of a stacked state: pressure blocks in continuum order, then
/// the displacement block (components interleaved per node on the fine grid).
struct DofLayout {
  std::vector<int> pressure_offset;
  std::vector<int> pressure_size;
  int displacement_offset = 0;
  int displacement_size = 0;

  static DofLayout from_sizes(const std::vector<int>& pressure_sizes, int displacement_size);

  int num_continua() const { return static_cast<int>(pressure_size.size()); }
  int total() const { return displacement_offset + displacement_size; }

  auto pressure(Vec& v, int i) const { return v.segment(pressure_offset[i], pressure_size[i]); }
  auto pressure(const Vec& v, int i) const { return v.segment(pressure_offset[i], pressure_size[i]); }
  auto displacement(Vec& v) const { return v.segment(displacement_offset, displacement_size); }
  auto displacement(const Vec& v) const { return v.segment(displacement_offset, displacement_size); }
};

/// One exchange pair in block form (see ExchangeBlocks).
struct ExchangeOperator {
  int first = 0;
  int second = 0;
  SpMat diag_first;
  SpMat diag_second;
  SpMat off;
};

/// Matrices of the Biot system on some discretization (fine or coarse).
struct BiotOperators {
  DofLayout layout;
  std::vector<SpMat> mass;        // storage mass per continuum
  std::vector<SpMat> stiffness;   // flow stiffness per continuum
  std::vector<SpMat> coupling;    // pressure rows x displacement columns
  std::vector<ExchangeOperator> exchanges;
  SpMat elasticity;
  std::vector<double> alpha;      // order on pressure history per continuum
  std::vector<double> beta;       // order on strain history per continuum

  int num_continua() const { return layout.num_continua(); }
};

/// Fine-grid operators on the whole mesh.
BiotOperators assemble_operators(const PoroModel& model, const FineMesh& mesh);

/// Same on a scope (patch-local numbering).
BiotOperators assemble_operators(const PoroModel& model, const FineMesh& mesh, const MeshScope& scope);

/// Stacked left-hand matrix
///
///   [ zeta_a,i M_i + A_i + sum Q_ii   -Q_ij   zeta_b,i D_i ]
///   [ D_j^T ...                               A_u          ]
///
/// given the per-continuum scales of the pressure and strain histories.
SpMat biot_matrix(const BiotOperators& ops, const std::vector<double>& pressure_scale,
                  const std::vector<double>& strain_scale);

/// Flow part only: A_i + exchange terms + scale_i M_i, without displacement.
SpMat flow_matrix(const BiotOperators& ops, const std::vector<double>& pressure_scale);

}  // namespace fracporo
