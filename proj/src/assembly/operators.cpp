#include "fracporo/assembly/operators.hpp"

#include "fracporo/errors.hpp"

namespace fracporo {

namespace {

void add_block(std::vector<Triplet>& trips, const SpMat& m, int row0, int col0, double scale) {
  if (scale == 0.0) return;
  for (int k = 0; k < m.outerSize(); ++k)
    for (SpMat::InnerIterator it(m, k); it; ++it)
      trips.emplace_back(row0 + it.row(), col0 + it.col(), scale * it.value());
}

void add_block_transposed(std::vector<Triplet>& trips, const SpMat& m, int row0, int col0, double scale) {
  for (int k = 0; k < m.outerSize(); ++k)
    for (SpMat::InnerIterator it(m, k); it; ++it)
      trips.emplace_back(row0 + it.col(), col0 + it.row(), scale * it.value());
}

void check_scales(const BiotOperators& ops, const std::vector<double>& scale) {
  if (static_cast<int>(scale.size()) != ops.num_continua())
    throw ContractError("one time scale per continuum expected");
}

void add_flow(std::vector<Triplet>& trips, const BiotOperators& ops, const std::vector<double>& pressure_scale) {
  const DofLayout& lay = ops.layout;
  for (int i = 0; i < ops.num_continua(); ++i) {
    const int o = lay.pressure_offset[i];
    add_block(trips, ops.stiffness[i], o, o, 1.0);
    add_block(trips, ops.mass[i], o, o, pressure_scale[i]);
  }
  for (const auto& ex : ops.exchanges) {
    const int oa = lay.pressure_offset[ex.first];
    const int ob = lay.pressure_offset[ex.second];
    add_block(trips, ex.diag_first, oa, oa, 1.0);
    add_block(trips, ex.diag_second, ob, ob, 1.0);
    add_block(trips, ex.off, oa, ob, -1.0);
    add_block_transposed(trips, ex.off, ob, oa, -1.0);
  }
}

}  // namespace

DofLayout DofLayout::from_sizes(const std::vector<int>& pressure_sizes, int displacement_size) {
  DofLayout lay;
  int offset = 0;
  for (int n : pressure_sizes) {
    lay.pressure_offset.push_back(offset);
    lay.pressure_size.push_back(n);
    offset += n;
  }
  lay.displacement_offset = offset;
  lay.displacement_size = displacement_size;
  return lay;
}

BiotOperators assemble_operators(const PoroModel& model, const FineMesh& mesh) {
  return assemble_operators(model, mesh, MeshScope::whole(mesh));
}

BiotOperators assemble_operators(const PoroModel& model, const FineMesh& mesh, const MeshScope& scope) {
  model.validate(mesh);
  BiotOperators ops;
  std::vector<int> sizes;
  for (const auto& spec : model.continua) {
    sizes.push_back(field_size(spec, scope));
    ops.mass.push_back(assemble_mass(spec, mesh, scope));
    ops.stiffness.push_back(spec.is_fracture() ? assemble_fracture_stiffness(spec, mesh, scope)
                                               : assemble_stiffness(spec, mesh, scope));
    ops.coupling.push_back(assemble_coupling(spec, mesh, scope));
    ops.alpha.push_back(spec.alpha);
    ops.beta.push_back(spec.beta);
  }
  ops.layout = DofLayout::from_sizes(sizes, 2 * scope.num_nodes());
  for (const auto& ex : model.exchanges) {
    ExchangeBlocks b = assemble_exchange(ex.first, ex.second, model, ex, mesh, scope);
    ops.exchanges.push_back({b.first, b.second, std::move(b.diag_first), std::move(b.diag_second), std::move(b.off)});
  }
  ops.elasticity = assemble_elasticity(model.elasticity, mesh, scope);
  return ops;
}

SpMat flow_matrix(const BiotOperators& ops, const std::vector<double>& pressure_scale) {
  check_scales(ops, pressure_scale);
  const int n = ops.layout.displacement_offset;
  std::vector<Triplet> trips;
  add_flow(trips, ops, pressure_scale);
  SpMat m(n, n);
  m.setFromTriplets(trips.begin(), trips.end());
  return m;
}

SpMat biot_matrix(const BiotOperators& ops, const std::vector<double>& pressure_scale,
                  const std::vector<double>& strain_scale) {
  check_scales(ops, pressure_scale);
  check_scales(ops, strain_scale);
  const DofLayout& lay = ops.layout;
  std::vector<Triplet> trips;
  add_flow(trips, ops, pressure_scale);
  const int ou = lay.displacement_offset;
  for (int i = 0; i < ops.num_continua(); ++i) {
    const int o = lay.pressure_offset[i];
    add_block(trips, ops.coupling[i], o, ou, strain_scale[i]);
    add_block_transposed(trips, ops.coupling[i], ou, o, 1.0);
  }
  add_block(trips, ops.elasticity, ou, ou, 1.0);
  SpMat m(lay.total(), lay.total());
  m.setFromTriplets(trips.begin(), trips.end());
  m.makeCompressed();
  return m;
}

}  // namespace fracporo
