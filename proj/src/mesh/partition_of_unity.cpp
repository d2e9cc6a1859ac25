#include "fracporo/mesh/partition_of_unity.hpp"

#include <algorithm>
#include <cmath>

namespace fracporo {

PartitionOfUnity::PartitionOfUnity(const CoarseGrid& grid, const FineMesh& mesh, const std::vector<Patch>& patches) {
  node_values_.resize(patches.size());
  fracture_values_.resize(patches.size());
  for (std::size_t l = 0; l < patches.size(); ++l) {
    const Patch& p = patches[l];
    auto& nv = node_values_[l];
    nv.resize(p.num_nodes());
    for (int i = 0; i < p.num_nodes(); ++i) nv[i] = grid.hat(p.vertex, mesh.node(p.scope.nodes[i]));
    auto& fv = fracture_values_[l];
    fv.resize(p.num_fracture());
    for (int i = 0; i < p.num_fracture(); ++i)
      fv[i] = grid.hat(p.vertex, mesh.node(mesh.fracture_nodes()[p.scope.fracture_dofs[i]]));
  }
}

double PartitionOfUnity::max_sum_deviation(const FineMesh& mesh, const std::vector<Patch>& patches) const {
  std::vector<double> sum(mesh.num_nodes(), 0.0);
  for (std::size_t l = 0; l < patches.size(); ++l)
    for (int i = 0; i < patches[l].num_nodes(); ++i) sum[patches[l].scope.nodes[i]] += node_values_[l][i];
  double worst = 0.0;
  for (double s : sum) worst = std::max(worst, std::abs(s - 1.0));
  return worst;
}

PartitionOfUnity partition_of_unity(const CoarseGrid& grid, const FineMesh& mesh, const std::vector<Patch>& patches) {
  return PartitionOfUnity(grid, mesh, patches);
}

}  // namespace fracporo
