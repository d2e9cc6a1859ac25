#pragma once

#include <vector>

#include "fracporo/mesh/patch.hpp"

namespace fracporo {

/// Bilinear coarse hat functions chi^l sampled at the fine nodes of each patch.
class PartitionOfUnity {
 public:
  PartitionOfUnity(const CoarseGrid& grid, const FineMesh& mesh, const std::vector<Patch>& patches);

  int num_patches() const { return static_cast<int>(node_values_.size()); }
  /// chi^l at the local nodes of patch l
  const std::vector<double>& node_values(int l) const { return node_values_[l]; }
  /// chi^l at the local fracture DOFs of patch l
  const std::vector<double>& fracture_values(int l) const { return fracture_values_[l]; }

  /// max_k |sum_l chi^l(x_k) - 1| over all fine nodes
  double max_sum_deviation(const FineMesh& mesh, const std::vector<Patch>& patches) const;

 private:
  std::vector<std::vector<double>> node_values_;
  std::vector<std::vector<double>> fracture_values_;
};

PartitionOfUnity partition_of_unity(const CoarseGrid& grid, const FineMesh& mesh, const std::vector<Patch>& patches);

}  // namespace fracporo
