#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace fracporo {

using Vec = Eigen::VectorXd;
using DenseMat = Eigen::MatrixXd;
using SpMat = Eigen::SparseMatrix<double>;
using Triplet = Eigen::Triplet<double>;

struct Point {
  double x = 0.0;
  double y = 0.0;
};

}  // namespace fracporo
