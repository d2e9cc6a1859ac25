#include "fracporo/analysis/errors.hpp"

#include <cmath>

#include "fracporo/errors.hpp"

namespace fracporo {

double weighted_norm(const Vec& v, const SpMat& weight) {
  if (weight.rows() != v.size() || weight.cols() != v.size()) throw ContractError("weight matrix size mismatch");
  const double q = v.dot(weight * v);
  return q > 0.0 ? std::sqrt(q) : 0.0;
}

std::optional<double> relative_l2_error(const Vec& y, const Vec& y_ms, const SpMat& weight) {
  if (y.size() != y_ms.size()) throw ContractError("fields have different sizes");
  const double ref = weighted_norm(y, weight);
  if (!(ref > 0.0)) return std::nullopt;
  return 100.0 * weighted_norm(y - y_ms, weight) / ref;
}

std::optional<double> relative_energy_error(const Vec& y, const Vec& y_ms, const SpMat& energy) {
  return relative_l2_error(y, y_ms, energy);
}

}  // namespace fracporo
