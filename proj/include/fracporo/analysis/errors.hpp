#pragma once

#include <optional>

#include "fracporo/types.hpp"

namespace fracporo {

/// 100 * sqrt((y - y_ms)^T W (y - y_ms) / y^T W y). Empty when the reference
/// has zero W-norm (the relative error is undefined).
std::optional<double> relative_l2_error(const Vec& y, const Vec& y_ms, const SpMat& weight);

/// Same formula with an energy matrix (stiffness or elasticity); kept as a
/// separate name since W may be only semidefinite.
std::optional<double> relative_energy_error(const Vec& y, const Vec& y_ms, const SpMat& energy);

/// sqrt(v^T W v), with negative round-off clamped to 0.
double weighted_norm(const Vec& v, const SpMat& weight);

}  // namespace fracporo
