#pragma once

#include <vector>

#include "fracporo/types.hpp"

namespace fracporo {

/// Coefficients of the L1 approximation of the Caputo derivative on a uniform
/// time grid:
///
///   D^a v(t_n) ~ scale * [ (v^n - v^{n-1}) + sum_{j=2}^{n} w_{j-1} (v^{n-j+1} - v^{n-j}) ]
///
/// with scale = 1 / (tau^a Gamma(2 - a)) and w_k = (k+1)^{1-a} - k^{1-a}.
class L1Weights {
 public:
  /// Precomputes w_1 .. w_{n_max}. Throws DomainError unless 0 < alpha <= 1,
  /// ConfigError unless tau > 0 and n_max >= 1.
  L1Weights(double alpha, double tau, int n_max);

  double alpha() const { return alpha_; }
  double tau() const { return tau_; }
  /// 1 / (tau^alpha Gamma(2 - alpha))
  double scale() const { return scale_; }
  int max_index() const { return static_cast<int>(memory_.size()); }
  /// w_k for 1 <= k <= max_index(); all zero when alpha == 1.
  double memory(int k) const;

 private:
  double alpha_;
  double tau_;
  double scale_;
  std::vector<double> memory_;
};

L1Weights l1_weights(double alpha, double tau, int n_max);

}  // namespace fracporo
