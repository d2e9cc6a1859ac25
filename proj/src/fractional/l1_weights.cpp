#include "fracporo/fractional/l1_weights.hpp"

#include <cmath>
#include <string>

#include "fracporo/errors.hpp"
#include "fracporo/fractional/gamma.hpp"

namespace fracporo {

L1Weights::L1Weights(double alpha, double tau, int n_max) : alpha_(alpha), tau_(tau) {
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw DomainError("fractional order must lie in (0, 1], got " + std::to_string(alpha));
  if (!(tau > 0.0)) throw ConfigError("time step must be positive");
  if (n_max < 1) throw ConfigError("weight table needs n_max >= 1");
  scale_ = alpha == 1.0 ? 1.0 / tau : 1.0 / (std::pow(tau, alpha) * lanczos_gamma(2.0 - alpha));
  memory_.resize(n_max);
  const double e = 1.0 - alpha;
  for (int k = 1; k <= n_max; ++k) {
    // k^e * ((1 + 1/k)^e - 1), free of cancellation for large k
    memory_[k - 1] = e == 0.0 ? 0.0 : std::pow(static_cast<double>(k), e) * std::expm1(e * std::log1p(1.0 / k));
  }
}

double L1Weights::memory(int k) const {
  if (k < 1 || k > max_index())
    throw ContractError("L1 memory weight index " + std::to_string(k) + " outside [1, " +
                        std::to_string(max_index()) + "]");
  return memory_[k - 1];
}

L1Weights l1_weights(double alpha, double tau, int n_max) { return L1Weights(alpha, tau, n_max); }

}  // namespace fracporo
