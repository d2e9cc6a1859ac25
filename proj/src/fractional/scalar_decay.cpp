#include "fracporo/fractional/scalar_decay.hpp"

#include "fracporo/errors.hpp"
#include "fracporo/fractional/l1_weights.hpp"

namespace fracporo {

std::vector<double> solve_scalar_fractional_decay(double alpha, double c, double lam, double tau, int steps) {
  if (!(c > 0.0) || lam < 0.0) throw DataError("scalar decay needs c > 0 and lam >= 0");
  if (steps < 1) throw ConfigError("scalar decay needs at least one step");
  const L1Weights w(alpha, tau, steps);
  const double cz = c * w.scale();
  std::vector<double> p{1.0};
  p.reserve(steps + 1);
  for (int n = 1; n <= steps; ++n) {
    double mem = 0.0;
    for (int j = 2; j <= n; ++j) mem += w.memory(j - 1) * (p[n - j + 1] - p[n - j]);
    p.push_back(cz * (p[n - 1] - mem) / (cz + lam));
  }
  return p;
}

}  // namespace fracporo
