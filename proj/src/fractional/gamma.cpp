#include "fracporo/fractional/gamma.hpp"

#include <cmath>
#include <numbers>

#include "fracporo/errors.hpp"

namespace fracporo {

double lanczos_gamma(double x) {
  static constexpr double kG = 7.0;
  static constexpr double kCoef[9] = {0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
                                      771.32342877765313,   -176.61502916214059,   12.507343278686905,
                                      -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  if (x <= 0.0 && x == std::floor(x)) throw DomainError("gamma function pole at non-positive integer");
  if (x < 0.5) return std::numbers::pi / (std::sin(std::numbers::pi * x) * lanczos_gamma(1.0 - x));
  x -= 1.0;
  double a = kCoef[0];
  const double t = x + kG + 0.5;
  for (int i = 1; i < 9; ++i) a += kCoef[i] / (x + i);
  return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, x + 0.5) * std::exp(-t) * a;
}

}  // namespace fracporo
