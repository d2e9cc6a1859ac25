#pragma once

#include <vector>

namespace fracporo {

/// L1 solution of c D^a p + lam p = 0, p(0) = 1 on t_n = n tau, n = 0..steps.
/// The exact solution is E_a(-(lam / c) t^a).
std::vector<double> solve_scalar_fractional_decay(double alpha, double c, double lam, double tau, int steps);

}  // namespace fracporo
