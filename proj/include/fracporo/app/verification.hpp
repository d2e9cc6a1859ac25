#pragma once

#include <vector>

#include "fracporo/mesh/fine_mesh.hpp"

namespace fracporo {

/// L1 scheme on c D^a p + lam p = 0, p(0) = 1, against the Mittag-Leffler
/// solution at the final time, for several step counts.
struct DecayStudy {
  double alpha = 1.0;
  std::vector<int> steps;
  std::vector<double> errors;  // |p^N - E_a(-(lam/c) T^a)|
  std::vector<double> orders;  // log2(e_k / e_{k+1}), assumes doubling step counts
};

DecayStudy fractional_decay_study(double alpha, double c, double lam, double final_time, const std::vector<int>& steps);

/// Manufactured solution p = t x, u = (t x, 0) with first-order time
/// derivatives, constant coefficients and Dirichlet data on the whole
/// boundary. Returns the largest nodal error over all steps.
double manufactured_solution_error(const FineMesh& mesh, int steps, double final_time);

}  // namespace fracporo
