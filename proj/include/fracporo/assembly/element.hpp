#pragma once

#include <array>

#include "fracporo/types.hpp"

namespace fracporo {

// Closed-form P1 element integrals. Displacement DOFs are ordered
// (u0x, u0y, u1x, u1y, u2x, u2y).

struct P1Triangle {
  double area;
  std::array<double, 3> dphidx;
  std::array<double, 3> dphidy;
};

P1Triangle p1_triangle(const Point& a, const Point& b, const Point& c);

using Mat3 = std::array<std::array<double, 3>, 3>;
using Mat6 = std::array<std::array<double, 6>, 6>;
using Mat36 = std::array<std::array<double, 6>, 3>;
using Mat2 = std::array<std::array<double, 2>, 2>;

/// int k grad(phi_a) . grad(phi_b)
Mat3 p1_stiffness(const P1Triangle& t, double k);
/// int c phi_a phi_b
Mat3 p1_mass(const P1Triangle& t, double c);
/// int sigma(Phi_a) : eps(Phi_b), plane strain
Mat6 p1_elasticity(const P1Triangle& t, double lambda, double mu);
/// row a: pressure basis, column (b, comp): int gamma div(Phi_{b,comp}) phi_a
Mat36 p1_divergence(const P1Triangle& t, double gamma);

Mat2 edge_stiffness(double length, double k);
Mat2 edge_mass(double length, double c);

}  // namespace fracporo
