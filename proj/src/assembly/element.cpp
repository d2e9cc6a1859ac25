#include "fracporo/assembly/element.hpp"

namespace fracporo {

P1Triangle p1_triangle(const Point& a, const Point& b, const Point& c) {
  const double det = (b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y);
  P1Triangle t;
  t.area = 0.5 * det;
  t.dphidx = {(b.y - c.y) / det, (c.y - a.y) / det, (a.y - b.y) / det};
  t.dphidy = {(c.x - b.x) / det, (a.x - c.x) / det, (b.x - a.x) / det};
  return t;
}

Mat3 p1_stiffness(const P1Triangle& t, double k) {
  Mat3 m{};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) m[a][b] = k * t.area * (t.dphidx[a] * t.dphidx[b] + t.dphidy[a] * t.dphidy[b]);
  return m;
}

Mat3 p1_mass(const P1Triangle& t, double c) {
  Mat3 m{};
  const double off = c * t.area / 12.0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) m[a][b] = a == b ? 2.0 * off : off;
  return m;
}

Mat6 p1_elasticity(const P1Triangle& t, double lambda, double mu) {
  // strain rows (exx, eyy, gxy) of each of the six DOFs
  double B[3][6] = {};
  for (int a = 0; a < 3; ++a) {
    B[0][2 * a] = t.dphidx[a];
    B[1][2 * a + 1] = t.dphidy[a];
    B[2][2 * a] = t.dphidy[a];
    B[2][2 * a + 1] = t.dphidx[a];
  }
  const double C[3][3] = {{lambda + 2.0 * mu, lambda, 0.0}, {lambda, lambda + 2.0 * mu, 0.0}, {0.0, 0.0, mu}};
  Mat6 k{};
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      double s = 0.0;
      for (int p = 0; p < 3; ++p)
        for (int q = 0; q < 3; ++q) s += B[p][i] * C[p][q] * B[q][j];
      k[i][j] = t.area * s;
    }
  return k;
}

Mat36 p1_divergence(const P1Triangle& t, double gamma) {
  Mat36 d{};
  const double w = gamma * t.area / 3.0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      d[a][2 * b] = w * t.dphidx[b];
      d[a][2 * b + 1] = w * t.dphidy[b];
    }
  return d;
}

Mat2 edge_stiffness(double length, double k) {
  const double s = k / length;
  return {{{s, -s}, {-s, s}}};
}

Mat2 edge_mass(double length, double c) {
  const double s = c * length / 6.0;
  return {{{2.0 * s, s}, {s, 2.0 * s}}};
}

}  // namespace fracporo
