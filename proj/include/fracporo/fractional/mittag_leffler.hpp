#pragma once

namespace fracporo {

/// One-parameter Mittag-Leffler function E_a(z) for 0 < a <= 1 and z <= 0.
///
/// Uses the power series while |z|^{1/a} <= 10 (stopping once a term falls
/// below 1e-16 of the partial sum, at most 500 terms) and otherwise the
/// Laplace-type integral
///   E_a(-x) = sin(a pi)/(a pi) * int_0^inf exp(-x s^{1/a}) / (s^2 + 2 s cos(a pi) + 1) ds
/// by adaptive Gauss-Kronrod quadrature. a == 1 returns exp(z).
/// Absolute accuracy is around 1e-12 for |z| <= 50.
double mittag_leffler(double alpha, double z);

}  // namespace fracporo
