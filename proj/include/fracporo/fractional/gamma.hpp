#pragma once

namespace fracporo {

/// Gamma function via the Lanczos approximation (g = 7, 9 terms) with the
/// reflection formula below 1/2. Relative error is a few ulps on (0, 3].
double lanczos_gamma(double x);

}  // namespace fracporo
