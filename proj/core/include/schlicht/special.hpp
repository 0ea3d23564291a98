#pragma once

namespace schlicht {

/// Gamma function for real arguments via the Lanczos approximation (g = 7, 9 terms),
/// with reflection below 1/2. Relative error is below 1e-13 away from the poles.
double lanczos_gamma(double x);

}  // namespace schlicht
