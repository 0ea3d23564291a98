#pragma once

#include <array>
#include <functional>

#include "schlicht/series.hpp"

namespace schlicht {

/// Integrand values carried through one quadrature: f, f' and f'' channels.
using QuadValue = std::array<Complex, 3>;

struct QuadratureResult {
  QuadValue value{};
  double error = 0.0;  // estimated absolute error, max over channels
  int intervals = 0;
};

/// Globally adaptive 7/15-point Gauss-Kronrod quadrature on [a, b].
///
/// The interval with the largest error estimate is bisected until the summed
/// estimate is at most abs_tol. Throws QuadratureFailure when that does not
/// happen within max_intervals subintervals. Nodes are interior, so integrable
/// endpoint singularities are never sampled.
QuadratureResult integrate_adaptive(const std::function<QuadValue(double)>& integrand, double a, double b,
                                    double abs_tol, int max_intervals = 2000);

}  // namespace schlicht
