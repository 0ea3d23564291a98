#pragma once

#include <vector>

#include "schlicht/function.hpp"
#include "schlicht/series.hpp"

namespace schlicht {

/// Concentric circles |z| = r_i sampled at M equispaced angles 2 pi k / M.
struct DiskGrid {
  std::vector<double> radii;
  int angles_per_radius = 256;

  /// Radii {0.1, 0.3, 0.5, 0.7, 0.85, 0.95}, 256 angles each.
  static DiskGrid default_grid();

  /// Throws InvalidParameter unless radii ascend inside (0, 0.999] and M >= 8.
  void validate() const;

  std::size_t size() const noexcept { return radii.size() * static_cast<std::size_t>(angles_per_radius); }
  Complex point(std::size_t radius_index, int angle_index) const;

  /// Superset grid for refinement level L: angles * 2^L and L extra radii,
  /// each halfway between the previous outermost radius and 1 (capped at 0.999).
  DiskGrid refined(int level) const;

  friend bool operator==(const DiskGrid&, const DiskGrid&) = default;
};

struct EvalOptions {
  int series_order = 64;      // starting order for operator-applied functions
  int max_series_order = 4096;
};

/// f, z f', z^2 f'' on every grid point, radius-major.
struct GridSamples {
  std::vector<Complex> z;
  std::vector<Complex> f;
  std::vector<Complex> zf1;
  std::vector<Complex> z2f2;
  std::vector<bool> radius_reliable;
  int series_order = 0;  // 0 when evaluated pointwise from a closed form
};

/// Evaluates f over the grid. Polynomials and series go through per-circle
/// FFTs; operator-applied functions go through the multiplier path with the
/// series order doubled until the tail estimates at the outermost radius are
/// below kEvaluationTolerance (or max_series_order is hit); other closed forms
/// are evaluated pointwise.
GridSamples sample_on_grid(const AnalyticFunction& f, const DiskGrid& grid, const EvalOptions& options = {});

/// z f' as a function: exact for polynomials, otherwise a series of the given order.
AnalyticFunction z_derivative_of(const AnalyticFunction& f, int order);

}  // namespace schlicht
