#include "schlicht/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "schlicht/error.hpp"

namespace schlicht {

DiskGrid DiskGrid::default_grid() { return DiskGrid{{0.1, 0.3, 0.5, 0.7, 0.85, 0.95}, 256}; }

void DiskGrid::validate() const {
  if (radii.empty()) throw InvalidParameter("grid needs at least one radius");
  if (angles_per_radius < 8) throw InvalidParameter("grid needs at least 8 angles per radius");
  double prev = 0.0;
  for (double r : radii) {
    if (!(r > prev)) throw InvalidParameter("grid radii must be positive and strictly ascending");
    prev = r;
  }
  if (radii.back() > 1.0 - kEvalGuard) throw InvalidParameter("grid radii must not exceed 0.999");
}

Complex DiskGrid::point(std::size_t radius_index, int angle_index) const {
  return std::polar(radii.at(radius_index),
                    2.0 * std::numbers::pi * static_cast<double>(angle_index) / angles_per_radius);
}

DiskGrid DiskGrid::refined(int level) const {
  DiskGrid g = *this;
  for (int l = 0; l < level; ++l) {
    g.angles_per_radius *= 2;
    const double outer = g.radii.back();
    const double next = std::min(1.0 - kEvalGuard, outer + 0.5 * (1.0 - outer));
    if (next > outer) g.radii.push_back(next);
  }
  return g;
}

namespace {

bool tails_ok(const Series& s, double radius) {
  for (int k = 0; k <= 2; ++k) {
    if (tail_bound(s, radius, k).bound > kEvaluationTolerance) return false;
  }
  return true;
}

void fill_from_series(GridSamples& out, const Series& s, const DiskGrid& grid, bool exact) {
  out.series_order = s.order();
  for (std::size_t i = 0; i < grid.radii.size(); ++i) {
    const double r = grid.radii[i];
    CircleValues cv = evaluate_on_circle(s, r, grid.angles_per_radius);
    out.f.insert(out.f.end(), cv.f.begin(), cv.f.end());
    out.zf1.insert(out.zf1.end(), cv.zf1.begin(), cv.zf1.end());
    out.z2f2.insert(out.z2f2.end(), cv.z2f2.begin(), cv.z2f2.end());
    out.radius_reliable.push_back(r <= 1.0 - kEvalGuard && (exact || tails_ok(s, r)));
  }
}

}  // namespace

GridSamples sample_on_grid(const AnalyticFunction& f, const DiskGrid& grid, const EvalOptions& options) {
  grid.validate();
  GridSamples out;
  out.z.reserve(grid.size());
  for (std::size_t i = 0; i < grid.radii.size(); ++i) {
    for (int k = 0; k < grid.angles_per_radius; ++k) out.z.push_back(grid.point(i, k));
  }

  if (f.is_polynomial()) {
    fill_from_series(out, f.to_series(std::max(1, f.polynomial_degree())), grid, true);
    return out;
  }
  if (f.backend() == AnalyticFunction::Backend::series) {
    fill_from_series(out, f.stored_series(), grid, false);
    return out;
  }
  if (f.backend() == AnalyticFunction::Backend::operator_applied) {
    const double outer = grid.radii.back();
    int order = std::max(2, options.series_order);
    Series s = f.to_series(order);
    while (!tails_ok(s, outer) && order * 2 <= options.max_series_order) {
      order *= 2;
      Series next = f.to_series(order);
      if (next.order() <= s.order()) break;  // stored series underneath; cannot grow
      s = std::move(next);
    }
    fill_from_series(out, s, grid, false);
    return out;
  }

  out.f.reserve(grid.size());
  out.zf1.reserve(grid.size());
  out.z2f2.reserve(grid.size());
  std::size_t idx = 0;
  for (std::size_t i = 0; i < grid.radii.size(); ++i) {
    bool ok = true;
    for (int k = 0; k < grid.angles_per_radius; ++k, ++idx) {
      const Complex z = out.z[idx];
      const Triple t = f.eval_triple(z);
      ok = ok && t.reliable;
      out.f.push_back(t.f);
      out.zf1.push_back(z * t.d1);
      out.z2f2.push_back(z * z * t.d2);
    }
    out.radius_reliable.push_back(ok);
  }
  return out;
}

AnalyticFunction z_derivative_of(const AnalyticFunction& f, int order) {
  if (f.is_polynomial()) {
    Series s = z_derivative(f.to_series(std::max(1, f.polynomial_degree())));
    return AnalyticFunction::polynomial(std::vector<Complex>(s.coeffs().begin(), s.coeffs().end()));
  }
  return AnalyticFunction::from_series(z_derivative(f.to_series(order)), "zder(" + f.label() + ")");
}

}  // namespace schlicht
