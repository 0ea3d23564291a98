#include "schlicht/classify.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "schlicht/error.hpp"

namespace schlicht {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string_view kind_text(ClassKind k) {
  switch (k) {
    case ClassKind::starlike: return "starlike";
    case ClassKind::convex: return "convex";
    case ClassKind::close_to_convex: return "close-to-convex";
    case ClassKind::quasi_convex: return "quasi-convex";
    case ClassKind::strongly_starlike: return "strongly-starlike";
    case ClassKind::strongly_convex: return "strongly-convex";
  }
  return "?";
}

// Value of one grid point: its margin, or ok = false when a denominator or
// argument vanishes there.
struct PointValue {
  double margin = 0.0;
  double gap = std::numeric_limits<double>::infinity();
  bool ok = true;
};

bool tiny(Complex w) { return std::abs(w) < kDivisionFloor; }

double arg_margin(Complex w, double eta, bool& ok) {
  if (tiny(w)) {
    ok = false;
    return 0.0;
  }
  return std::numbers::pi * eta / 2.0 - std::abs(std::arg(w));
}

// Min-reduction in radius-major order; ties keep the earliest point.
struct Reduction {
  double margin = std::numeric_limits<double>::infinity();
  Complex witness{};
  Complex bad_point{};
  double gap = std::numeric_limits<double>::infinity();
  std::vector<double> radius_margins;
  bool reliable = true;
  bool division_near_zero = false;
  bool any = false;
};

template <typename PointFn>
Reduction reduce(const DiskGrid& grid, const std::vector<Complex>& zs, const std::vector<bool>& radius_reliable,
                 PointFn&& point_fn) {
  Reduction red;
  std::size_t idx = 0;
  for (std::size_t i = 0; i < grid.radii.size(); ++i) {
    double radius_min = std::numeric_limits<double>::infinity();
    const bool radius_ok = radius_reliable[i];
    if (!radius_ok) red.reliable = false;
    for (int k = 0; k < grid.angles_per_radius; ++k, ++idx) {
      const PointValue pv = point_fn(idx);
      if (!pv.ok) {
        if (!red.division_near_zero) red.bad_point = zs[idx];
        red.division_near_zero = true;
        red.reliable = false;
        continue;
      }
      radius_min = std::min(radius_min, pv.margin);
      if (!radius_ok) continue;
      red.gap = std::min(red.gap, pv.gap);
      if (pv.margin < red.margin) {
        red.margin = pv.margin;
        red.witness = zs[idx];
      }
      red.any = true;
    }
    red.radius_margins.push_back(std::isfinite(radius_min) ? radius_min : kNaN);
  }
  if (!red.any) red.margin = kNaN;
  if (red.division_near_zero) red.witness = red.bad_point;
  return red;
}

std::vector<bool> both_reliable(const GridSamples& a, const GridSamples* b) {
  std::vector<bool> out = a.radius_reliable;
  if (b) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = out[i] && b->radius_reliable[i];
  }
  return out;
}

}  // namespace

void ClassSpec::validate() const {
  if (!(lambda >= 0.0 && lambda < 1.0)) throw InvalidParameter("class parameter lambda must lie in [0, 1)");
  if (!(beta >= 0.0 && beta < 1.0)) throw InvalidParameter("class parameter beta must lie in [0, 1)");
  if (!(eta > 0.0 && eta <= 1.0)) throw InvalidParameter("class parameter eta must lie in (0, 1]");
}

std::string ClassSpec::label() const {
  std::string s(kind_text(kind));
  s += ':';
  if (kind == ClassKind::close_to_convex || kind == ClassKind::quasi_convex) {
    s += "beta=" + format_number(beta) + ",";
  }
  if (kind == ClassKind::strongly_starlike || kind == ClassKind::strongly_convex) {
    s += "eta=" + format_number(eta) + ",";
  }
  s += "lambda=" + format_number(lambda);
  if (lift) {
    s += lift->kind() == OperatorSpec::Kind::bernardi ? ",c=" : ",sigma=";
    s += format_number(lift->parameter());
  }
  return s;
}

std::string_view status_name(Status s) {
  switch (s) {
    case Status::member: return "Member";
    case Status::non_member: return "NonMember";
    case Status::inconclusive: return "Inconclusive";
  }
  return "?";
}

Verdict certify(const AnalyticFunction& f, const ClassSpec& spec, const DiskGrid& grid,
                const std::optional<AnalyticFunction>& companion, const CertifyOptions& options) {
  spec.validate();
  grid.validate();
  if (spec.needs_companion() && !companion) {
    throw MissingCompanion(spec.label() + " needs a companion function g");
  }

  const AnalyticFunction target = spec.lift ? AnalyticFunction::applied(*spec.lift, f) : f;
  std::optional<AnalyticFunction> partner;
  if (spec.needs_companion()) {
    partner = spec.lift ? AnalyticFunction::applied(*spec.lift, *companion) : *companion;
    if (options.strict) {
      ClassSpec base = spec.kind == ClassKind::close_to_convex ? ClassSpec::starlike(spec.lambda)
                                                               : ClassSpec::convex(spec.lambda);
      base.lift = spec.lift;
      CertifyOptions plain = options;
      plain.strict = false;
      const Verdict cv = certify(*companion, base, grid, std::nullopt, plain);
      if (cv.status != Status::member) {
        throw InvalidParameter("companion is not certified in " + base.label() + " (" +
                               std::string(status_name(cv.status)) + ")");
      }
    }
  }

  const GridSamples s = sample_on_grid(target, grid, options.eval);
  std::optional<GridSamples> g;
  if (partner) g = sample_on_grid(*partner, grid, options.eval);

  const double lambda = spec.lambda;
  const double beta = spec.beta;
  const double eta = spec.eta;
  const bool track_gap = spec.checks_nondegeneracy();

  auto point = [&](std::size_t i) -> PointValue {
    PointValue pv;
    const Complex z = s.z[i];
    const double r = std::abs(z);
    switch (spec.kind) {
      case ClassKind::starlike:
        if (tiny(s.f[i])) return {0.0, 0.0, false};
        pv.margin = (s.zf1[i] / s.f[i]).real() - lambda;
        break;
      case ClassKind::convex:
        if (std::abs(s.zf1[i]) < kDivisionFloor * r) return {0.0, 0.0, false};
        pv.margin = (1.0 + s.z2f2[i] / s.zf1[i]).real() - lambda;
        break;
      case ClassKind::close_to_convex:
        if (tiny(g->f[i])) return {0.0, 0.0, false};
        pv.margin = (s.zf1[i] / g->f[i]).real() - beta;
        break;
      case ClassKind::quasi_convex:
        if (std::abs(g->zf1[i]) < kDivisionFloor * r) return {0.0, 0.0, false};
        pv.margin = ((s.zf1[i] + s.z2f2[i]) / g->zf1[i]).real() - beta;
        break;
      case ClassKind::strongly_starlike: {
        if (tiny(s.f[i])) return {0.0, 0.0, false};
        const Complex w = s.zf1[i] / s.f[i] - lambda;
        pv.margin = arg_margin(w, eta, pv.ok);
        if (track_gap) pv.gap = std::abs(w);
        break;
      }
      case ClassKind::strongly_convex: {
        if (std::abs(s.zf1[i]) < kDivisionFloor * r) return {0.0, 0.0, false};
        const Complex w = 1.0 + s.z2f2[i] / s.zf1[i] - lambda;
        pv.margin = arg_margin(w, eta, pv.ok);
        if (track_gap) pv.gap = std::abs(w);
        break;
      }
    }
    return pv;
  };

  const Reduction red = reduce(grid, s.z, both_reliable(s, g ? &*g : nullptr), point);

  Verdict v;
  v.class_label = spec.label();
  v.margin = red.margin;
  v.witness = red.witness;
  v.radius_margins = red.radius_margins;
  v.reliable = red.reliable;
  v.division_near_zero = red.division_near_zero;
  v.series_order = s.series_order;
  if (track_gap) {
    v.nondegeneracy_gap = red.gap;
    v.nondegeneracy_ok = red.gap > kDegeneracyFloor;
  }

  if (!v.reliable || !std::isfinite(v.margin) || std::abs(v.margin) < kMarginFloor) {
    v.status = Status::inconclusive;
  } else if (v.margin < 0.0) {
    v.status = Status::non_member;
  } else {
    v.status = v.nondegeneracy_ok ? Status::member : Status::inconclusive;
  }
  return v;
}

Verdict certify_lifted_pair(const AnalyticFunction& f, const ClassSpec& spec, const DiskGrid& grid,
                            const std::optional<AnalyticFunction>& companion, const CertifyOptions& options) {
  if (!spec.lift) throw InvalidParameter("certify_lifted_pair needs a class with an operator lift");
  return certify(f, spec, grid, companion, options);
}

std::string_view hypothesis_name(HypothesisId id) {
  switch (id) {
    case HypothesisId::re_difference: return "re_difference";
    case HypothesisId::arg_comparison: return "arg_comparison";
    case HypothesisId::close_to_convex_derivative: return "close_to_convex_derivative";
    case HypothesisId::quasi_convex_derivative: return "quasi_convex_derivative";
    case HypothesisId::companion_re_difference: return "companion_re_difference";
    case HypothesisId::nondegenerate_starlike: return "nondegenerate_starlike";
    case HypothesisId::nondegenerate_convex: return "nondegenerate_convex";
  }
  return "?";
}

HypothesisMargin hypothesis_margin(const AnalyticFunction& f, HypothesisId id, const HypothesisParams& params,
                                   const DiskGrid& grid, const std::optional<AnalyticFunction>& companion,
                                   const EvalOptions& options) {
  grid.validate();
  const bool uses_companion = id == HypothesisId::close_to_convex_derivative ||
                              id == HypothesisId::quasi_convex_derivative ||
                              id == HypothesisId::companion_re_difference;
  if (uses_companion && !companion) {
    throw MissingCompanion(std::string(hypothesis_name(id)) + " needs a companion function g");
  }
  const OperatorSpec& op = params.op;
  const double lambda = params.lambda;
  const double shift = params.shift;
  const int derivative_order = std::max(options.series_order, options.max_series_order / 4);

  // a: the function whose ratio is compared, b: its operator image.
  GridSamples a, b;
  switch (id) {
    case HypothesisId::re_difference:
    case HypothesisId::arg_comparison:
      a = sample_on_grid(f, grid, options);
      b = sample_on_grid(AnalyticFunction::applied(op, f), grid, options);
      break;
    case HypothesisId::companion_re_difference:
      a = sample_on_grid(*companion, grid, options);
      b = sample_on_grid(AnalyticFunction::applied(op, *companion), grid, options);
      break;
    case HypothesisId::close_to_convex_derivative:
    case HypothesisId::quasi_convex_derivative:
      // a = L(z f'), b = L g
      a = sample_on_grid(AnalyticFunction::applied(op, z_derivative_of(f, derivative_order)), grid, options);
      b = sample_on_grid(AnalyticFunction::applied(op, *companion), grid, options);
      break;
    case HypothesisId::nondegenerate_starlike:
    case HypothesisId::nondegenerate_convex:
      b = sample_on_grid(AnalyticFunction::applied(op, f), grid, options);
      a = b;
      break;
  }

  auto point = [&](std::size_t i) -> PointValue {
    PointValue pv;
    const double r = std::abs(a.z[i]);
    switch (id) {
      case HypothesisId::re_difference:
      case HypothesisId::companion_re_difference:
        if (tiny(a.f[i]) || tiny(b.f[i])) return {0.0, 0.0, false};
        pv.margin = (a.zf1[i] / a.f[i] - b.zf1[i] / b.f[i]).real();
        break;
      case HypothesisId::arg_comparison: {
        if (tiny(a.f[i]) || tiny(b.f[i])) return {0.0, 0.0, false};
        const Complex left = a.zf1[i] / a.f[i] - lambda;
        const Complex right = b.zf1[i] / b.f[i] - lambda;
        if (tiny(left) || tiny(right)) return {0.0, 0.0, false};
        pv.margin = std::abs(std::arg(right)) - std::abs(std::arg(left));
        break;
      }
      case HypothesisId::close_to_convex_derivative: {
        // z (F/G)' / (zG'/G + shift) = (zF' G - F zG') / (G (zG' + shift G))
        const Complex den = b.f[i] * (b.zf1[i] + shift * b.f[i]);
        if (tiny(b.f[i]) || tiny(den)) return {0.0, 0.0, false};
        pv.margin = ((a.zf1[i] * b.f[i] - a.f[i] * b.zf1[i]) / den).real();
        break;
      }
      case HypothesisId::quasi_convex_derivative: {
        // z (F'/G')' / (zG''/G' + shift) = (z^2F'' zG' - zF' z^2G'') / (zG' (z^2G'' + shift zG'))
        const Complex den = b.zf1[i] * (b.z2f2[i] + shift * b.zf1[i]);
        if (std::abs(b.zf1[i]) < kDivisionFloor * r || tiny(den)) return {0.0, 0.0, false};
        pv.margin = ((a.z2f2[i] * b.zf1[i] - a.zf1[i] * b.z2f2[i]) / den).real();
        break;
      }
      case HypothesisId::nondegenerate_starlike:
        if (tiny(b.f[i])) return {0.0, 0.0, false};
        pv.margin = std::abs(b.zf1[i] / b.f[i] - lambda) - kDegeneracyFloor;
        break;
      case HypothesisId::nondegenerate_convex:
        if (std::abs(b.zf1[i]) < kDivisionFloor * r) return {0.0, 0.0, false};
        pv.margin = std::abs(1.0 + b.z2f2[i] / b.zf1[i] - lambda) - kDegeneracyFloor;
        break;
    }
    return pv;
  };

  const Reduction red = reduce(grid, a.z, both_reliable(a, &b), point);
  return {red.margin, red.witness, red.reliable};
}

}  // namespace schlicht
