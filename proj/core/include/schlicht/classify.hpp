#pragma once

#include <optional>
#include <string>
#include <vector>

#include "schlicht/function.hpp"
#include "schlicht/grid.hpp"
#include "schlicht/operator_spec.hpp"

namespace schlicht {

/// Margins inside (-kMarginFloor, kMarginFloor) cannot decide a strict inequality.
inline constexpr double kMarginFloor = 1e-7;
/// Quantitative gap required for the "expression != lambda" conditions.
inline constexpr double kDegeneracyFloor = 1e-6;
/// |denominator| below this at a grid point makes that point inconclusive.
inline constexpr double kDivisionFloor = 1e-12;

enum class ClassKind {
  starlike,           // Re(z f'/f) > lambda
  convex,             // Re(1 + z f''/f') > lambda
  close_to_convex,    // Re(z f'/g) > beta, g starlike of order lambda
  quasi_convex,       // Re((z f')'/g') > beta, g convex of order lambda
  strongly_starlike,  // |arg(z f'/f - lambda)| < pi eta / 2
  strongly_convex,    // |arg(1 + z f''/f' - lambda)| < pi eta / 2
};

struct ClassSpec {
  ClassKind kind = ClassKind::starlike;
  double lambda = 0.0;
  double beta = 0.0;
  double eta = 1.0;
  /// Class of functions whose operator image lies in the base class.
  std::optional<OperatorSpec> lift;

  static ClassSpec starlike(double lambda) { return {ClassKind::starlike, lambda, 0.0, 1.0, std::nullopt}; }
  static ClassSpec convex(double lambda) { return {ClassKind::convex, lambda, 0.0, 1.0, std::nullopt}; }
  static ClassSpec close_to_convex(double beta, double lambda) {
    return {ClassKind::close_to_convex, lambda, beta, 1.0, std::nullopt};
  }
  static ClassSpec quasi_convex(double beta, double lambda) { return {ClassKind::quasi_convex, lambda, beta, 1.0, std::nullopt}; }
  static ClassSpec strongly_starlike(double eta, double lambda) {
    return {ClassKind::strongly_starlike, lambda, 0.0, eta, std::nullopt};
  }
  static ClassSpec strongly_convex(double eta, double lambda) {
    return {ClassKind::strongly_convex, lambda, 0.0, eta, std::nullopt};
  }
  ClassSpec lifted(const OperatorSpec& op) const {
    ClassSpec s = *this;
    s.lift = op;
    return s;
  }

  /// Throws InvalidParameter unless 0 <= lambda < 1, 0 <= beta < 1, 0 < eta <= 1.
  void validate() const;
  bool needs_companion() const noexcept {
    return kind == ClassKind::close_to_convex || kind == ClassKind::quasi_convex;
  }
  /// Lifted strongly starlike/convex classes carry the "!= lambda" condition.
  bool checks_nondegeneracy() const noexcept {
    return lift.has_value() && (kind == ClassKind::strongly_starlike || kind == ClassKind::strongly_convex);
  }
  /// CLI-style text, e.g. "strongly-starlike:eta=0.5,lambda=0,c=1".
  std::string label() const;

  friend bool operator==(const ClassSpec&, const ClassSpec&) = default;
};

enum class Status { member, non_member, inconclusive };

std::string_view status_name(Status s);

/// Outcome of a grid certification.
///
/// Member means no violation was found on the grid; NonMember means a
/// reliable violation was found. The margin is the signed distance to the
/// defining inequality, minimized over reliable grid points.
struct Verdict {
  Status status = Status::inconclusive;
  std::string class_label;
  double margin = 0.0;
  Complex witness{};
  std::vector<double> radius_margins;  // per radius, including unreliable radii
  bool nondegeneracy_ok = true;
  double nondegeneracy_gap = 0.0;  // min |expr - lambda|; only for lifted strongly classes
  bool reliable = true;
  bool division_near_zero = false;
  int series_order = 0;
};

struct CertifyOptions {
  EvalOptions eval;
  /// Also certify the companion in S*(lambda) (resp. C(lambda)), lifted like f.
  bool strict = false;
};

/// Certifies f in `spec` over `grid`. With a lift, both f and the companion
/// are mapped through the operator's multipliers first.
///
/// Throws MissingCompanion when the class needs one and none is given, and
/// InvalidParameter for out-of-range class parameters or (strict) a
/// companion that is not itself certified.
Verdict certify(const AnalyticFunction& f, const ClassSpec& spec, const DiskGrid& grid,
                const std::optional<AnalyticFunction>& companion = std::nullopt, const CertifyOptions& options = {});

/// certify() for a lifted class; throws InvalidParameter when spec.lift is empty.
Verdict certify_lifted_pair(const AnalyticFunction& f, const ClassSpec& spec, const DiskGrid& grid,
                            const std::optional<AnalyticFunction>& companion = std::nullopt,
                            const CertifyOptions& options = {});

/// Side conditions used as theorem hypotheses. L is the operator in the parameters.
enum class HypothesisId {
  re_difference,               // Re{ z f'/f - z(Lf)'/Lf }
  arg_comparison,              // |arg(z(Lf)'/Lf - lambda)| - |arg(z f'/f - lambda)|
  close_to_convex_derivative,  // Re{ z (L zf' / L g)' / (z (Lg)'/Lg + shift) }
  quasi_convex_derivative,     // Re{ z ((L zf')' / (L g)')' / (z (Lg)''/(Lg)' + shift) }
  companion_re_difference,     // Re{ z g'/g - z(Lg)'/Lg }
  nondegenerate_starlike,      // |z(Lf)'/Lf - lambda| - degeneracy floor
  nondegenerate_convex,        // |1 + z(Lf)''/(Lf)' - lambda| - degeneracy floor
};

std::string_view hypothesis_name(HypothesisId id);

struct HypothesisParams {
  OperatorSpec op = OperatorSpec::bernardi(0.0);
  double lambda = 0.0;
  double shift = 0.0;
};

struct HypothesisMargin {
  double margin = 0.0;  // min over grid; positive means the condition holds there
  Complex witness{};
  bool reliable = true;
};

/// Throws MissingCompanion for the forms involving g.
HypothesisMargin hypothesis_margin(const AnalyticFunction& f, HypothesisId id, const HypothesisParams& params,
                                   const DiskGrid& grid, const std::optional<AnalyticFunction>& companion = std::nullopt,
                                   const EvalOptions& options = {});

}  // namespace schlicht
