#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "schlicht/operator_spec.hpp"
#include "schlicht/series.hpp"

namespace schlicht {

/// Evaluations closer than this to the unit circle are never trusted.
inline constexpr double kEvalGuard = 1e-3;

/// f, f', f'' at a point plus a reliability flag.
struct Triple {
  Complex f;
  Complex d1;
  Complex d2;
  bool reliable = true;
};

/// Fixed catalog of closed-form test functions.
enum class BuiltinKind {
  identity,                 // z
  koebe_general,            // z / (1 - x z)^(2 (1 - lambda)), extremal for S*(lambda)
  half_plane,               // z / (1 - z)
  polynomial_perturbation,  // z + sum_{n>=2} eps_n z^n
};

/// An analytic function on the unit disk with one of three backends:
/// a stored series, a closed form, or an operator applied to another function.
///
/// Cheap to copy; the backend is shared and immutable.
class AnalyticFunction {
 public:
  enum class Backend { series, closed_form, operator_applied };

  static AnalyticFunction identity();
  /// Throws InvalidParameter unless 0 <= lambda < 1 and |x| = 1 (within 1e-12).
  static AnalyticFunction koebe(double lambda, Complex x = 1.0);
  static AnalyticFunction half_plane();
  /// Coefficients a_0..a_N of a polynomial. Evaluated exactly (no tail).
  static AnalyticFunction polynomial(std::vector<Complex> coeffs, std::string label = {});
  static AnalyticFunction from_series(Series series, std::string label = {});
  static AnalyticFunction applied(const OperatorSpec& op, const AnalyticFunction& inner);

  Backend backend() const noexcept;
  BuiltinKind builtin() const;  // closed_form only
  const std::string& label() const noexcept;

  /// f, f', f''. Throws OutsideDisk for |z| >= 1; flags unreliable beyond
  /// 1 - kEvalGuard or when a series tail exceeds kEvaluationTolerance.
  /// Operator-applied functions are evaluated by quadrature.
  Triple eval_triple(Complex z) const;

  /// Degree-N Taylor coefficients. Operator-applied functions go through the
  /// coefficient multipliers. A stored series cannot be extended past its own
  /// order, so the result then has the stored order.
  Series to_series(int order) const;

  /// True when the function is a finite polynomial (series data excluded).
  bool is_polynomial() const;
  /// Degree of a polynomial function; -1 otherwise.
  int polynomial_degree() const;

  /// Stored series, closed-form parameters and operator structure.
  const Series& stored_series() const;
  double koebe_lambda() const;
  Complex koebe_x() const;
  const std::vector<Complex>& polynomial_coeffs() const;
  const OperatorSpec& op() const;
  const AnalyticFunction& inner() const;

 private:
  struct Impl;
  explicit AnalyticFunction(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Normalized polynomial z + sum_{n=2}^{degree} eps_n z^n with
/// |eps_n| <= amplitude / n^2, fully determined by the seed.
AnalyticFunction generate_perturbed(std::uint64_t seed, int degree, double amplitude);

}  // namespace schlicht
