#pragma once

#include <complex>
#include <span>
#include <vector>

namespace schlicht {

using Complex = std::complex<double>;

/// |a_0| at or below this makes the reciprocal's triangular solve meaningless.
inline constexpr double kReciprocalFloor = 1e-9;

/// Evaluations whose tail estimate exceeds this are flagged unreliable.
inline constexpr double kEvaluationTolerance = 1e-6;

/// Upper estimate of the dropped tail |sum_{n>N} a_n z^n| on the circle |z| = radius.
struct TailBound {
  double radius = 0.0;
  double bound = 0.0;
};

/// Truncated Taylor series a_0 + a_1 z + ... + a_N z^N with complex coefficients.
///
/// Always holds exactly order() + 1 coefficients, order() >= 1. Values are
/// immutable once built; arithmetic returns new series.
class Series {
 public:
  /// Throws InvalidParameter when fewer than two coefficients are given.
  explicit Series(std::vector<Complex> coeffs);

  static Series zero(int order);
  static Series constant(Complex value, int order);
  /// The function z.
  static Series identity(int order);

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Complex> coeffs() const& noexcept { return coeffs_; }
  std::span<const Complex> coeffs() && = delete;
  Complex operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }

  /// a_0 == 0 and a_1 == 1 exactly (membership in the normalized class A).
  bool normalized() const noexcept;

  /// Truncates or zero-pads to the requested order.
  Series resized(int order) const;

  Series& operator+=(const Series& rhs);
  Series& operator-=(const Series& rhs);
  Series& operator*=(Complex scale);

  friend Series operator+(Series lhs, const Series& rhs) { return lhs += rhs; }
  friend Series operator-(Series lhs, const Series& rhs) { return lhs -= rhs; }
  friend Series operator*(Complex scale, Series s) { return s *= scale; }
  friend Series operator*(Series s, Complex scale) { return s *= scale; }
  friend bool operator==(const Series&, const Series&) = default;

 private:
  std::vector<Complex> coeffs_;
};

/// Degree <= max(order) truncation of the product; the shorter input is zero-padded.
Series cauchy_product(const Series& a, const Series& b);

/// Multiplicative inverse to the same order. Throws NearZeroConstantTerm when
/// |a_0| <= kReciprocalFloor.
Series reciprocal(const Series& a);

/// The z d/dz operator: coefficient n becomes n * a_n.
Series z_derivative(const Series& a);

struct SeriesValue {
  Complex value;
  TailBound tail;
  bool reliable = true;
};

/// Horner evaluation with a geometric tail estimate. Throws OutsideDisk for |z| >= 1.
SeriesValue evaluate(const Series& a, Complex z);

/// Tail estimate for the k-th derivative (k = 0, 1, 2) of the series at |z| = radius.
///
/// Fits rho = |d_N / d_{N-1}| on the last two coefficients d_n of the
/// derivative series, guards rho into [0, 1), and bounds the tail by
/// |d_N| rho r^(N+1-k) / (1 - rho r). Returns +inf when rho r >= 1.
TailBound tail_bound(const Series& a, double radius, int derivative = 0);

/// Values of f, z f' and z^2 f'' at the M equispaced points r e^{2 pi i k / M}.
struct CircleValues {
  std::vector<Complex> f;
  std::vector<Complex> zf1;
  std::vector<Complex> z2f2;
};

/// Batched evaluation on a circle. Uses an FFT over coefficients folded
/// modulo M when M is a power of two, Horner otherwise.
CircleValues evaluate_on_circle(const Series& a, double radius, int angles);

}  // namespace schlicht
