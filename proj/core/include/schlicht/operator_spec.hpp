#pragma once

#include <complex>
#include <string>

namespace schlicht {

/// One of the two diagonal integral operators on power series.
///
/// Bernardi(c):  f -> ((c+1)/z^c) int_0^z t^(c-1) f(t) dt,  multiplier (c+1)/(n+c), c > -1.
/// JKS(sigma):   f -> (2^sigma / (z Gamma(sigma))) int_0^z log(z/t)^(sigma-1) f(t) dt,
///               multiplier (2/(n+1))^sigma, any real sigma through the multiplier.
class OperatorSpec {
 public:
  enum class Kind { bernardi, jks };

  /// Throws InvalidParameter unless c > -1.
  static OperatorSpec bernardi(double c);
  /// Throws InvalidParameter unless sigma is finite.
  static OperatorSpec jks(double sigma);

  Kind kind() const noexcept { return kind_; }
  double parameter() const noexcept { return parameter_; }

  /// Diagonal multiplier on coefficient n. For Bernardi at n = 0 this is
  /// (c+1)/c, which callers must guard (it only multiplies a_0).
  double multiplier(int n) const;

  /// CLI-style text, e.g. "bernardi:c=1" or "jks:sigma=0.5".
  std::string label() const;

  friend bool operator==(const OperatorSpec&, const OperatorSpec&) = default;

 private:
  OperatorSpec(Kind kind, double parameter) : kind_(kind), parameter_(parameter) {}

  Kind kind_;
  double parameter_;
};

/// Shortest decimal text that round-trips the double.
std::string format_number(double value);
/// "re", or "re+imi" / "re-imi"; parsed back by parse_complex.
std::string format_complex(std::complex<double> z);

}  // namespace schlicht
