#include "schlicht/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "schlicht/error.hpp"

namespace schlicht {

Series::Series(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() < 2) {
    throw InvalidParameter("series needs truncation order >= 1");
  }
}

Series Series::zero(int order) {
  if (order < 1) throw InvalidParameter("series needs truncation order >= 1");
  return Series(std::vector<Complex>(static_cast<std::size_t>(order) + 1));
}

Series Series::constant(Complex value, int order) {
  Series s = zero(order);
  s.coeffs_[0] = value;
  return s;
}

Series Series::identity(int order) {
  Series s = zero(order);
  s.coeffs_[1] = 1.0;
  return s;
}

bool Series::normalized() const noexcept { return coeffs_[0] == Complex{} && coeffs_[1] == Complex{1.0, 0.0}; }

Series Series::resized(int order) const {
  if (order < 1) throw InvalidParameter("series needs truncation order >= 1");
  std::vector<Complex> c(static_cast<std::size_t>(order) + 1);
  std::copy_n(coeffs_.begin(), std::min(c.size(), coeffs_.size()), c.begin());
  return Series(std::move(c));
}

Series& Series::operator+=(const Series& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t n = 0; n < rhs.coeffs_.size(); ++n) coeffs_[n] += rhs.coeffs_[n];
  return *this;
}

Series& Series::operator-=(const Series& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t n = 0; n < rhs.coeffs_.size(); ++n) coeffs_[n] -= rhs.coeffs_[n];
  return *this;
}

Series& Series::operator*=(Complex scale) {
  for (auto& c : coeffs_) c *= scale;
  return *this;
}

Series cauchy_product(const Series& a, const Series& b) {
  const int order = std::max(a.order(), b.order());
  const Series ar = a.resized(order);
  const Series br = b.resized(order);
  const auto x = ar.coeffs();
  const auto y = br.coeffs();
  std::vector<Complex> out(static_cast<std::size_t>(order) + 1);
  for (int k = 0; k <= order; ++k) {
    Complex acc{};
    for (int i = 0; i <= k; ++i) acc += x[i] * y[k - i];
    out[k] = acc;
  }
  return Series(std::move(out));
}

Series reciprocal(const Series& a) {
  const auto c = a.coeffs();
  if (std::abs(c[0]) <= kReciprocalFloor) {
    throw NearZeroConstantTerm("reciprocal: |a_0| <= 1e-9");
  }
  const int order = a.order();
  std::vector<Complex> out(static_cast<std::size_t>(order) + 1);
  const Complex inv0 = 1.0 / c[0];
  out[0] = inv0;
  for (int k = 1; k <= order; ++k) {
    Complex acc{};
    for (int i = 1; i <= k; ++i) acc += c[i] * out[k - i];
    out[k] = -inv0 * acc;
  }
  return Series(std::move(out));
}

Series z_derivative(const Series& a) {
  std::vector<Complex> out(a.coeffs().begin(), a.coeffs().end());
  for (std::size_t n = 0; n < out.size(); ++n) out[n] *= static_cast<double>(n);
  return Series(std::move(out));
}

namespace {

// n (n-1) ... (n-k+1)
double falling(int n, int k) {
  double p = 1.0;
  for (int i = 0; i < k; ++i) p *= static_cast<double>(n - i);
  return p;
}

}  // namespace

TailBound tail_bound(const Series& a, double radius, int derivative) {
  const int order = a.order();
  const auto c = a.coeffs();
  const double last = std::abs(c[order]) * falling(order, derivative);
  const double prev = std::abs(c[order - 1]) * falling(order - 1, derivative);
  TailBound tb{radius, 0.0};
  if (last == 0.0) return tb;
  double rho = prev == 0.0 ? std::numeric_limits<double>::infinity() : last / prev;
  rho = std::clamp(rho, 0.0, std::nextafter(1.0, 0.0));
  if (rho * radius >= 1.0) {
    tb.bound = std::numeric_limits<double>::infinity();
    return tb;
  }
  tb.bound = last * rho * std::pow(radius, order + 1 - derivative) / (1.0 - rho * radius);
  return tb;
}

SeriesValue evaluate(const Series& a, Complex z) {
  if (std::abs(z) >= 1.0) throw OutsideDisk("evaluate: |z| >= 1");
  const auto c = a.coeffs();
  Complex acc{};
  for (int n = a.order(); n >= 0; --n) acc = acc * z + c[n];
  SeriesValue v{acc, tail_bound(a, std::abs(z)), true};
  v.reliable = v.tail.bound <= kEvaluationTolerance;
  return v;
}

namespace {

bool is_power_of_two(int m) { return m > 0 && (m & (m - 1)) == 0; }

// In-place sum_j x_j e^{+2 pi i j k / M}, M a power of two.
void fft_positive(std::vector<Complex>& x) {
  const std::size_t m = x.size();
  for (std::size_t i = 1, j = 0; i < m; ++i) {
    std::size_t bit = m >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(x[i], x[j]);
  }
  for (std::size_t len = 2; len <= m; len <<= 1) {
    const std::size_t half = len / 2;
    std::vector<Complex> tw(half);
    for (std::size_t k = 0; k < half; ++k) {
      tw[k] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(len));
    }
    for (std::size_t start = 0; start < m; start += len) {
      for (std::size_t k = 0; k < half; ++k) {
        const Complex u = x[start + k];
        const Complex v = x[start + k + half] * tw[k];
        x[start + k] = u + v;
        x[start + k + half] = u - v;
      }
    }
  }
}

}  // namespace

CircleValues evaluate_on_circle(const Series& a, double radius, int angles) {
  if (radius >= 1.0 || radius < 0.0) throw OutsideDisk("evaluate_on_circle: radius outside [0, 1)");
  if (angles < 1) throw InvalidParameter("evaluate_on_circle: need at least one angle");
  const auto c = a.coeffs();
  const auto m = static_cast<std::size_t>(angles);
  CircleValues out;

  if (is_power_of_two(angles)) {
    std::vector<Complex> f(m), d1(m), d2(m);
    double rn = 1.0;
    for (int n = 0; n <= a.order(); ++n) {
      const Complex t = c[n] * rn;
      const auto j = static_cast<std::size_t>(n) % m;
      const double dn = static_cast<double>(n);
      f[j] += t;
      d1[j] += dn * t;
      d2[j] += dn * (dn - 1.0) * t;
      rn *= radius;
    }
    fft_positive(f);
    fft_positive(d1);
    fft_positive(d2);
    out.f = std::move(f);
    out.zf1 = std::move(d1);
    out.z2f2 = std::move(d2);
    return out;
  }

  out.f.resize(m);
  out.zf1.resize(m);
  out.z2f2.resize(m);
  for (std::size_t k = 0; k < m; ++k) {
    const Complex z = std::polar(radius, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m));
    Complex f{}, d1{}, d2{};
    for (int n = a.order(); n >= 0; --n) {
      const double dn = static_cast<double>(n);
      f = f * z + c[n];
      d1 = d1 * z + dn * c[n];
      d2 = d2 * z + dn * (dn - 1.0) * c[n];
    }
    out.f[k] = f;
    out.zf1[k] = d1;
    out.z2f2[k] = d2;
  }
  return out;
}

}  // namespace schlicht
