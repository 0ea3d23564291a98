#include "schlicht/function.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <optional>

#include "schlicht/error.hpp"
#include "schlicht/operators.hpp"
#include "schlicht/random.hpp"

namespace schlicht {

std::string format_number(double value) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

std::string format_complex(std::complex<double> z) {
  if (z.imag() == 0.0) return format_number(z.real());
  std::string s = format_number(z.real());
  if (!std::signbit(z.imag())) s += '+';
  return s + format_number(z.imag()) + "i";
}

struct AnalyticFunction::Impl {
  Backend backend = Backend::closed_form;
  std::string label;
  BuiltinKind kind = BuiltinKind::identity;
  double lambda = 0.0;
  Complex x{1.0, 0.0};
  std::vector<Complex> poly;
  std::optional<Series> series;
  std::optional<OperatorSpec> op;
  std::optional<AnalyticFunction> inner;
};

AnalyticFunction AnalyticFunction::identity() {
  auto impl = std::make_shared<Impl>();
  impl->kind = BuiltinKind::identity;
  impl->label = "identity";
  return AnalyticFunction(std::move(impl));
}

AnalyticFunction AnalyticFunction::koebe(double lambda, Complex x) {
  if (!(lambda >= 0.0 && lambda < 1.0)) throw InvalidParameter("koebe: lambda must lie in [0, 1)");
  if (!(std::abs(std::abs(x) - 1.0) <= 1e-12)) throw InvalidParameter("koebe: |x| must equal 1");
  auto impl = std::make_shared<Impl>();
  impl->kind = BuiltinKind::koebe_general;
  impl->lambda = lambda;
  impl->x = x;
  impl->label = "koebe:lambda=" + format_number(lambda) + ",x=" + format_complex(x);
  return AnalyticFunction(std::move(impl));
}

AnalyticFunction AnalyticFunction::half_plane() {
  auto impl = std::make_shared<Impl>();
  impl->kind = BuiltinKind::half_plane;
  impl->label = "half-plane";
  return AnalyticFunction(std::move(impl));
}

AnalyticFunction AnalyticFunction::polynomial(std::vector<Complex> coeffs, std::string label) {
  if (coeffs.size() < 2) coeffs.resize(2);
  auto impl = std::make_shared<Impl>();
  impl->kind = BuiltinKind::polynomial_perturbation;
  if (label.empty()) {
    label = "poly:";
    bool first = true;
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
      if (coeffs[n] == Complex{}) continue;
      if (!first) label += ',';
      label += "a" + std::to_string(n) + "=" + format_complex(coeffs[n]);
      first = false;
    }
  }
  impl->poly = std::move(coeffs);
  impl->label = std::move(label);
  return AnalyticFunction(std::move(impl));
}

AnalyticFunction AnalyticFunction::from_series(Series series, std::string label) {
  auto impl = std::make_shared<Impl>();
  impl->backend = Backend::series;
  impl->label = label.empty() ? "series:order=" + std::to_string(series.order()) : std::move(label);
  impl->series = std::move(series);
  return AnalyticFunction(std::move(impl));
}

AnalyticFunction AnalyticFunction::applied(const OperatorSpec& op, const AnalyticFunction& inner) {
  auto impl = std::make_shared<Impl>();
  impl->backend = Backend::operator_applied;
  impl->label = op.label() + "(" + inner.label() + ")";
  impl->op = op;
  impl->inner = inner;
  return AnalyticFunction(std::move(impl));
}

AnalyticFunction::Backend AnalyticFunction::backend() const noexcept { return impl_->backend; }

BuiltinKind AnalyticFunction::builtin() const {
  if (impl_->backend != Backend::closed_form) throw InvalidParameter("not a closed-form function");
  return impl_->kind;
}

const std::string& AnalyticFunction::label() const noexcept { return impl_->label; }

const Series& AnalyticFunction::stored_series() const {
  if (!impl_->series) throw InvalidParameter("not a series-backed function");
  return *impl_->series;
}
double AnalyticFunction::koebe_lambda() const { return impl_->lambda; }
Complex AnalyticFunction::koebe_x() const { return impl_->x; }
const std::vector<Complex>& AnalyticFunction::polynomial_coeffs() const { return impl_->poly; }
const OperatorSpec& AnalyticFunction::op() const {
  if (!impl_->op) throw InvalidParameter("not an operator-applied function");
  return *impl_->op;
}
const AnalyticFunction& AnalyticFunction::inner() const {
  if (!impl_->inner) throw InvalidParameter("not an operator-applied function");
  return *impl_->inner;
}

namespace {

Triple horner_triple(std::span<const Complex> c, Complex z) {
  Complex f{}, d1{}, d2{};
  for (auto n = static_cast<std::ptrdiff_t>(c.size()) - 1; n >= 0; --n) {
    d2 = d2 * z + 2.0 * d1;
    d1 = d1 * z + f;
    f = f * z + c[static_cast<std::size_t>(n)];
  }
  return {f, d1, d2, true};
}

}  // namespace

Triple AnalyticFunction::eval_triple(Complex z) const {
  const double r = std::abs(z);
  if (r >= 1.0) throw OutsideDisk("eval_triple: |z| >= 1");
  Triple t;
  switch (impl_->backend) {
    case Backend::series: {
      const Series& s = *impl_->series;
      t = horner_triple(s.coeffs(), z);
      for (int k = 0; k <= 2; ++k) {
        if (tail_bound(s, r, k).bound > kEvaluationTolerance) t.reliable = false;
      }
      break;
    }
    case Backend::operator_applied:
      t = quadrature_triple(*impl_->op, *impl_->inner, z);
      break;
    case Backend::closed_form:
      switch (impl_->kind) {
        case BuiltinKind::identity:
          t = {z, 1.0, 0.0, true};
          break;
        case BuiltinKind::koebe_general: {
          const double alpha = 2.0 * (1.0 - impl_->lambda);
          const Complex x = impl_->x;
          const Complex w = 1.0 - x * z;
          const Complex p = std::exp(-alpha * std::log(w));
          t.f = z * p;
          t.d1 = p / w * (1.0 + (alpha - 1.0) * x * z);
          t.d2 = alpha * x * p / (w * w) * (2.0 + (alpha - 1.0) * x * z);
          break;
        }
        case BuiltinKind::half_plane: {
          const Complex w = 1.0 - z;
          t.f = z / w;
          t.d1 = 1.0 / (w * w);
          t.d2 = 2.0 / (w * w * w);
          break;
        }
        case BuiltinKind::polynomial_perturbation:
          t = horner_triple(impl_->poly, z);
          break;
      }
      break;
  }
  if (r > 1.0 - kEvalGuard) t.reliable = false;
  return t;
}

Series AnalyticFunction::to_series(int order) const {
  if (order < 1) throw InvalidParameter("to_series: order must be >= 1");
  switch (impl_->backend) {
    case Backend::series: {
      const Series& s = *impl_->series;
      return s.resized(std::min(order, s.order()));
    }
    case Backend::operator_applied:
      return apply_multiplier(*impl_->op, impl_->inner->to_series(order));
    case Backend::closed_form:
      break;
  }
  std::vector<Complex> c(static_cast<std::size_t>(order) + 1);
  switch (impl_->kind) {
    case BuiltinKind::identity:
      c[1] = 1.0;
      break;
    case BuiltinKind::koebe_general: {
      const double alpha = 2.0 * (1.0 - impl_->lambda);
      c[1] = 1.0;
      // a_{n+1} = x^n (alpha)_n / n!
      for (int n = 1; n < order; ++n) {
        c[n + 1] = c[n] * impl_->x * ((alpha + n - 1.0) / n);
      }
      break;
    }
    case BuiltinKind::half_plane:
      for (int n = 1; n <= order; ++n) c[n] = 1.0;
      break;
    case BuiltinKind::polynomial_perturbation:
      for (std::size_t n = 0; n < c.size() && n < impl_->poly.size(); ++n) c[n] = impl_->poly[n];
      break;
  }
  return Series(std::move(c));
}

bool AnalyticFunction::is_polynomial() const {
  switch (impl_->backend) {
    case Backend::series:
      return false;
    case Backend::operator_applied:
      return impl_->inner->is_polynomial();
    case Backend::closed_form:
      return impl_->kind == BuiltinKind::identity || impl_->kind == BuiltinKind::polynomial_perturbation;
  }
  return false;
}

int AnalyticFunction::polynomial_degree() const {
  if (!is_polynomial()) return -1;
  if (impl_->backend == Backend::operator_applied) return impl_->inner->polynomial_degree();
  if (impl_->kind == BuiltinKind::identity) return 1;
  for (auto n = static_cast<int>(impl_->poly.size()) - 1; n > 0; --n) {
    if (impl_->poly[static_cast<std::size_t>(n)] != Complex{}) return n;
  }
  return 0;
}

AnalyticFunction generate_perturbed(std::uint64_t seed, int degree, double amplitude) {
  if (amplitude < 0.0) throw InvalidParameter("generate_perturbed: amplitude must be >= 0");
  if (degree < 1) throw InvalidParameter("generate_perturbed: degree must be >= 1");
  Rng rng(seed);
  std::vector<Complex> c(static_cast<std::size_t>(std::max(degree, 1)) + 1);
  c[1] = 1.0;
  for (int n = 2; n <= degree; ++n) {
    const double radius = rng.uniform() * amplitude / (static_cast<double>(n) * n);
    const double angle = rng.uniform(0.0, 2.0 * std::numbers::pi);
    c[n] = std::polar(radius, angle);
  }
  std::string label = "perturbed:seed=" + std::to_string(seed) + ",degree=" + std::to_string(degree) +
                      ",amplitude=" + format_number(amplitude);
  return AnalyticFunction::polynomial(std::move(c), std::move(label));
}

}  // namespace schlicht
