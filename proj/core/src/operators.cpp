#include "schlicht/operators.hpp"

#include <algorithm>
#include <cmath>

#include "schlicht/error.hpp"
#include "schlicht/quadrature.hpp"
#include "schlicht/special.hpp"

namespace schlicht {

OperatorSpec OperatorSpec::bernardi(double c) {
  if (!(c > -1.0) || !std::isfinite(c)) throw InvalidParameter("bernardi operator requires c > -1");
  return OperatorSpec(Kind::bernardi, c);
}

OperatorSpec OperatorSpec::jks(double sigma) {
  if (!std::isfinite(sigma)) throw InvalidParameter("jks operator requires a finite sigma");
  return OperatorSpec(Kind::jks, sigma);
}

double OperatorSpec::multiplier(int n) const {
  const double dn = static_cast<double>(n);
  if (kind_ == Kind::bernardi) return (parameter_ + 1.0) / (dn + parameter_);
  return std::pow(2.0 / (dn + 1.0), parameter_);
}

std::string OperatorSpec::label() const {
  return kind_ == Kind::bernardi ? "bernardi:c=" + format_number(parameter_)
                                 : "jks:sigma=" + format_number(parameter_);
}

Series apply_multiplier(const OperatorSpec& op, const Series& a) {
  std::vector<Complex> out(a.coeffs().begin(), a.coeffs().end());
  if (out[0] != Complex{}) {
    if (op.kind() == OperatorSpec::Kind::bernardi && op.parameter() <= 0.0) {
      throw InvalidParameter("bernardi operator with c <= 0 needs a_0 = 0");
    }
    out[0] *= op.multiplier(0);
  }
  for (std::size_t n = 2; n < out.size(); ++n) out[n] *= op.multiplier(static_cast<int>(n));
  return Series(std::move(out));
}

namespace {

constexpr double kTinyRadius = 1e-150;

void require_vanishing_at_origin(const AnalyticFunction& f) {
  if (std::abs(f.eval_triple(0.0).f) > 1e-14) {
    throw InvalidParameter("quadrature backend requires f(0) = 0");
  }
}

Triple bernardi_triple(double c, const AnalyticFunction& f, Complex z) {
  const Complex d1_origin = f.eval_triple(0.0).d1;
  const double power = 1.0 / (c + 1.0);
  bool reliable = true;
  // (c+1) u^c du = dv turns F^(k) into int_0^1 u^(k-1) f^(k)(zu) dv.
  auto integrand = [&](double v) -> QuadValue {
    const double u = std::pow(v, power);
    if (u < kTinyRadius) return {z * d1_origin, d1_origin, Complex{}};
    const Triple t = f.eval_triple(z * u);
    reliable = reliable && t.reliable;
    return {t.f / u, t.d1, u * t.d2};
  };
  const QuadratureResult r = integrate_adaptive(integrand, 0.0, 1.0, kQuadratureTolerance);
  return {r.value[0], r.value[1], r.value[2], reliable};
}

Triple jks_triple(double sigma, const AnalyticFunction& f, Complex z) {
  if (!(sigma > 0.0)) throw InvalidParameter("jks quadrature requires sigma > 0");
  const double prefactor = std::pow(2.0, sigma) / lanczos_gamma(sigma);
  const double tol = 0.5 * kQuadratureTolerance / std::max(prefactor, 1.0);
  bool reliable = true;
  auto channels = [&](double u) -> QuadValue {
    const Triple t = f.eval_triple(z * u);
    reliable = reliable && t.reliable;
    return {t.f, u * t.d1, u * u * t.d2};
  };
  // w in [0, 1] with s = w^sigma: w^(sigma-1) e^-w dw = e^-w ds / sigma.
  auto inner_piece = [&](double s) -> QuadValue {
    const double w = std::pow(s, 1.0 / sigma);
    const double u = std::exp(-w);
    QuadValue g = channels(u);
    for (auto& v : g) v *= u / sigma;
    return g;
  };
  // u in (0, 1/e]: weight (-log u)^(sigma-1) is smooth there.
  auto outer_piece = [&](double u) -> QuadValue {
    if (u < kTinyRadius) return {};
    QuadValue g = channels(u);
    const double weight = std::pow(-std::log(u), sigma - 1.0);
    for (auto& v : g) v *= weight;
    return g;
  };
  const QuadratureResult a = integrate_adaptive(inner_piece, 0.0, 1.0, tol);
  const QuadratureResult b = integrate_adaptive(outer_piece, 0.0, std::exp(-1.0), tol);
  Triple t;
  t.f = prefactor * (a.value[0] + b.value[0]);
  t.d1 = prefactor * (a.value[1] + b.value[1]);
  t.d2 = prefactor * (a.value[2] + b.value[2]);
  t.reliable = reliable;
  return t;
}

}  // namespace

Triple quadrature_triple(const OperatorSpec& op, const AnalyticFunction& f, Complex z) {
  if (std::abs(z) >= 1.0) throw OutsideDisk("quadrature: |z| >= 1");
  require_vanishing_at_origin(f);
  Triple t = op.kind() == OperatorSpec::Kind::bernardi ? bernardi_triple(op.parameter(), f, z)
                                                        : jks_triple(op.parameter(), f, z);
  if (std::abs(z) > 1.0 - kEvalGuard) t.reliable = false;
  return t;
}

Complex apply_quadrature(const OperatorSpec& op, const AnalyticFunction& f, Complex z) {
  return quadrature_triple(op, f, z).f;
}

std::string_view identity_name(IdentityId id) {
  switch (id) {
    case IdentityId::id_1_7: return "Id_1_7";
    case IdentityId::id_1_8: return "Id_1_8";
    case IdentityId::id_2_5: return "Id_2_5";
    case IdentityId::id_2_8: return "Id_2_8";
    case IdentityId::id_2_18: return "Id_2_18";
    case IdentityId::id_2_19: return "Id_2_19";
    case IdentityId::commute: return "Commute";
  }
  return "?";
}

IdentityId parse_identity(std::string_view name) {
  for (IdentityId id : kAllIdentities) {
    if (identity_name(id) == name) return id;
  }
  throw InvalidParameter("unknown identity '" + std::string(name) + "'");
}

namespace {

double max_difference(const Series& lhs, const Series& rhs) {
  const int order = std::max(lhs.order(), rhs.order());
  const Series lr = lhs.resized(order);
  const Series rr = rhs.resized(order);
  const auto x = lr.coeffs();
  const auto y = rr.coeffs();
  double worst = 0.0;
  for (int n = 0; n <= order; ++n) worst = std::max(worst, std::abs(x[n] - y[n]));
  return worst;
}

// z (L g)' + k L g for the Bernardi operator L.
Series shifted_derivative(const OperatorSpec& bernardi, const Series& g, double k) {
  const Series lg = apply_multiplier(bernardi, g);
  return z_derivative(lg) + k * lg;
}

}  // namespace

double check_identity(IdentityId id, const Series& a, double c, double sigma) {
  const OperatorSpec lc = OperatorSpec::bernardi(c);
  const OperatorSpec is = OperatorSpec::jks(sigma);
  switch (id) {
    case IdentityId::id_1_7: {
      const Series i_l = apply_multiplier(is, apply_multiplier(lc, a));
      return max_difference(z_derivative(i_l), (c + 1.0) * apply_multiplier(is, a) - c * i_l);
    }
    case IdentityId::id_1_8: {
      const Series l_i = apply_multiplier(lc, apply_multiplier(is, a));
      return max_difference(z_derivative(l_i), (c + 1.0) * apply_multiplier(is, a) - c * l_i);
    }
    case IdentityId::id_2_5:
      return max_difference(shifted_derivative(lc, a, c), (c + 1.0) * a);
    case IdentityId::id_2_8:
      return max_difference(shifted_derivative(OperatorSpec::bernardi(c + 1.0), a, c + 1.0), (c + 2.0) * a);
    case IdentityId::id_2_18:
    case IdentityId::id_2_19: {
      const Series g = id == IdentityId::id_2_18 ? z_derivative(a) : a;
      const Series next = shifted_derivative(OperatorSpec::bernardi(c + 1.0), g, c + 1.0);
      return max_difference(shifted_derivative(lc, g, c), ((c + 1.0) / (c + 2.0)) * next);
    }
    case IdentityId::commute:
      return max_difference(apply_multiplier(lc, apply_multiplier(is, a)),
                            apply_multiplier(is, apply_multiplier(lc, a)));
  }
  return 0.0;
}

}  // namespace schlicht
