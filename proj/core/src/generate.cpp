#include "schlicht/generate.hpp"

#include <cmath>
#include <numbers>

#include "schlicht/error.hpp"
#include "schlicht/operators.hpp"
#include "schlicht/random.hpp"

namespace schlicht {

namespace {

constexpr double kAcceptFactor = 10.0;

// Degree of f when it is a polynomial or an operator image of one.
std::optional<int> finite_degree(const AnalyticFunction& f) {
  if (f.is_polynomial()) return std::max(1, f.polynomial_degree());
  if (f.backend() == AnalyticFunction::Backend::operator_applied) return finite_degree(f.inner());
  return std::nullopt;
}

AnalyticFunction from_coeffs(const Series& s, bool exact, std::string label) {
  if (!exact) return AnalyticFunction::from_series(s, std::move(label));
  std::vector<Complex> c(s.coeffs().begin(), s.coeffs().end());
  while (c.size() > 2 && c.back() == Complex{}) c.pop_back();
  return AnalyticFunction::polynomial(std::move(c), std::move(label));
}

Series antiderivative_series(const Series& s) {
  std::vector<Complex> c(s.coeffs().begin(), s.coeffs().end());
  c[0] = 0.0;
  for (std::size_t n = 1; n < c.size(); ++n) c[n] /= static_cast<double>(n);
  return Series(std::move(c));
}

bool convex_type(ClassKind k) {
  return k == ClassKind::convex || k == ClassKind::strongly_convex || k == ClassKind::quasi_convex;
}

// 1 + sum_{n=1}^{degree} p_n z^n with |p_n| <= amplitude / n^2.
Series unit_perturbation(Rng& rng, int degree, double amplitude) {
  std::vector<Complex> c(static_cast<std::size_t>(degree) + 1);
  c[0] = 1.0;
  for (int n = 1; n <= degree; ++n) {
    const double radius = rng.uniform() * amplitude / (static_cast<double>(n) * n);
    c[static_cast<std::size_t>(n)] = std::polar(radius, rng.uniform(0.0, 2.0 * std::numbers::pi));
  }
  return Series(std::move(c));
}

class CandidateSource {
 public:
  CandidateSource(const ClassSpec& spec, std::uint64_t seed, const std::optional<AnalyticFunction>& companion,
                  const GenerateOptions& options)
      : spec_(spec), rng_(seed), companion_(companion), options_(options) {}

  AnalyticFunction next() {
    const AnalyticFunction base = next_base();
    if (!spec_.lift) return base;
    return multiplier_preimage(*spec_.lift, base, options_.preimage_order);
  }

 private:
  AnalyticFunction starlike_type() {
    if (pending_identity_) {
      pending_identity_ = false;
      return AnalyticFunction::identity();
    }
    if (rng_.uniform() < 0.25) {
      const double u = rng_.uniform();
      const double lambda = spec_.lambda + (1.0 - spec_.lambda) * u * u;
      const Complex x = std::polar(1.0, rng_.uniform(0.0, 2.0 * std::numbers::pi));
      return AnalyticFunction::koebe(std::min(lambda, std::nextafter(1.0, 0.0)), x);
    }
    const std::uint64_t seed = rng_.next();
    const int degree = 12 + static_cast<int>(rng_.next() % 5);
    const double u = rng_.uniform();
    return generate_perturbed(seed, degree, 0.5 * u * u);
  }

  // z f' = G p with G the (lifted) companion, or its derivative for quasi-convex.
  AnalyticFunction companion_product() {
    const AnalyticFunction g = spec_.lift ? AnalyticFunction::applied(*spec_.lift, *companion_) : *companion_;
    const std::optional<int> degree = finite_degree(g);
    const int degree_p = 4 + static_cast<int>(rng_.next() % 9);
    const double amplitude = 0.5 * (1.0 - spec_.beta) * rng_.uniform();
    const Series p = unit_perturbation(rng_, degree_p, amplitude);
    const int order = degree ? *degree + degree_p : options_.preimage_order;
    Series gs = g.to_series(degree ? *degree : order).resized(order);
    if (spec_.kind == ClassKind::quasi_convex) gs = z_derivative(gs);
    Series h = antiderivative_series(cauchy_product(gs, p.resized(order)).resized(order));
    if (spec_.kind == ClassKind::quasi_convex) h = antiderivative_series(h);
    return from_coeffs(h, degree.has_value(), "companion-product(" + g.label() + ")");
  }

  AnalyticFunction next_base() {
    if (spec_.needs_companion() && rng_.uniform() < 0.5) return companion_product();
    AnalyticFunction f = starlike_type();
    if (convex_type(spec_.kind)) f = z_antiderivative(f, options_.preimage_order);
    return f;
  }

  const ClassSpec& spec_;
  Rng rng_;
  const std::optional<AnalyticFunction>& companion_;
  const GenerateOptions& options_;
  bool pending_identity_ = options_.include_identity;
};

}  // namespace

AnalyticFunction multiplier_preimage(const OperatorSpec& op, const AnalyticFunction& f, int order) {
  const std::optional<int> degree = finite_degree(f);
  const Series s = f.to_series(degree ? *degree : order);
  std::vector<Complex> c(s.coeffs().begin(), s.coeffs().end());
  for (std::size_t n = 0; n < c.size(); ++n) {
    if (c[n] == Complex{}) continue;
    const double m = op.multiplier(static_cast<int>(n));
    if (!std::isfinite(m) || m == 0.0) throw InvalidParameter("multiplier_preimage: operator is not invertible here");
    c[n] /= m;
  }
  return from_coeffs(Series(std::move(c)), degree.has_value(), "preimage[" + op.label() + "](" + f.label() + ")");
}

AnalyticFunction z_antiderivative(const AnalyticFunction& f, int order) {
  if (f.is_polynomial()) {
    return from_coeffs(antiderivative_series(f.to_series(std::max(1, f.polynomial_degree()))), true,
                       "zinv(" + f.label() + ")");
  }
  if (f.backend() == AnalyticFunction::Backend::series) {
    return from_coeffs(antiderivative_series(f.to_series(order)), false, "zinv(" + f.label() + ")");
  }
  return AnalyticFunction::applied(OperatorSpec::bernardi(0.0), f);
}

std::vector<AnalyticFunction> generate_members(const ClassSpec& spec, int count, std::uint64_t seed,
                                               const DiskGrid& grid, const std::optional<AnalyticFunction>& companion,
                                               const GenerateOptions& options) {
  if (count < 1) throw InvalidParameter("generate_members: count must be >= 1");
  spec.validate();
  if (spec.needs_companion() && !companion) {
    throw MissingCompanion(spec.label() + " needs a companion function g");
  }
  std::vector<AnalyticFunction> out;
  CandidateSource source(spec, seed, companion, options);
  const long long allowed = static_cast<long long>(count) * options.rejections_per_member;
  long long rejected = 0;
  while (static_cast<int>(out.size()) < count) {
    bool accepted = false;
    try {
      AnalyticFunction f = source.next();
      const Verdict v = certify(f, spec, grid, companion, options.certify);
      if (v.status == Status::member && v.margin > kAcceptFactor * kMarginFloor && v.nondegeneracy_ok) {
        out.push_back(std::move(f));
        accepted = true;
      }
    } catch (const InvalidParameter&) {
      throw;
    } catch (const Error&) {
    }
    if (!accepted && ++rejected >= allowed) {
      throw GenerationExhausted("generate_members: no " + spec.label() + " member after " +
                                std::to_string(rejected) + " rejections");
    }
  }
  return out;
}

}  // namespace schlicht
