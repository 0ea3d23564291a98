// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 on any failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "schlicht/classify.hpp"
#include "schlicht/harness.hpp"
#include "schlicht/json_io.hpp"
#include "schlicht/operators.hpp"
#include "schlicht/random.hpp"

using namespace schlicht;

namespace {

struct Check {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Series random_normalized(std::uint64_t seed, int order) {
  Rng rng(seed);
  std::vector<Complex> c(static_cast<std::size_t>(order) + 1);
  c[1] = 1.0;
  for (int n = 2; n <= order; ++n) c[static_cast<std::size_t>(n)] = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
  return Series(std::move(c));
}

double max_abs(const Series& s) {
  double m = 0.0;
  for (Complex v : s.coeffs()) m = std::max(m, std::abs(v));
  return m;
}

Check identity_suite() {
  double worst = 0.0;
  int checks = 0;
  for (int t = 0; t < 100; ++t) {
    const Series a = random_normalized(mix_seed(1, static_cast<std::uint64_t>(t)), 64);
    const double scale = max_abs(a);
    for (double c : {-0.5, 0.0, 1.0, 2.5}) {
      for (double sigma : {0.5, 1.0, 2.0}) {
        for (IdentityId id : kAllIdentities) {
          worst = std::max(worst, check_identity(id, a, c, sigma) / scale);
          ++checks;
        }
      }
    }
  }
  return {worst <= 1e-12, fmt("%d checks, worst residual / max|a_n| = %.3g (limit 1e-12)", checks, worst)};
}

Check dual_backend() {
  std::vector<AnalyticFunction> fns = {AnalyticFunction::koebe(0.0)};
  for (std::uint64_t s = 1; s <= 5; ++s) fns.push_back(generate_perturbed(s, 16, 0.5));
  const std::vector<OperatorSpec> ops = {OperatorSpec::bernardi(-0.5), OperatorSpec::bernardi(0.0),
                                         OperatorSpec::bernardi(1.0),  OperatorSpec::bernardi(2.5),
                                         OperatorSpec::jks(0.5),       OperatorSpec::jks(1.0),
                                         OperatorSpec::jks(2.0)};
  Rng rng(2);
  std::vector<Complex> zs;
  for (int i = 0; i < 20; ++i) zs.push_back(std::polar(0.8 * std::sqrt(rng.uniform()), rng.uniform(0.0, 2 * std::numbers::pi)));
  double worst = 0.0;
  for (const AnalyticFunction& f : fns) {
    const Series s = f.to_series(512);
    for (const OperatorSpec& op : ops) {
      const Series m = apply_multiplier(op, s);
      for (Complex z : zs) worst = std::max(worst, std::abs(apply_quadrature(op, f, z) - evaluate(m, z).value));
    }
  }
  return {worst <= 1e-7, fmt("%zu functions x %zu operators x 20 points, worst |quadrature - multiplier| = %.3g (limit 1e-7)",
                             fns.size(), ops.size(), worst)};
}

Check libera_coincidence() {
  int mismatches = 0;
  for (int t = 0; t < 100; ++t) {
    const Series a = random_normalized(mix_seed(3, static_cast<std::uint64_t>(t)), 64);
    const Series x = apply_multiplier(OperatorSpec::jks(1.0), a);
    const Series y = apply_multiplier(OperatorSpec::bernardi(1.0), a);
    for (int n = 0; n <= 64; ++n) {
      for (auto [p, q] : {std::pair{x[n].real(), y[n].real()}, std::pair{x[n].imag(), y[n].imag()}}) {
        if (std::nextafter(p, -INFINITY) > q || std::nextafter(p, INFINITY) < q) ++mismatches;
      }
    }
  }
  return {mismatches == 0, fmt("100 series x 65 coefficients, %d differ by more than 1 ulp", mismatches)};
}

Check koebe_oracle() {
  const DiskGrid grid = DiskGrid::default_grid();
  const Verdict v = certify(AnalyticFunction::koebe(0.0), ClassSpec::starlike(0.0), grid);
  const double r = grid.radii.back();
  double brute = INFINITY;
  for (int k = 0; k < 10000; ++k) {
    const Complex z = std::polar(r, 2 * std::numbers::pi * k / 10000);
    brute = std::min(brute, ((1.0 + z) / (1.0 - z)).real());
  }
  const double closed = (1 - r) / (1 + r);
  const double outer = v.radius_margins.back();
  const double e1 = std::abs(outer - closed);
  const double e2 = std::abs(outer - brute);
  return {v.status == Status::member && e1 <= 1e-9 && e2 <= 1e-9,
          fmt("r = %.2f: margin %.15g, (1-r)/(1+r) %.15g, brute force %.15g; %s", r, outer, closed, brute,
              std::string(status_name(v.status)).c_str())};
}

Check equivalences() {
  const DiskGrid grid = DiskGrid::default_grid();
  double worst = 0.0;
  for (std::uint64_t s = 1; s <= 20; ++s) {
    const AnalyticFunction f = generate_perturbed(s, 14, 0.2 + 0.04 * static_cast<double>(s));
    const AnalyticFunction g = generate_perturbed(100 + s, 10, 0.4);
    const AnalyticFunction zf = z_derivative_of(f, 64);
    const AnalyticFunction zg = z_derivative_of(g, 64);
    auto diff = [&](const Verdict& a, const Verdict& b) {
      return std::abs(a.margin - b.margin) / std::max(1.0, std::abs(a.margin));
    };
    for (double lambda : {0.0, 0.5}) {
      worst = std::max(worst, diff(certify(f, ClassSpec::convex(lambda), grid), certify(zf, ClassSpec::starlike(lambda), grid)));
      worst = std::max(worst, diff(certify(f, ClassSpec::strongly_convex(0.5, lambda), grid),
                                   certify(zf, ClassSpec::strongly_starlike(0.5, lambda), grid)));
      worst = std::max(worst, diff(certify(f, ClassSpec::quasi_convex(0.25, lambda), grid, g),
                                   certify(zf, ClassSpec::close_to_convex(0.25, lambda), grid, zg)));
    }
  }
  return {worst <= 1e-12, fmt("20 samples x 2 lambdas x 3 pairs, worst margin difference %.3g (limit 1e-12)", worst)};
}

const std::vector<TheoremId> kUnconditional = {TheoremId::T2_7,  TheoremId::T2_3,  TheoremId::C2_4, TheoremId::T2_10,
                                               TheoremId::C2_11, TheoremId::T2_12, TheoremId::C2_13};

Check unconditional(const CatalogReport& cat, double seconds) {
  bool ok = seconds < 300.0;
  std::string detail;
  for (TheoremId id : kUnconditional) {
    for (const ExperimentReport& r : cat.theorems) {
      if (r.config.theorem != id) continue;
      int weak_points = 0;
      for (const PointSummary& p : r.points) weak_points += p.counts.confirmed < 1;
      ok = ok && weak_points == 0 && r.counts.counterexample_flagged == 0 && r.hypothesis_hits > 0;
      detail += fmt("%s %d/%zu confirmed, %d flagged, hit rate %.3g; ", std::string(theorem_name(id)).c_str(),
                    r.counts.confirmed, r.samples.size(), r.counts.counterexample_flagged, r.hypothesis_hit_rate());
      if (weak_points) detail += fmt("(%d points without a confirmation) ", weak_points);
    }
  }
  detail += fmt("full catalog %.1f s (limit 300 s)", seconds);
  return {ok, detail};
}

Check conditional(const CatalogReport& cat) {
  bool ok = true;
  std::string detail;
  int n = 0;
  for (const ExperimentReport& r : cat.theorems) {
    if (r.unconditional) continue;
    ++n;
    ok = ok && r.counts.counterexample_flagged == 0;
    detail += fmt("%s hit rate %.3g (%d vacuous, %d flagged); ", std::string(theorem_name(r.config.theorem)).c_str(),
                  r.hypothesis_hit_rate(), r.counts.vacuous, r.counts.counterexample_flagged);
  }
  detail += fmt("%d conditional experiments", n);
  return {ok && n > 0, detail};
}

Check determinism() {
  std::string runs[2];
  for (std::string& out : runs) {
    std::ostringstream os, err;
    const int code = cli::run({"verify-theorem", "--all", "--seed", "7"}, os, err);
    if (code != 0) return {false, "verify-theorem exited with " + std::to_string(code) + ": " + err.str()};
    out = os.str();
  }
  return {runs[0] == runs[1] && !runs[0].empty(),
          fmt("two runs of verify-theorem --all --seed 7: %zu and %zu bytes, %s", runs[0].size(), runs[1].size(),
              runs[0] == runs[1] ? "identical" : "different")};
}

Check finite_differences() {
  std::vector<AnalyticFunction> fns = {AnalyticFunction::identity(), AnalyticFunction::half_plane()};
  for (double lambda : {0.0, 0.25, 0.5, 0.75}) {
    fns.push_back(AnalyticFunction::koebe(lambda));
    fns.push_back(AnalyticFunction::koebe(lambda, std::polar(1.0, 2.0 + lambda)));
  }
  for (std::uint64_t s = 1; s <= 3; ++s) fns.push_back(generate_perturbed(s, 16, 0.5));
  const DiskGrid grid = DiskGrid::default_grid();
  const double h = 1e-5;
  double worst = 0.0;
  for (const AnalyticFunction& f : fns) {
    for (std::size_t i = 0; i < grid.radii.size(); ++i) {
      for (int k = 0; k < grid.angles_per_radius; ++k) {
        const Complex z = grid.point(i, k);
        const Triple t = f.eval_triple(z);
        for (Complex step : {Complex(h, 0), Complex(0, h)}) {
          const Triple p = f.eval_triple(z + step);
          const Triple m = f.eval_triple(z - step);
          const Complex d1 = (p.f - m.f) / (2.0 * step);
          const Complex d2 = (p.d1 - m.d1) / (2.0 * step);
          worst = std::max(worst, std::abs(t.d1 - d1) / std::max(1.0, std::abs(t.d1)));
          worst = std::max(worst, std::abs(t.d2 - d2) / std::max(1.0, std::abs(t.d2)));
        }
      }
    }
  }
  return {worst <= 1e-6, fmt("%zu builtins over %zu grid points, worst relative error %.3g (limit 1e-6)", fns.size(),
                             grid.size(), worst)};
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](int id, const std::function<Check()>& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    Check o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failures += !o.pass;
    std::printf("%s %d [%.2f s] %s\n", o.pass ? "PASS" : "FAIL", id, s, o.detail.c_str());
    std::fflush(stdout);
  };

  report(1, identity_suite);
  report(2, dual_backend);
  report(3, libera_coincidence);
  report(4, koebe_oracle);
  report(5, equivalences);

  CatalogReport catalog;
  double catalog_seconds = 0.0;
  try {
    const auto t0 = std::chrono::steady_clock::now();
    catalog = run_catalog(ExperimentConfig{});
    catalog_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  } catch (const std::exception& e) {
    std::printf("catalog run failed: %s\n", e.what());
  }
  report(6, [&] { return unconditional(catalog, catalog_seconds); });
  report(7, [&] { return conditional(catalog); });
  report(8, determinism);
  report(9, finite_differences);

  std::printf("%d of 9 criteria passed\n", 9 - failures);
  return failures == 0 ? 0 : 1;
}
