#include <doctest.h>

#include <cmath>
#include <numbers>

#include "schlicht/classify.hpp"
#include "schlicht/error.hpp"
#include "schlicht/generate.hpp"
#include "support.hpp"

using namespace schlicht;

namespace {

const DiskGrid kDefault = DiskGrid::default_grid();

DiskGrid ladder_to(double r, int angles = 256) {
  DiskGrid g;
  for (double x : {0.1, 0.3, 0.5, 0.7, 0.85, 0.95, 0.99}) {
    if (x < r) g.radii.push_back(x);
  }
  g.radii.push_back(r);
  g.angles_per_radius = angles;
  return g;
}

// Brute-force minimum of Re(h(z)) over |z| <= radii, angles sampled densely.
template <typename H>
double brute_min(const std::vector<double>& radii, int angles, H h) {
  double m = std::numeric_limits<double>::infinity();
  for (double r : radii) {
    for (int k = 0; k < angles; ++k) m = std::min(m, h(std::polar(r, 2.0 * std::numbers::pi * k / angles)).real());
  }
  return m;
}

std::vector<AnalyticFunction> sample_polys() {
  std::vector<AnalyticFunction> out;
  for (std::uint64_t s = 1; s <= 10; ++s) out.push_back(generate_perturbed(s, 12, 0.2 + 0.1 * static_cast<double>(s)));
  return out;
}

}  // namespace

TEST_CASE("class parameters are validated") {
  const AnalyticFunction id = AnalyticFunction::identity();
  CHECK_THROWS_AS(certify(id, ClassSpec::starlike(1.0), kDefault), InvalidParameter);
  CHECK_THROWS_AS(certify(id, ClassSpec::starlike(-0.1), kDefault), InvalidParameter);
  CHECK_THROWS_AS(certify(id, ClassSpec::close_to_convex(1.0, 0.0), kDefault, id), InvalidParameter);
  CHECK_THROWS_AS(certify(id, ClassSpec::strongly_starlike(0.0, 0.0), kDefault), InvalidParameter);
  CHECK_THROWS_AS(certify(id, ClassSpec::strongly_starlike(1.5, 0.0), kDefault), InvalidParameter);
  DiskGrid bad = kDefault;
  bad.radii.push_back(0.9995);
  CHECK_THROWS_AS(certify(id, ClassSpec::starlike(0.0), bad), InvalidParameter);
  bad = kDefault;
  bad.angles_per_radius = 4;
  CHECK_THROWS_AS(certify(id, ClassSpec::starlike(0.0), bad), InvalidParameter);
}

TEST_CASE("class labels") {
  CHECK(ClassSpec::starlike(0.5).label() == "starlike:lambda=0.5");
  CHECK(ClassSpec::close_to_convex(0.25, 0).label() == "close-to-convex:beta=0.25,lambda=0");
  CHECK(ClassSpec::strongly_convex(0.5, 0.1).lifted(OperatorSpec::jks(2)).label() ==
        "strongly-convex:eta=0.5,lambda=0.1,sigma=2");
  CHECK(ClassSpec::convex(0).lifted(OperatorSpec::bernardi(1)).label() == "convex:lambda=0,c=1");
}

TEST_CASE("identity is starlike of order one half with margin one half") {
  const Verdict v = certify(AnalyticFunction::identity(), ClassSpec::starlike(0.5), kDefault);
  CHECK(v.status == Status::member);
  CHECK(v.margin == 0.5);
  CHECK(v.reliable);
  CHECK(v.class_label == "starlike:lambda=0.5");
}

TEST_CASE("koebe starlike margin at the outer radius") {
  const auto ratio = [](Complex z) { return (1.0 + z) / (1.0 - z); };
  for (double r : {0.3, 0.6, 0.8, 0.95}) {
    const DiskGrid grid = ladder_to(r);
    const Verdict v = certify(AnalyticFunction::koebe(0.0), ClassSpec::starlike(0.0), grid);
    CHECK(v.status == Status::member);
    CHECK(std::abs(v.radius_margins.back() - (1 - r) / (1 + r)) <= 1e-9);
    CHECK(std::abs(v.margin - brute_min({r}, 10000, ratio)) <= 1e-9);
    CHECK(std::abs(v.witness - Complex(-r, 0.0)) <= 1e-12);
  }
}

TEST_CASE("koebe is not convex") {
  const Verdict v = certify(AnalyticFunction::koebe(0.0), ClassSpec::convex(0.0), kDefault);
  CHECK(v.status == Status::non_member);
  CHECK(v.margin < 0.0);
  const double oracle = brute_min(kDefault.radii, 256, [](Complex z) { return (1.0 + 4.0 * z + z * z) / (1.0 - z * z); });
  CHECK(v.margin == doctest::Approx(oracle).epsilon(1e-12));
  CHECK(v.margin == doctest::Approx((1 - 4 * 0.95 + 0.95 * 0.95) / (1 - 0.95 * 0.95)).epsilon(1e-12));
  // convex on |z| <= 0.25, below 2 - sqrt 3
  const Verdict small = certify(AnalyticFunction::koebe(0.0), ClassSpec::convex(0.0), ladder_to(0.25));
  CHECK(small.status == Status::member);
}

TEST_CASE("half plane map is strongly starlike of order one") {
  const Verdict v = certify(AnalyticFunction::half_plane(), ClassSpec::strongly_starlike(1.0, 0.0), kDefault);
  CHECK(v.status == Status::member);
  CHECK(v.margin > 0.0);
  // arg of 1/(1 - z) on |z| = r peaks at asin(r)
  CHECK(v.margin == doctest::Approx(std::numbers::pi / 2 - std::asin(0.95)).epsilon(1e-4));
  const Verdict tight = certify(AnalyticFunction::half_plane(), ClassSpec::strongly_starlike(0.5, 0.0), kDefault);
  CHECK(tight.status == Status::non_member);
}

TEST_CASE("close-to-convex and quasi-convex need a companion") {
  const AnalyticFunction id = AnalyticFunction::identity();
  CHECK_THROWS_AS(certify(id, ClassSpec::close_to_convex(0.0, 0.0), kDefault), MissingCompanion);
  CHECK_THROWS_AS(certify(id, ClassSpec::quasi_convex(0.0, 0.0), kDefault), MissingCompanion);
  const Verdict v = certify(id, ClassSpec::close_to_convex(0.5, 0.0), kDefault, id);
  CHECK(v.status == Status::member);
  CHECK(v.margin == 0.5);
  const Verdict q = certify(id, ClassSpec::quasi_convex(0.25, 0.0), kDefault, id);
  CHECK(q.margin == 0.75);
}

TEST_CASE("strict mode certifies the companion") {
  const AnalyticFunction id = AnalyticFunction::identity();
  const AnalyticFunction bad = AnalyticFunction::polynomial({0, 1, 0.9});
  CertifyOptions strict;
  strict.strict = true;
  CHECK_THROWS_AS(certify(id, ClassSpec::close_to_convex(0.0, 0.0), kDefault, bad, strict), InvalidParameter);
  CHECK_NOTHROW(certify(id, ClassSpec::close_to_convex(0.0, 0.0), kDefault, bad));
  CHECK_NOTHROW(certify(id, ClassSpec::close_to_convex(0.0, 0.0), kDefault, id, strict));
}

TEST_CASE("a zero of f on the grid is inconclusive") {
  const AnalyticFunction f = AnalyticFunction::polynomial({0, 1, -2});
  const Verdict v = certify(f, ClassSpec::starlike(0.0), kDefault);
  CHECK(v.status == Status::inconclusive);
  CHECK(v.division_near_zero);
  CHECK_FALSE(v.reliable);
  CHECK(std::abs(v.witness - Complex(0.5)) <= 1e-12);
}

TEST_CASE("unreliable series evaluations are inconclusive") {
  std::vector<Complex> c(33, 1.0);
  c[0] = 0.0;
  const Verdict v = certify(AnalyticFunction::from_series(Series(c)), ClassSpec::starlike(0.0), kDefault);
  CHECK(v.status == Status::inconclusive);
  CHECK_FALSE(v.reliable);
}

TEST_CASE("nonmember verdicts have negative margin") {
  for (const AnalyticFunction& f : sample_polys()) {
    for (const ClassSpec& spec : {ClassSpec::starlike(0.3), ClassSpec::convex(0.0), ClassSpec::strongly_starlike(0.5, 0.0)}) {
      const Verdict v = certify(f, spec, kDefault);
      if (v.status == Status::non_member) CHECK(v.margin < 0.0);
      if (v.status == Status::member) CHECK(v.margin >= kMarginFloor);
      if (v.reliable && std::abs(v.margin) >= kMarginFloor) CHECK(v.status != Status::inconclusive);
    }
  }
}

TEST_CASE("lifted classes") {
  const AnalyticFunction id = AnalyticFunction::identity();
  for (double c : {-0.5, 0.0, 1.0, 4.0}) {
    const Verdict v = certify_lifted_pair(id, ClassSpec::starlike(0.25).lifted(OperatorSpec::bernardi(c)), kDefault);
    CHECK(v.status == Status::member);
    CHECK(v.margin == doctest::Approx(0.75).epsilon(1e-14));
  }
  CHECK_THROWS_AS(certify_lifted_pair(id, ClassSpec::starlike(0.0), kDefault), InvalidParameter);

  const AnalyticFunction k = AnalyticFunction::koebe(0.0);
  const Verdict v = certify_lifted_pair(k, ClassSpec::starlike(0.0).lifted(OperatorSpec::bernardi(1.0)), kDefault);
  CHECK(v.status == Status::member);
  CHECK(v.series_order >= 64);

  const ClassSpec cv = ClassSpec::strongly_convex(1.0, 0.0).lifted(OperatorSpec::bernardi(1.0));
  const Verdict n = certify_lifted_pair(k, cv, kDefault);
  CHECK(n.nondegeneracy_ok);
  CHECK(n.nondegeneracy_gap > kDegeneracyFloor);
  // the unlifted class has no such condition
  CHECK(certify(k, ClassSpec::strongly_convex(1.0, 0.0), kDefault).nondegeneracy_gap == 0.0);
}

TEST_CASE("lifted verdict equals the verdict of the image") {
  const AnalyticFunction k = AnalyticFunction::koebe(0.2, Complex(0, 1));
  const OperatorSpec op = OperatorSpec::jks(0.5);
  const Verdict lifted = certify_lifted_pair(k, ClassSpec::starlike(0.1).lifted(op), kDefault);
  const Verdict image = certify(AnalyticFunction::applied(op, k), ClassSpec::starlike(0.1), kDefault);
  CHECK(lifted.margin == image.margin);
  CHECK(lifted.status == image.status);
}

TEST_CASE("hypothesis margins vanish for the identity") {
  const AnalyticFunction id = AnalyticFunction::identity();
  for (double c : {-0.5, 0.0, 2.0}) {
    HypothesisParams p;
    p.op = OperatorSpec::bernardi(c);
    const HypothesisMargin h = hypothesis_margin(id, HypothesisId::re_difference, p, kDefault);
    CHECK(h.margin == 0.0);
    CHECK(h.reliable);
    const HypothesisMargin a = hypothesis_margin(id, HypothesisId::arg_comparison, p, kDefault);
    CHECK(a.margin == 0.0);
    const HypothesisMargin g = hypothesis_margin(id, HypothesisId::companion_re_difference, p, kDefault, id);
    CHECK(g.margin == 0.0);
  }
  HypothesisParams p;
  CHECK_THROWS_AS(hypothesis_margin(id, HypothesisId::companion_re_difference, p, kDefault), MissingCompanion);
  CHECK_THROWS_AS(hypothesis_margin(id, HypothesisId::close_to_convex_derivative, p, kDefault), MissingCompanion);
  CHECK_THROWS_AS(hypothesis_margin(id, HypothesisId::quasi_convex_derivative, p, kDefault), MissingCompanion);
}

TEST_CASE("koebe re-difference against the closed form of its Libera image") {
  DiskGrid grid;
  grid.radii = {0.2, 0.4, 0.6, 0.8};
  grid.angles_per_radius = 64;
  HypothesisParams p;
  p.op = OperatorSpec::bernardi(1.0);
  const HypothesisMargin h = hypothesis_margin(AnalyticFunction::koebe(0.0), HypothesisId::re_difference, p, grid);
  CHECK(h.reliable);
  // L_1 f = (2/z)(1/(1-z) + log(1-z) - 1), so z(L_1 f)'/L_1 f = -1 + z f / (1/(1-z) + log(1-z) - 1)
  const double oracle = brute_min(grid.radii, 64, [](Complex z) {
    const Complex f = z / ((1.0 - z) * (1.0 - z));
    const Complex inner = 1.0 / (1.0 - z) + std::log(1.0 - z) - 1.0;
    return (1.0 + z) / (1.0 - z) - (-1.0 + z * f / inner);
  });
  CHECK(std::abs(h.margin - oracle) <= 1e-6);
  CHECK(h.margin < 0.0);
  CHECK(h.margin == doctest::Approx(-0.28795190961078215).epsilon(1e-6));
}

TEST_CASE("nondegeneracy hypotheses") {
  HypothesisParams p;
  p.op = OperatorSpec::bernardi(1.0);
  p.lambda = 0.25;
  const AnalyticFunction id = AnalyticFunction::identity();
  const HypothesisMargin s = hypothesis_margin(id, HypothesisId::nondegenerate_starlike, p, kDefault);
  CHECK(s.margin == doctest::Approx(0.75 - kDegeneracyFloor).epsilon(1e-14));
  const HypothesisMargin c = hypothesis_margin(id, HypothesisId::nondegenerate_convex, p, kDefault);
  CHECK(c.margin == doctest::Approx(0.75 - kDegeneracyFloor).epsilon(1e-14));
}

TEST_CASE("convex margins equal starlike margins of z f'") {
  std::vector<AnalyticFunction> fns = sample_polys();
  fns.push_back(AnalyticFunction::from_series(testing::random_series(9, 24)));
  for (const AnalyticFunction& f : fns) {
    const AnalyticFunction zf = z_derivative_of(f, 64);
    for (double lambda : {0.0, 0.4}) {
      const Verdict a = certify(f, ClassSpec::convex(lambda), kDefault);
      const Verdict b = certify(zf, ClassSpec::starlike(lambda), kDefault);
      CHECK(std::abs(a.margin - b.margin) <= 1e-12 * std::max(1.0, std::abs(a.margin)));
      const Verdict sa = certify(f, ClassSpec::strongly_convex(0.7, lambda), kDefault);
      const Verdict sb = certify(zf, ClassSpec::strongly_starlike(0.7, lambda), kDefault);
      CHECK(std::abs(sa.margin - sb.margin) <= 1e-12);
    }
  }
}

TEST_CASE("quasi-convex margins equal close-to-convex margins of z f' against z g'") {
  const AnalyticFunction g = generate_perturbed(77, 10, 0.3);
  const AnalyticFunction zg = z_derivative_of(g, 64);
  for (const AnalyticFunction& f : sample_polys()) {
    const Verdict a = certify(f, ClassSpec::quasi_convex(0.2, 0.0), kDefault, g);
    const Verdict b = certify(z_derivative_of(f, 64), ClassSpec::close_to_convex(0.2, 0.0), kDefault, zg);
    CHECK(std::abs(a.margin - b.margin) <= 1e-12 * std::max(1.0, std::abs(a.margin)));
  }
}

TEST_CASE("lift commutes with the derivative") {
  for (const OperatorSpec& op : {OperatorSpec::bernardi(0.5), OperatorSpec::bernardi(-0.3), OperatorSpec::jks(1.5)}) {
    for (const AnalyticFunction& f : sample_polys()) {
      const Verdict a = certify_lifted_pair(z_derivative_of(f, 64), ClassSpec::starlike(0.1).lifted(op), kDefault);
      const Verdict b = certify_lifted_pair(f, ClassSpec::convex(0.1).lifted(op), kDefault);
      CHECK(std::abs(a.margin - b.margin) <= 1e-12 * std::max(1.0, std::abs(a.margin)));
    }
  }
}

TEST_CASE("refined grids never raise the margin") {
  std::vector<AnalyticFunction> fns = sample_polys();
  fns.push_back(AnalyticFunction::koebe(0.3));
  fns.push_back(AnalyticFunction::half_plane());
  for (const AnalyticFunction& f : fns) {
    for (const ClassSpec& spec : {ClassSpec::starlike(0.0), ClassSpec::convex(0.2), ClassSpec::strongly_starlike(0.6, 0.1)}) {
      double prev = certify(f, spec, kDefault).margin;
      for (int level = 1; level <= 2; ++level) {
        const Verdict v = certify(f, spec, kDefault.refined(level));
        if (!v.reliable) continue;
        CHECK(v.margin <= prev);
        prev = v.margin;
      }
    }
  }
}

TEST_CASE("starlike of order zero agrees with strongly starlike of order one in sign") {
  std::vector<AnalyticFunction> fns;
  for (std::uint64_t s = 1; s <= 30; ++s) fns.push_back(generate_perturbed(s, 8, 0.5 + 0.1 * static_cast<double>(s)));
  fns.push_back(AnalyticFunction::koebe(0.0));
  fns.push_back(AnalyticFunction::koebe(0.6, std::polar(1.0, 1.0)));
  fns.push_back(AnalyticFunction::half_plane());
  int non_members = 0;
  for (const AnalyticFunction& f : fns) {
    const Verdict a = certify(f, ClassSpec::starlike(0.0), kDefault);
    const Verdict b = certify(f, ClassSpec::strongly_starlike(1.0, 0.0), kDefault);
    if (a.status == Status::inconclusive || b.status == Status::inconclusive) continue;
    CHECK((a.margin > 0) == (b.margin > 0));
    non_members += a.margin < 0;
  }
  CHECK(non_members > 0);
}

TEST_CASE("ties keep the earliest grid point") {
  const Verdict v = certify(AnalyticFunction::identity(), ClassSpec::starlike(0.0), kDefault);
  CHECK(v.witness == kDefault.point(0, 0));
}
