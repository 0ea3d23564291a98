#include "schlicht/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include "schlicht/error.hpp"

namespace schlicht {

namespace {

constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
// Gauss weights for the odd-indexed Kronrod nodes (1, 3, 5, 7).
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

struct Segment {
  double a;
  double b;
  QuadValue value;
  double error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment kronrod15(const std::function<QuadValue(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  QuadValue kron{}, gauss{};
  const QuadValue fc = f(center);
  for (std::size_t c = 0; c < 3; ++c) {
    kron[c] = kKronrodWeights[7] * fc[c];
    gauss[c] = kGaussWeights[3] * fc[c];
  }
  for (std::size_t i = 0; i < 7; ++i) {
    const double dx = half * kKronrodNodes[i];
    const QuadValue lo = f(center - dx);
    const QuadValue hi = f(center + dx);
    for (std::size_t c = 0; c < 3; ++c) {
      const Complex sum = lo[c] + hi[c];
      kron[c] += kKronrodWeights[i] * sum;
      if (i % 2 == 1) gauss[c] += kGaussWeights[i / 2] * sum;
    }
  }
  Segment s{a, b, {}, 0.0};
  for (std::size_t c = 0; c < 3; ++c) {
    s.value[c] = kron[c] * half;
    s.error = std::max(s.error, std::abs((kron[c] - gauss[c]) * half));
  }
  return s;
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<QuadValue(double)>& integrand, double a, double b,
                                    double abs_tol, int max_intervals) {
  std::priority_queue<Segment> heap;
  heap.push(kronrod15(integrand, a, b));
  double total_error = heap.top().error;
  while (total_error > abs_tol) {
    if (static_cast<int>(heap.size()) >= max_intervals) {
      throw QuadratureFailure("adaptive quadrature did not reach tolerance " + std::to_string(abs_tol) +
                              " (estimate " + std::to_string(total_error) + ")");
    }
    const Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    Segment left = kronrod15(integrand, worst.a, mid);
    Segment right = kronrod15(integrand, mid, worst.b);
    total_error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    if (!std::isfinite(total_error)) throw QuadratureFailure("adaptive quadrature: non-finite integrand");
  }
  // Re-sum in a fixed order so results do not depend on heap layout.
  std::vector<Segment> segments;
  segments.reserve(heap.size());
  while (!heap.empty()) {
    segments.push_back(heap.top());
    heap.pop();
  }
  std::sort(segments.begin(), segments.end(), [](const Segment& x, const Segment& y) { return x.a < y.a; });
  QuadratureResult r;
  r.intervals = static_cast<int>(segments.size());
  for (const auto& s : segments) {
    for (std::size_t c = 0; c < 3; ++c) r.value[c] += s.value[c];
    r.error += s.error;
  }
  return r;
}

}  // namespace schlicht
