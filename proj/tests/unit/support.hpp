#pragma once

#include <cstdint>
#include <vector>

#include "schlicht/random.hpp"
#include "schlicht/series.hpp"

namespace testing {

using schlicht::Complex;
using schlicht::Series;

inline Series random_series(std::uint64_t seed, int order, double a0 = 0.0, bool normalized = true) {
  schlicht::Rng rng(seed);
  std::vector<Complex> c(static_cast<std::size_t>(order) + 1);
  for (auto& v : c) v = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
  if (normalized) {
    c[0] = a0;
    c[1] = 1.0;
  }
  return Series(std::move(c));
}

inline double max_abs(const Series& s) {
  double m = 0.0;
  for (Complex v : s.coeffs()) m = std::max(m, std::abs(v));
  return m;
}

inline double max_diff(const Series& a, const Series& b) {
  const int n = std::max(a.order(), b.order());
  const Series x = a.resized(n);
  const Series y = b.resized(n);
  double m = 0.0;
  for (int k = 0; k <= n; ++k) m = std::max(m, std::abs(x[k] - y[k]));
  return m;
}

}  // namespace testing
