#pragma once

#include <cmath>

#include "whlab/grid.hpp"

namespace whlab::test {

/// Indicator of the half-open interval [a, b) in the first coordinate, so that
/// grid-aligned endpoints give exact Riemann measures.
inline GridFunction interval(const Grid& g, double a, double b) {
  return sample(g, [=](const Point& x) { return (x(0) >= a && x(0) < b) ? 1.0 : 0.0; });
}

/// Real root of t^3 - t - 1 by Cardano's formula.
inline double plastic_number() {
  const double s = std::sqrt(69.0);
  return std::cbrt((9.0 + s) / 18.0) + std::cbrt((9.0 - s) / 18.0);
}

/// Bisection for a scalar increasing function on [lo, hi].
template <typename F>
double bisect(F f, double lo, double hi) {
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    (f(mid) > 0.0 ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

} // namespace whlab::test
