#pragma once

#include <cmath>

namespace whlab {

/// Smooth transition 0 -> 1 on [0, 1]: G(t) / (G(t) + G(1 - t)) with
/// G(t) = exp(-1/t) for t > 0 and 0 otherwise. Exactly 0 for t <= 0 and
/// exactly 1 for t >= 1.
inline double smooth_glue(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  double a = std::exp(-1.0 / t);
  double b = std::exp(-1.0 / (1.0 - t));
  return a / (a + b);
}

} // namespace whlab
