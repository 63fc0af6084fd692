#pragma once

#include <cmath>
#include <vector>

namespace whlab {

namespace detail {

// Modular of (f / lambda) with lambda = exp(log_lambda), over nodes with
// log-magnitudes `logs` and exponents `exps`.
inline double scaled_modular(const std::vector<double>& logs, const std::vector<double>& exps,
                             double cell_volume, double log_lambda) {
  double sum = 0.0;
  for (std::size_t i = 0; i < logs.size(); ++i)
    sum += std::exp(exps[i] * (logs[i] - log_lambda));
  return sum * cell_volume;
}

} // namespace detail

template <typename MagDerived, typename ExpDerived>
double luxemburg_norm(const Eigen::ArrayBase<MagDerived>& weighted_magnitude,
                      const Eigen::ArrayBase<ExpDerived>& exponent, double cell_volume) {
  std::vector<double> logs;
  std::vector<double> exps;
  logs.reserve(std::size_t(weighted_magnitude.size()));
  exps.reserve(std::size_t(weighted_magnitude.size()));
  for (Eigen::Index i = 0; i < weighted_magnitude.size(); ++i) {
    double m = weighted_magnitude(i);
    if (m > 0.0) {
      logs.push_back(std::log(m));
      exps.push_back(exponent(i));
    }
  }
  if (logs.empty()) return 0.0;

  auto fits = [&](double lambda) {
    return detail::scaled_modular(logs, exps, cell_volume, std::log(lambda)) <= 1.0;
  };

  // Bracket [lo, hi] with modular(f/hi) <= 1 < modular(f/lo), hi = 2 lo.
  double lo;
  double hi;
  double lambda = 1.0;
  if (!fits(lambda)) {
    for (int k = 0; k < 2200 && !fits(lambda); ++k) lambda *= 2.0;
    hi = lambda;
    lo = 0.5 * lambda;
  } else {
    for (int k = 0; k < 2200 && fits(lambda); ++k) lambda *= 0.5;
    lo = lambda;
    hi = 2.0 * lambda;
  }

  for (int k = 0; k < 200 && hi - lo > 1e-13 * hi; ++k) {
    double mid = 0.5 * (lo + hi);
    if (fits(mid))
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

} // namespace whlab
