#pragma once

#include <functional>

#include "whlab/grid.hpp"

namespace whlab {

/// Variable exponent p(.) sampled at nodes, 1 < p_- <= p(x) <= p_+ < inf.
class ExponentField {
public:
  ExponentField(Grid grid, Eigen::ArrayXd values);

  static ExponentField constant(const Grid& grid, double p);
  /// p = left for x1 < edge, right for x1 > edge, joined by a linear ramp
  /// spanning `cells` grid cells centred on the edge (a plain jump when 0).
  static ExponentField smoothed_step(const Grid& grid, double left, double right,
                                     double edge = 0.0, double cells = 0.0);
  static ExponentField sampled(const Grid& grid, const std::function<double(const Point&)>& rule);

  const Grid& grid() const { return grid_; }
  const Eigen::ArrayXd& values() const { return values_; }
  double min() const { return p_min_; }
  double max() const { return p_max_; }
  bool is_constant() const { return p_min_ == p_max_; }

  /// p'(x) = p(x) / (p(x) - 1).
  ExponentField conjugate() const;

private:
  Grid grid_;
  Eigen::ArrayXd values_;
  double p_min_;
  double p_max_;
};

/// Positive finite weight sampled at nodes.
class Weight {
public:
  Weight(Grid grid, Eigen::ArrayXd values);

  static Weight constant(const Grid& grid, double c = 1.0);
  /// |x|^gamma. The origin node (where the power is 0 or singular) takes the
  /// average of its axis neighbours.
  static Weight power(const Grid& grid, double gamma);
  static Weight sampled(const Grid& grid, const std::function<double(const Point&)>& rule);

  const Grid& grid() const { return grid_; }
  const Eigen::ArrayXd& values() const { return values_; }
  Weight reciprocal() const { return Weight(grid_, values_.inverse()); }
  bool is_unit() const { return (values_ == 1.0).all(); }

private:
  Grid grid_;
  Eigen::ArrayXd values_;
};

/// X(Omega) = L^{p(.)}(Omega, w) with ||f||_{X(Omega)} = ||e_Omega f w||_{L^{p(.)}}.
class SpaceSpec {
public:
  SpaceSpec(ExponentField exponent, Weight weight, DomainMask domain);

  /// Unweighted L^p over the given domain.
  static SpaceSpec lebesgue(const Grid& grid, double p);
  static SpaceSpec lebesgue(const DomainMask& domain, double p);

  const Grid& grid() const { return exponent_.grid(); }
  const ExponentField& exponent() const { return exponent_; }
  const Weight& weight() const { return weight_; }
  const DomainMask& domain() const { return domain_; }

  SpaceSpec with_domain(DomainMask domain) const {
    return SpaceSpec(exponent_, weight_, std::move(domain));
  }

private:
  ExponentField exponent_;
  Weight weight_;
  DomainMask domain_;
};

/// Riemann sum of |f w|^{p(x)} h^n over the nodes of Omega. Throws
/// NumericError("modular overflow") when the sum is not finite.
double modular(const GridFunction& f, const SpaceSpec& space);

/// inf{lambda > 0 : modular(f / lambda) <= 1}, relative accuracy 1e-10.
double luxemburg_norm(const GridFunction& f, const SpaceSpec& space);

/// Luxemburg norm from precomputed magnitudes |f w| and exponents over the
/// active nodes; zero magnitudes are allowed.
template <typename MagDerived, typename ExpDerived>
double luxemburg_norm(const Eigen::ArrayBase<MagDerived>& weighted_magnitude,
                      const Eigen::ArrayBase<ExpDerived>& exponent, double cell_volume);

/// L^{p'(.)}(Omega, 1/w).
SpaceSpec associate_space(const SpaceSpec& space);

/// (1/|B|) ||chi_B||_X ||chi_B||_{X'}, with X' realised as L^{p'(.)}(1/w).
/// Requires a full-space domain.
double berezhnoi_ratio(const Ball& ball, const SpaceSpec& space);

/// (1/|B|) ||w chi_B||_{L^{p(.)}} ||w^{-1} chi_B||_{L^{p'(.)}}, computed with
/// unweighted norms of the products.
double muckenhoupt_ratio(const Ball& ball, const ExponentField& p, const Weight& w);

} // namespace whlab

#include "whlab/detail/luxemburg.hpp"
