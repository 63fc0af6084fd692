#pragma once

#include <functional>
#include <span>

#include "whlab/grid.hpp"
#include "whlab/spaces.hpp"

namespace whlab {

/// Multiplier a sampled at the frequency nodes (centered order).
class Symbol {
public:
  Symbol(Grid grid, Eigen::ArrayXcd values);

  static Symbol constant(const Grid& grid, Complex c);
  /// peak * exp(-|xi - center|^2 / (2 sigma^2)).
  static Symbol gaussian(const Grid& grid, const Point& center, double sigma, double peak = 1.0);
  /// Smooth 0 -> 1 transition in xi_1 across [edge - width/2, edge + width/2].
  static Symbol smoothed_step(const Grid& grid, double edge, double width);
  static Symbol sampled(const Grid& grid, const std::function<Complex(const Point&)>& rule);

  const Grid& grid() const { return grid_; }
  const Eigen::ArrayXcd& values() const { return values_; }
  double sup_norm() const { return sup_norm_; }

  Complex at(const Point& xi) const { return values_(grid_.frequency_index(xi)); }

  /// The frequency node where |a| is maximal and farthest (cyclically) from
  /// nodes where it is not; the zero frequency for constant symbols.
  Point lebesgue_point() const;

  Symbol operator*(Complex c) const { return Symbol(grid_, c * values_); }
  Symbol operator+(const Symbol& other) const;

private:
  Grid grid_;
  Eigen::ArrayXcd values_;
  double sup_norm_;
};

/// Riemann-sum Fourier transform (Fu)(xi_k) = sum_m u(x_m) e^{-i x_m xi_k} h^n.
GridFunction fourier(const GridFunction& u);

/// Discrete inverse with (2 pi)^{-n} normalisation; exact inverse of fourier().
GridFunction inverse_fourier(const GridFunction& v);

/// F^{-1} a F u.
GridFunction apply_multiplier(const Symbol& a, const GridFunction& u);

/// W_Omega(a) u = r_Omega F^{-1} a F e_Omega u.
GridFunction wiener_hopf_apply(const Symbol& a, const DomainMask& omega, const GridFunction& u);

/// max over probes of ||W_Omega(a) u||_X / ||u||_X, Omega being the domain of
/// the space. A lower bound for the operator norm only. Probes vanishing on
/// Omega are skipped; throws ValidationError if all of them vanish.
double norm_probe(const Symbol& a, const SpaceSpec& space, std::span<const GridFunction> probes);

/// Support placement rule keeping periodic wrap-around negligible: diameter
/// at most L/2, centre within 3L/4 of the origin on every axis, support
/// inside the box.
bool within_support_margin(const Ball& support, const Grid& grid);

} // namespace whlab
