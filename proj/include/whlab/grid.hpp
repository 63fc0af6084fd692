#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <numbers>
#include <utility>

#include <Eigen/Core>

#include "whlab/errors.hpp"

namespace whlab {

using Index = Eigen::Index;
using Complex = std::complex<double>;

/// A point of R^n, n in {1,2}. One-dimensional points keep the second
/// component at zero.
using Point = Eigen::Vector2d;

inline Point point(double x1, double x2 = 0.0) { return Point(x1, x2); }

/// Truncated uniform grid on [-L, L)^n with N nodes per axis.
///
/// Spatial nodes are x_m = -L + m h, h = 2L/N. Frequency nodes are stored in
/// centered order: slot j in [0, N) carries xi = pi (j - N/2) / L. Flat node
/// indices are row-major with the first axis slowest.
class Grid {
public:
  static Grid make(int dimension, double half_width, int points_per_axis);

  int dimension() const { return dimension_; }
  double half_width() const { return half_width_; }
  int points_per_axis() const { return points_; }

  double spacing() const { return 2.0 * half_width_ / points_; }
  double cell_volume() const {
    return dimension_ == 1 ? spacing() : spacing() * spacing();
  }
  double frequency_spacing() const { return std::numbers::pi / half_width_; }
  /// Volume element of the frequency grid, (pi/L)^n.
  double frequency_cell_volume() const {
    return dimension_ == 1 ? frequency_spacing()
                           : frequency_spacing() * frequency_spacing();
  }

  Index size() const {
    return dimension_ == 1 ? Index(points_) : Index(points_) * points_;
  }

  double coordinate(int m) const { return -half_width_ + m * spacing(); }
  double frequency(int j) const {
    return frequency_spacing() * (j - points_ / 2);
  }

  int axis_index(Index flat, int axis) const {
    if (dimension_ == 1) return axis == 0 ? int(flat) : 0;
    return axis == 0 ? int(flat / points_) : int(flat % points_);
  }
  Index flat_index(int i0, int i1 = 0) const {
    return dimension_ == 1 ? Index(i0) : Index(i0) * points_ + i1;
  }

  Point node(Index flat) const {
    if (dimension_ == 1) return point(coordinate(int(flat)));
    return point(coordinate(axis_index(flat, 0)), coordinate(axis_index(flat, 1)));
  }
  Point frequency_node(Index flat) const {
    if (dimension_ == 1) return point(frequency(int(flat)));
    return point(frequency(axis_index(flat, 0)), frequency(axis_index(flat, 1)));
  }

  /// Nearest grid node (clamped into the box).
  Index nearest_node(const Point& x) const;
  /// Flat index of the frequency node equal to xi; throws if xi is off-grid.
  Index frequency_index(const Point& xi) const;

  /// Euclidean norm restricted to the active dimension.
  double norm(const Point& v) const {
    return dimension_ == 1 ? std::abs(v(0)) : v.norm();
  }

  friend bool operator==(const Grid& a, const Grid& b) {
    return a.dimension_ == b.dimension_ && a.points_ == b.points_ &&
           a.half_width_ == b.half_width_;
  }

private:
  Grid(int n, double L, int N) : dimension_(n), half_width_(L), points_(N) {}

  int dimension_;
  double half_width_;
  int points_;
};

enum class Side { spatial, frequency };

/// Complex samples on the nodes of a grid (spatial or frequency side).
class GridFunction {
public:
  GridFunction(Grid grid, Eigen::ArrayXcd values, Side side = Side::spatial);

  static GridFunction zeros(const Grid& grid, Side side = Side::spatial) {
    return GridFunction(grid, Eigen::ArrayXcd::Zero(grid.size()), side);
  }

  const Grid& grid() const { return grid_; }
  Side side() const { return side_; }
  const Eigen::ArrayXcd& values() const { return values_; }
  Complex operator[](Index i) const { return values_(i); }
  Index size() const { return values_.size(); }

  Eigen::ArrayXd magnitude() const { return values_.abs(); }
  double sup_norm() const {
    return values_.size() == 0 ? 0.0 : values_.abs().maxCoeff();
  }

private:
  Grid grid_;
  Side side_;
  Eigen::ArrayXcd values_;
};

void require_same_grid(const GridFunction& a, const GridFunction& b);

GridFunction operator+(const GridFunction& a, const GridFunction& b);
GridFunction operator-(const GridFunction& a, const GridFunction& b);
GridFunction operator*(Complex c, const GridFunction& u);

/// Samples a pointwise rule at every spatial node; the rule must return a
/// value convertible to std::complex<double>.
template <typename Rule>
GridFunction sample(const Grid& grid, Rule&& rule) {
  Eigen::ArrayXcd values(grid.size());
  for (Index i = 0; i < grid.size(); ++i) values(i) = Complex(rule(grid.node(i)));
  return GridFunction(grid, std::move(values));
}

/// Open Euclidean ball B(center, radius).
struct Ball {
  Point center;
  double radius;

  Ball(Point c, double r);
  bool contains(const Grid& grid, const Point& x) const {
    return grid.norm(x - center) < radius;
  }
  /// Continuum volume: 2R for n = 1, pi R^2 for n = 2.
  double volume(int dimension) const;
};

/// Indicator of the open ball sampled at node centers. Throws NumericError if
/// no node lies inside.
GridFunction ball_indicator(const Ball& ball, const Grid& grid);

/// Number of nodes inside the ball.
Index ball_node_count(const Ball& ball, const Grid& grid);

/// Node-level indicator of a domain Omega.
class DomainMask {
public:
  enum class Kind { full_space, half_line, sector, explicit_mask };

  static DomainMask full(const Grid& grid);
  /// n = 1, Omega = {x >= 0}.
  static DomainMask half_line(const Grid& grid);
  /// n = 2, open sector of angles (alpha1, alpha2), 0 < alpha2 - alpha1 <= 2 pi.
  static DomainMask sector(const Grid& grid, double alpha1, double alpha2);
  static DomainMask from_indicator(const Grid& grid, Eigen::Array<bool, Eigen::Dynamic, 1> inside);

  const Grid& grid() const { return grid_; }
  Kind kind() const { return kind_; }
  bool contains(Index node) const { return inside_(node); }
  const Eigen::Array<bool, Eigen::Dynamic, 1>& indicator() const { return inside_; }
  Index count() const { return inside_.count(); }
  double alpha1() const { return alpha1_; }
  double alpha2() const { return alpha2_; }

  /// Continuum membership of an arbitrary point (not available for explicit masks).
  bool contains_point(const Point& x) const;
  /// Continuum distance from an interior point to the complement of Omega.
  /// Infinite for the full space; NaN for explicit masks.
  double boundary_distance(const Point& x) const;
  /// Unit vector of the central ray (the positive first axis for full space).
  Point central_ray() const;
  /// Distance to the complement of a point at unit distance on the central ray.
  double central_ray_clearance() const;
  /// Continuum (when defined) and node-level containment of an open ball.
  bool contains_ball(const Ball& ball) const;

private:
  DomainMask(Grid grid, Kind kind, Eigen::Array<bool, Eigen::Dynamic, 1> inside,
             double a1 = 0.0, double a2 = 0.0);

  Grid grid_;
  Kind kind_;
  Eigen::Array<bool, Eigen::Dynamic, 1> inside_;
  double alpha1_;
  double alpha2_;
};

/// r_Omega with the embedding into the full grid: zero outside Omega.
GridFunction restrict_to(const GridFunction& u, const DomainMask& omega);
/// e_Omega: extension by zero; node-level it is the same action as restrict_to.
GridFunction extend_by_zero(const GridFunction& u, const DomainMask& omega);

/// CSV with header `index,x,re,im` (n = 1) or `index,x1,x2,re,im` (n = 2);
/// frequency-side functions use `xi` / `xi1,xi2`.
void write_csv(std::ostream& out, const GridFunction& u);
GridFunction read_csv(std::istream& in, const Grid& grid);

} // namespace whlab
