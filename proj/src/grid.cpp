#include "whlab/grid.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "whlab/format.hpp"

namespace whlab {

namespace {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

constexpr double two_pi = 2.0 * std::numbers::pi;

} // namespace

Grid Grid::make(int dimension, double half_width, int points_per_axis) {
  require(dimension == 1 || dimension == 2, "grid dimension must be 1 or 2");
  require(std::isfinite(half_width) && half_width > 0.0,
          "grid half-width L must be positive");
  require(points_per_axis >= 8 && is_power_of_two(points_per_axis),
          "points per axis N must be a power of two >= 8");
  return Grid(dimension, half_width, points_per_axis);
}

Index Grid::nearest_node(const Point& x) const {
  auto axis = [&](double c) {
    long m = std::lround((c + half_width_) / spacing());
    return int(std::clamp<long>(m, 0, points_ - 1));
  };
  return dimension_ == 1 ? flat_index(axis(x(0))) : flat_index(axis(x(0)), axis(x(1)));
}

Index Grid::frequency_index(const Point& xi) const {
  auto axis = [&](double c) {
    double slot = c / frequency_spacing() + points_ / 2;
    long j = std::lround(slot);
    require(j >= 0 && j < points_ && std::abs(slot - double(j)) < 1e-6,
            "frequency point is not a node of the frequency grid");
    return int(j);
  };
  if (dimension_ == 1) {
    require(xi(1) == 0.0, "one-dimensional frequency must have zero second component");
    return flat_index(axis(xi(0)));
  }
  return flat_index(axis(xi(0)), axis(xi(1)));
}

GridFunction::GridFunction(Grid grid, Eigen::ArrayXcd values, Side side)
    : grid_(grid), side_(side), values_(std::move(values)) {
  require(values_.size() == grid_.size(), "value count must equal N^n");
  if (!values_.isFinite().all())
    throw NumericError("grid function has non-finite values");
}

void require_same_grid(const GridFunction& a, const GridFunction& b) {
  require(a.grid() == b.grid(), "grid mismatch");
  require(a.side() == b.side(), "spatial/frequency side mismatch");
}

GridFunction operator+(const GridFunction& a, const GridFunction& b) {
  require_same_grid(a, b);
  return GridFunction(a.grid(), a.values() + b.values(), a.side());
}

GridFunction operator-(const GridFunction& a, const GridFunction& b) {
  require_same_grid(a, b);
  return GridFunction(a.grid(), a.values() - b.values(), a.side());
}

GridFunction operator*(Complex c, const GridFunction& u) {
  return GridFunction(u.grid(), c * u.values(), u.side());
}

Ball::Ball(Point c, double r) : center(std::move(c)), radius(r) {
  require(std::isfinite(r) && r > 0.0, "ball radius must be positive");
}

double Ball::volume(int dimension) const {
  return dimension == 1 ? 2.0 * radius : std::numbers::pi * radius * radius;
}

Index ball_node_count(const Ball& ball, const Grid& grid) {
  Index count = 0;
  for (Index i = 0; i < grid.size(); ++i) count += ball.contains(grid, grid.node(i));
  return count;
}

GridFunction ball_indicator(const Ball& ball, const Grid& grid) {
  Eigen::ArrayXcd values(grid.size());
  Index count = 0;
  for (Index i = 0; i < grid.size(); ++i) {
    bool in = ball.contains(grid, grid.node(i));
    values(i) = in ? 1.0 : 0.0;
    count += in;
  }
  if (count == 0) throw NumericError("degenerate ball: no grid node inside");
  return GridFunction(grid, std::move(values));
}

DomainMask::DomainMask(Grid grid, Kind kind, Eigen::Array<bool, Eigen::Dynamic, 1> inside,
                       double a1, double a2)
    : grid_(grid), kind_(kind), inside_(std::move(inside)), alpha1_(a1), alpha2_(a2) {
  require(inside_.size() == grid_.size(), "mask size must equal N^n");
  require(inside_.any(), "domain mask must contain at least one node");
}

DomainMask DomainMask::full(const Grid& grid) {
  return DomainMask(grid, Kind::full_space,
                    Eigen::Array<bool, Eigen::Dynamic, 1>::Constant(grid.size(), true));
}

DomainMask DomainMask::half_line(const Grid& grid) {
  require(grid.dimension() == 1, "half-line domain requires n = 1");
  Eigen::Array<bool, Eigen::Dynamic, 1> inside(grid.size());
  for (Index i = 0; i < grid.size(); ++i) inside(i) = grid.coordinate(int(i)) >= 0.0;
  return DomainMask(grid, Kind::half_line, std::move(inside));
}

namespace {

// Angle of x measured counterclockwise from alpha1, in [0, 2 pi).
double relative_angle(const Point& x, double alpha1) {
  double t = std::atan2(x(1), x(0)) - alpha1;
  t = std::fmod(t, two_pi);
  if (t < 0.0) t += two_pi;
  return t;
}

double distance_to_ray(const Point& x, double angle) {
  Point u(std::cos(angle), std::sin(angle));
  double t = x.dot(u);
  return t > 0.0 ? (x - t * u).norm() : x.norm();
}

} // namespace

DomainMask DomainMask::sector(const Grid& grid, double alpha1, double alpha2) {
  require(grid.dimension() == 2, "sector cone requires n = 2");
  double aperture = alpha2 - alpha1;
  require(aperture > 0.0 && aperture <= two_pi + 1e-12,
          "sector aperture must satisfy 0 < alpha2 - alpha1 <= 2 pi");
  Eigen::Array<bool, Eigen::Dynamic, 1> inside(grid.size());
  for (Index i = 0; i < grid.size(); ++i) {
    Point x = grid.node(i);
    if (x(0) == 0.0 && x(1) == 0.0) {
      inside(i) = false;
      continue;
    }
    double t = relative_angle(x, alpha1);
    inside(i) = t > 0.0 && t < aperture;
  }
  return DomainMask(grid, Kind::sector, std::move(inside), alpha1, alpha2);
}

DomainMask DomainMask::from_indicator(const Grid& grid,
                                      Eigen::Array<bool, Eigen::Dynamic, 1> inside) {
  return DomainMask(grid, Kind::explicit_mask, std::move(inside));
}

bool DomainMask::contains_point(const Point& x) const {
  switch (kind_) {
  case Kind::full_space: return true;
  case Kind::half_line: return x(0) >= 0.0;
  case Kind::sector: {
    if (x(0) == 0.0 && x(1) == 0.0) return false;
    double t = relative_angle(x, alpha1_);
    return t > 0.0 && t < alpha2_ - alpha1_;
  }
  case Kind::explicit_mask: break;
  }
  throw ValidationError("continuum membership is undefined for explicit masks");
}

double DomainMask::boundary_distance(const Point& x) const {
  switch (kind_) {
  case Kind::full_space: return std::numeric_limits<double>::infinity();
  case Kind::half_line: return std::max(0.0, x(0));
  case Kind::sector:
    if (!contains_point(x)) return 0.0;
    return std::min(distance_to_ray(x, alpha1_), distance_to_ray(x, alpha2_));
  case Kind::explicit_mask: break;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

Point DomainMask::central_ray() const {
  switch (kind_) {
  case Kind::full_space:
  case Kind::half_line: return point(1.0);
  case Kind::sector: {
    double mid = 0.5 * (alpha1_ + alpha2_);
    return Point(std::cos(mid), std::sin(mid));
  }
  case Kind::explicit_mask: break;
  }
  throw ValidationError("explicit masks have no central ray");
}

double DomainMask::central_ray_clearance() const {
  switch (kind_) {
  case Kind::full_space: return std::numeric_limits<double>::infinity();
  case Kind::half_line: return 1.0;
  case Kind::sector: {
    double half = 0.5 * (alpha2_ - alpha1_);
    return half >= 0.5 * std::numbers::pi ? 1.0 : std::sin(half);
  }
  case Kind::explicit_mask: break;
  }
  throw ValidationError("explicit masks have no central ray");
}

bool DomainMask::contains_ball(const Ball& ball) const {
  if (kind_ != Kind::explicit_mask) {
    if (!contains_point(ball.center)) return false;
    if (boundary_distance(ball.center) < ball.radius) return false;
  }
  for (Index i = 0; i < grid_.size(); ++i)
    if (!inside_(i) && ball.contains(grid_, grid_.node(i))) return false;
  return true;
}

GridFunction restrict_to(const GridFunction& u, const DomainMask& omega) {
  require(u.grid() == omega.grid(), "grid mismatch between function and domain");
  return GridFunction(u.grid(), omega.indicator().select(u.values(), Complex(0.0)),
                      u.side());
}

GridFunction extend_by_zero(const GridFunction& u, const DomainMask& omega) {
  return restrict_to(u, omega);
}

void write_csv(std::ostream& out, const GridFunction& u) {
  const Grid& g = u.grid();
  bool freq = u.side() == Side::frequency;
  const char* base = freq ? "xi" : "x";
  out << "index,";
  if (g.dimension() == 1)
    out << base;
  else
    out << base << "1," << base << "2";
  out << ",re,im\n";
  for (Index i = 0; i < u.size(); ++i) {
    Point x = freq ? g.frequency_node(i) : g.node(i);
    out << i << ',' << exact(x(0));
    if (g.dimension() == 2) out << ',' << exact(x(1));
    out << ',' << exact(u[i].real()) << ',' << exact(u[i].imag()) << '\n';
  }
}

GridFunction read_csv(std::istream& in, const Grid& grid) {
  std::string line;
  require(bool(std::getline(in, line)), "CSV is empty");
  bool freq = line.find("xi") != std::string::npos;
  const std::string expected = grid.dimension() == 1
                                   ? (freq ? "index,xi,re,im" : "index,x,re,im")
                                   : (freq ? "index,xi1,xi2,re,im" : "index,x1,x2,re,im");
  require(line == expected, "CSV header must be '" + expected + "'");
  Eigen::ArrayXcd values(grid.size());
  Index row = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> fields;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) fields.push_back(std::stod(cell));
    require(fields.size() == std::size_t(grid.dimension() + 3), "CSV row has wrong arity");
    require(row < grid.size() && Index(fields[0]) == row, "CSV rows must be in node order");
    values(row) = Complex(fields[fields.size() - 2], fields.back());
    ++row;
  }
  require(row == grid.size(), "CSV row count must equal N^n");
  return GridFunction(grid, std::move(values), freq ? Side::frequency : Side::spatial);
}

} // namespace whlab
