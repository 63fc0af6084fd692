#include "whlab/spaces.hpp"

#include <algorithm>
#include <cmath>

namespace whlab {

ExponentField::ExponentField(Grid grid, Eigen::ArrayXd values)
    : grid_(grid), values_(std::move(values)) {
  require(values_.size() == grid_.size(), "exponent field size must equal N^n");
  require(values_.isFinite().all(), "exponent must be finite at every node");
  p_min_ = values_.minCoeff();
  p_max_ = values_.maxCoeff();
  require(p_min_ > 1.0, "exponent must satisfy p(x) > 1 at every node");
}

ExponentField ExponentField::constant(const Grid& grid, double p) {
  return ExponentField(grid, Eigen::ArrayXd::Constant(grid.size(), p));
}

ExponentField ExponentField::smoothed_step(const Grid& grid, double left, double right,
                                           double edge, double cells) {
  require(cells >= 0.0, "smoothing width must be non-negative");
  const double width = cells * grid.spacing();
  return sampled(grid, [&](const Point& x) {
    if (width == 0.0) return x(0) < edge ? left : right;
    double t = std::clamp((x(0) - edge) / width + 0.5, 0.0, 1.0);
    return left + (right - left) * t;
  });
}

ExponentField ExponentField::sampled(const Grid& grid,
                                     const std::function<double(const Point&)>& rule) {
  Eigen::ArrayXd values(grid.size());
  for (Index i = 0; i < grid.size(); ++i) values(i) = rule(grid.node(i));
  return ExponentField(grid, std::move(values));
}

ExponentField ExponentField::conjugate() const {
  return ExponentField(grid_, values_ / (values_ - 1.0));
}

Weight::Weight(Grid grid, Eigen::ArrayXd values) : grid_(grid), values_(std::move(values)) {
  require(values_.size() == grid_.size(), "weight size must equal N^n");
  require(values_.isFinite().all() && (values_ > 0.0).all(),
          "weight must satisfy 0 < w(x) < inf at every node");
}

Weight Weight::constant(const Grid& grid, double c) {
  return Weight(grid, Eigen::ArrayXd::Constant(grid.size(), c));
}

Weight Weight::power(const Grid& grid, double gamma) {
  require(std::isfinite(gamma), "power weight exponent must be finite");
  Eigen::ArrayXd values(grid.size());
  for (Index i = 0; i < grid.size(); ++i) {
    double r = grid.norm(grid.node(i));
    values(i) = r > 0.0 ? std::pow(r, gamma) : 0.0;
  }
  // The origin is a node (N even); replace it by the mean over its axis neighbours.
  const int mid = grid.points_per_axis() / 2;
  if (grid.dimension() == 1) {
    values(mid) = 0.5 * (values(mid - 1) + values(mid + 1));
  } else {
    values(grid.flat_index(mid, mid)) =
        0.25 * (values(grid.flat_index(mid - 1, mid)) + values(grid.flat_index(mid + 1, mid)) +
                values(grid.flat_index(mid, mid - 1)) + values(grid.flat_index(mid, mid + 1)));
  }
  return Weight(grid, std::move(values));
}

Weight Weight::sampled(const Grid& grid, const std::function<double(const Point&)>& rule) {
  Eigen::ArrayXd values(grid.size());
  for (Index i = 0; i < grid.size(); ++i) values(i) = rule(grid.node(i));
  return Weight(grid, std::move(values));
}

SpaceSpec::SpaceSpec(ExponentField exponent, Weight weight, DomainMask domain)
    : exponent_(std::move(exponent)), weight_(std::move(weight)), domain_(std::move(domain)) {
  require(exponent_.grid() == weight_.grid() && weight_.grid() == domain_.grid(),
          "exponent, weight and domain must share one grid");
}

SpaceSpec SpaceSpec::lebesgue(const Grid& grid, double p) {
  return lebesgue(DomainMask::full(grid), p);
}

SpaceSpec SpaceSpec::lebesgue(const DomainMask& domain, double p) {
  return SpaceSpec(ExponentField::constant(domain.grid(), p), Weight::constant(domain.grid()),
                   domain);
}

namespace {

Eigen::ArrayXd weighted_magnitude(const GridFunction& f, const SpaceSpec& space) {
  require(f.grid() == space.grid(), "function and space live on different grids");
  require(f.side() == Side::spatial, "norms are defined for spatial-side functions");
  return space.domain().indicator().select(f.values().abs() * space.weight().values(), 0.0);
}

} // namespace

double modular(const GridFunction& f, const SpaceSpec& space) {
  Eigen::ArrayXd m = weighted_magnitude(f, space);
  const Eigen::ArrayXd& p = space.exponent().values();
  double sum = 0.0;
  for (Index i = 0; i < m.size(); ++i)
    if (m(i) > 0.0) sum += std::pow(m(i), p(i));
  sum *= f.grid().cell_volume();
  if (!std::isfinite(sum)) throw NumericError("modular overflow");
  return sum;
}

double luxemburg_norm(const GridFunction& f, const SpaceSpec& space) {
  return luxemburg_norm(weighted_magnitude(f, space), space.exponent().values(),
                        f.grid().cell_volume());
}

SpaceSpec associate_space(const SpaceSpec& space) {
  return SpaceSpec(space.exponent().conjugate(), space.weight().reciprocal(), space.domain());
}

double berezhnoi_ratio(const Ball& ball, const SpaceSpec& space) {
  require(space.domain().kind() == DomainMask::Kind::full_space,
          "Berezhnoi ratio is defined over the full space");
  GridFunction chi = ball_indicator(ball, space.grid());
  double primal = luxemburg_norm(chi, space);
  double dual = luxemburg_norm(chi, associate_space(space));
  return primal * dual / ball.volume(space.grid().dimension());
}

double muckenhoupt_ratio(const Ball& ball, const ExponentField& p, const Weight& w) {
  require(p.grid() == w.grid(), "exponent and weight must share one grid");
  const Grid& grid = p.grid();
  GridFunction chi = ball_indicator(ball, grid);
  Eigen::ArrayXd in_ball = chi.values().real();
  double cell = grid.cell_volume();
  double primal = luxemburg_norm(in_ball * w.values(), p.values(), cell);
  double dual = luxemburg_norm(in_ball / w.values(), p.conjugate().values(), cell);
  return primal * dual / ball.volume(grid.dimension());
}

} // namespace whlab
