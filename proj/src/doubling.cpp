#include "whlab/doubling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "whlab/operators.hpp"

namespace whlab {

namespace {

bool inside_box(const Ball& ball, const Grid& grid) {
  for (int axis = 0; axis < grid.dimension(); ++axis)
    if (std::abs(ball.center(axis)) + ball.radius > grid.half_width()) return false;
  return true;
}

} // namespace

double doubling_ratio(const Point& center, double radius, double tau, const SpaceSpec& space) {
  require(tau > 1.0, "tau must exceed 1");
  const Grid& grid = space.grid();
  Ball outer(center, tau * radius);
  Ball inner(center, radius);
  require(inside_box(outer, grid), "inflated ball B(y, tau R) leaves the grid box");
  require(space.domain().contains_ball(outer), "inflated ball B(y, tau R) is not contained in Omega");
  double denom = luxemburg_norm(ball_indicator(inner, grid), space);
  if (denom < 1e-14) throw NumericError("degenerate inner ball: norm below 1e-14");
  return luxemburg_norm(ball_indicator(outer, grid), space) / denom;
}

bool inflated_balls_disjoint(std::span<const ScheduleBall> schedule, double tau, int dimension) {
  for (std::size_t j = 0; j < schedule.size(); ++j)
    for (std::size_t k = j + 1; k < schedule.size(); ++k) {
      Point d = schedule[j].center - schedule[k].center;
      double dist = dimension == 1 ? std::abs(d(0)) : d.norm();
      if (dist < tau * (schedule[j].radius + schedule[k].radius)) return false;
    }
  return true;
}

std::vector<ScheduleBall> separated_sequence(const DomainMask& omega, double tau,
                                             const FamilyParams& params) {
  require(tau > 1.0, "tau must exceed 1");
  require(params.theta > 0.0, "theta must be positive");
  require(params.count >= 2, "a separated family needs at least 2 balls");
  require(omega.kind() != DomainMask::Kind::explicit_mask,
          "separated families are built on cones (half-line, sector, full space)");
  const double spread = tau * params.theta;
  require(spread < std::min(1.0, omega.central_ray_clearance()),
          "tau * theta must be below the cone clearance (sin of the half-aperture, 1 for the half-line)");
  const double min_lambda = (1.0 + spread) / (1.0 - spread);
  require(params.lambda > min_lambda,
          "lambda must exceed (1 + tau theta) / (1 - tau theta) for disjoint inflated balls");

  const Grid& grid = omega.grid();
  const double L = grid.half_width();
  const Point ray = omega.central_ray();
  const double growth = std::pow(params.lambda, params.count);

  double y0;
  if (params.first_center) {
    y0 = *params.first_center;
  } else {
    double t_max = L / (4.0 * spread);
    for (int axis = 0; axis < grid.dimension(); ++axis) {
      double u = std::abs(ray(axis));
      if (u > 0.0) t_max = std::min(t_max, 0.75 * L / u);
      t_max = std::min(t_max, L / (u + spread));
    }
    y0 = t_max / growth;
  }
  // The innermost ball B(y_1, R_1) must span at least 8 nodes per axis.
  const double min_y1 = 4.0 * grid.spacing() / params.theta;
  require(y0 * params.lambda >= min_y1 * (1.0 - 1e-12),
          "grid box too small for the requested family (first centre y_1 below 4h/theta)");

  std::vector<ScheduleBall> family;
  for (int j = 1; j <= params.count; ++j) {
    double t = y0 * std::pow(params.lambda, j);
    family.push_back({t * ray, params.theta * t});
  }
  const ScheduleBall& last = family.back();
  require(within_support_margin(Ball(last.center, tau * last.radius), grid),
          "grid box too small for the requested family (outermost ball breaks the support margin)");
  for (const ScheduleBall& b : family)
    require(omega.contains_ball(Ball(b.center, tau * b.radius)),
            "family ball is not contained in Omega");
  require(inflated_balls_disjoint(family, tau, grid.dimension()),
          "family inflated balls are not pairwise disjoint");
  return family;
}

DoublingReport weak_doubling_scan(const SpaceSpec& space, double tau,
                                  std::span<const ScheduleBall> schedule) {
  require(!schedule.empty(), "doubling schedule must not be empty");
  DoublingReport report;
  report.tau = tau;
  const int n = space.grid().dimension();
  report.d_est = std::numeric_limits<double>::infinity();
  report.s_est = 0.0;
  for (std::size_t j = 0; j < schedule.size(); ++j) {
    const ScheduleBall& b = schedule[j];
    DoublingEntry e{b.center, b.radius, doubling_ratio(b.center, b.radius, tau, space), true, true};
    for (std::size_t k = 0; k < schedule.size(); ++k) {
      if (k == j) continue;
      Point d = b.center - schedule[k].center;
      double dist = n == 1 ? std::abs(d(0)) : d.norm();
      if (dist < tau * (b.radius + schedule[k].radius)) e.disjoint = false;
    }
    report.d_est = std::min(report.d_est, e.ratio);
    report.s_est = std::max(report.s_est, e.ratio);
    report.entries.push_back(e);
  }
  report.containment_verified = true;
  report.disjointness_verified =
      schedule.size() >= 2 && inflated_balls_disjoint(schedule, tau, n);
  if (!report.disjointness_verified) report.s_est = std::numeric_limits<double>::quiet_NaN();
  return report;
}

DoublingReport separated_doubling_scan(const SpaceSpec& space, double tau,
                                       const FamilyParams& params) {
  std::vector<ScheduleBall> family = separated_sequence(space.domain(), tau, params);
  return weak_doubling_scan(space, tau, family);
}

std::vector<TauScanRow> tau_scan(const SpaceSpec& space, std::span<const double> taus,
                                 const FamilyParams& params,
                                 std::span<const ScheduleBall> schedule) {
  require(!taus.empty(), "tau list must not be empty");
  for (std::size_t i = 0; i < taus.size(); ++i) {
    require(taus[i] > 1.0, "tau must exceed 1");
    if (i > 0) require(taus[i] < taus[i - 1], "tau list must be strictly decreasing");
  }
  std::vector<TauScanRow> rows;
  for (double tau : taus) {
    TauScanRow row;
    row.tau = tau;
    row.separated = separated_doubling_scan(space, tau, params);
    if (schedule.empty()) {
      row.weak = row.separated;
    } else {
      row.weak = weak_doubling_scan(space, tau, schedule);
    }
    row.d_est = row.weak.d_est;
    row.s_est = row.separated.s_est;
    rows.push_back(std::move(row));
  }
  return rows;
}

} // namespace whlab
