#pragma once

#include <optional>
#include <span>
#include <vector>

#include "whlab/spaces.hpp"

namespace whlab {

/// A ball (y, R) of a doubling schedule; the inflated ball is B(y, tau R).
struct ScheduleBall {
  Point center;
  double radius;
};

struct DoublingEntry {
  Point center;
  double radius;
  double ratio;
  bool contained;
  bool disjoint;
};

/// Ratios ||chi_{B(y, tau R)}||_{X(Omega)} / ||chi_{B(y, R)}||_{X(Omega)} over a
/// schedule. d_est is the minimum (weak doubling estimate over the sampled
/// radii), s_est the maximum (only meaningful when the inflated balls are
/// pairwise disjoint).
struct DoublingReport {
  double tau = 0.0;
  std::vector<DoublingEntry> entries;
  double d_est = 0.0;
  double s_est = 0.0;
  bool containment_verified = false;
  bool disjointness_verified = false;
};

/// Parameters of the geometric family y_j = y0 lambda^j u, R_j = theta |y_j|,
/// j = 1..count, u the central ray of the cone.
struct FamilyParams {
  double theta = 0.25;
  double lambda = 4.0;
  int count = 3;
  /// Scale y0; when absent, the largest value keeping the outermost inflated
  /// ball within the support margin.
  std::optional<double> first_center;
};

double doubling_ratio(const Point& center, double radius, double tau, const SpaceSpec& space);

/// Geometric family inside a cone (half-line, sector or full space) whose
/// tau-inflated balls are contained in Omega and pairwise disjoint.
std::vector<ScheduleBall> separated_sequence(const DomainMask& omega, double tau,
                                             const FamilyParams& params);

/// Pairwise disjointness of the balls B(y_j, tau R_j), checked in the continuum.
bool inflated_balls_disjoint(std::span<const ScheduleBall> schedule, double tau, int dimension);

DoublingReport weak_doubling_scan(const SpaceSpec& space, double tau,
                                  std::span<const ScheduleBall> schedule);

DoublingReport separated_doubling_scan(const SpaceSpec& space, double tau,
                                       const FamilyParams& params);

struct TauScanRow {
  double tau;
  double d_est;
  double s_est;
  DoublingReport weak;
  DoublingReport separated;
};

/// For each tau (strictly decreasing, all > 1): weak scan over `schedule`
/// (the separated family itself when empty) and separated scan over the
/// family built from `params`.
std::vector<TauScanRow> tau_scan(const SpaceSpec& space, std::span<const double> taus,
                                 const FamilyParams& params,
                                 std::span<const ScheduleBall> schedule = {});

} // namespace whlab
