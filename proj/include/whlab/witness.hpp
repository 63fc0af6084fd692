#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "whlab/doubling.hpp"
#include "whlab/operators.hpp"

namespace whlab {

/// Even radial cut-off: 1 on |x| <= 1, 0 on |x| >= rho, smooth and
/// monotone in between.
class BumpSpec {
public:
  explicit BumpSpec(double rho);

  double rho() const { return rho_; }
  double operator()(double r) const;

private:
  double rho_;
};

BumpSpec build_bump(double rho);

/// Witness f(x) = e^{i eta (x - y)} phi(delta (x - y)), supported in B(y, rho/delta).
struct WitnessParams {
  double delta;
  Point eta;
  Point center;

  double plateau_radius() const { return 1.0 / delta; }
  double support_radius(const BumpSpec& bump) const { return bump.rho() / delta; }
};

/// Builds the witness on the grid of `omega`, checking that its support
/// B(y, rho/delta) lies in Omega and obeys the support margin.
GridFunction make_witness(const WitnessParams& params, const BumpSpec& bump,
                          const DomainMask& omega);
/// Full-space variant.
GridFunction make_witness(const WitnessParams& params, const BumpSpec& bump, const Grid& grid);

/// max over nodes of |(F^{-1} a F f)(x) - a(eta) f(x)|.
double mollification_residual(const Symbol& a, const WitnessParams& params, const BumpSpec& bump);
double mollification_residual(const Symbol& a, const WitnessParams& params,
                              const GridFunction& witness);

/// Largest t with B(t u, radius) inside Omega and within the support margin,
/// u a unit direction along which Omega is a cone.
std::optional<Point> farthest_admissible_center(const DomainMask& omega, const Point& direction,
                                                double radius);

/// One inequality of the proof chain, checked as lhs <= rhs + slack.
struct LedgerLine {
  std::string name;
  double lhs;
  double rhs;
  double slack;

  bool pass() const { return lhs <= rhs + slack; }
};

/// Measurements for one witness.
struct WitnessProbe {
  double delta = 0.0;
  bool admissible = false;
  std::string note;
  Point center = Point::Zero();
  double ratio = 0.0;         ///< ||W f|| / ||f||
  double image_norm = 0.0;    ///< ||W f||
  double inner_norm = 0.0;    ///< ||chi_{B(y, 1/delta)}||
  double witness_norm = 0.0;  ///< ||f||
  double outer_norm = 0.0;    ///< ||chi_{B(y, rho/delta)}||
  double quotient = 0.0;      ///< outer / inner
  double residual = 0.0;      ///< observed mollification residual
};

struct ExperimentReport {
  std::string kind;
  double sup_norm = 0.0;
  Point eta = Point::Zero();
  double abs_a_eta = 0.0;
  double rho = 0.0;
  std::vector<WitnessProbe> probes;
  double doubling_estimate = 0.0; ///< D_est (norm runs) or S_est (kappa runs)
  double max_residual = 0.0;
  double achieved_lower_bound = 0.0;

  // Kuratowski runs.
  Eigen::MatrixXd distances;
  double kappa_lower_bound = 0.0;
  double kappa_measure_bound = 0.0; ///< kappa_lower_bound / 2
  double kappa_target = 0.0;        ///< |a(eta)| / (2 (S_est + slack)) - max residual

  std::vector<LedgerLine> ledger;

  bool ledger_passes() const;
};

/// Slack added to S_est in the pairwise separation inequality.
inline constexpr double separated_doubling_slack = 0.05;

/// Executes the operator-norm lower-bound argument: one witness per delta,
/// centred on `ray` as far out as admissible.
ExperimentReport norm_lowerbound_experiment(const Symbol& a, const SpaceSpec& space, double rho,
                                            std::span<const double> deltas,
                                            std::optional<Point> eta = {},
                                            std::optional<Point> ray = {});

/// Executes the pairwise separation argument on a disjoint family with
/// delta_j = 1/R_j; the family's inflation factor must be rho.
ExperimentReport kuratowski_experiment(const Symbol& a, const SpaceSpec& space, double rho,
                                       std::span<const ScheduleBall> family,
                                       std::optional<Point> eta = {});

} // namespace whlab
