#include "whlab/witness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "whlab/format.hpp"
#include "whlab/smooth.hpp"

namespace whlab {

BumpSpec::BumpSpec(double rho) : rho_(rho) {
  require(std::isfinite(rho) && rho > 1.0, "bump support radius rho must exceed 1");
}

double BumpSpec::operator()(double r) const {
  r = std::abs(r);
  if (r <= 1.0) return 1.0;
  if (r >= rho_) return 0.0;
  return smooth_glue((rho_ - r) / (rho_ - 1.0));
}

BumpSpec build_bump(double rho) { return BumpSpec(rho); }

namespace {

GridFunction witness_values(const WitnessParams& params, const BumpSpec& bump, const Grid& grid) {
  require(params.delta > 0.0 && std::isfinite(params.delta), "witness scale delta must be positive");
  Eigen::ArrayXcd values(grid.size());
  for (Index i = 0; i < grid.size(); ++i) {
    Point d = grid.node(i) - params.center;
    double phase = grid.dimension() == 1 ? params.eta(0) * d(0) : params.eta.dot(d);
    double amplitude = bump(params.delta * grid.norm(d));
    values(i) = amplitude == 0.0 ? Complex(0.0) : amplitude * std::polar(1.0, phase);
  }
  return GridFunction(grid, std::move(values));
}

std::string tagged(const std::string& name, const std::string& tag) {
  return name + "[" + tag + "]";
}

double relative_slack(double scale) { return 1e-9 * std::max(1.0, std::abs(scale)); }

} // namespace

GridFunction make_witness(const WitnessParams& params, const BumpSpec& bump,
                          const DomainMask& omega) {
  Ball support(params.center, params.support_radius(bump));
  require(omega.contains_ball(support), "witness support B(y, rho/delta) is not contained in Omega");
  require(within_support_margin(support, omega.grid()),
          "witness support B(y, rho/delta) breaks the support margin of the grid box");
  return witness_values(params, bump, omega.grid());
}

GridFunction make_witness(const WitnessParams& params, const BumpSpec& bump, const Grid& grid) {
  return make_witness(params, bump, DomainMask::full(grid));
}

double mollification_residual(const Symbol& a, const WitnessParams& params,
                              const GridFunction& witness) {
  Complex a_eta = a.at(params.eta);
  GridFunction image = apply_multiplier(a, witness);
  return (image.values() - a_eta * witness.values()).abs().maxCoeff();
}

double mollification_residual(const Symbol& a, const WitnessParams& params, const BumpSpec& bump) {
  return mollification_residual(a, params, witness_values(params, bump, a.grid()));
}

std::optional<Point> farthest_admissible_center(const DomainMask& omega, const Point& direction,
                                                double radius) {
  const Grid& grid = omega.grid();
  const double L = grid.half_width();
  double len = grid.norm(direction);
  require(len > 0.0, "ray direction must be non-zero");
  Point u = direction / len;
  if (grid.dimension() == 1) u(1) = 0.0;
  if (2.0 * radius > 0.5 * L) return std::nullopt;

  double t_max = std::numeric_limits<double>::infinity();
  for (int axis = 0; axis < grid.dimension(); ++axis) {
    double c = std::abs(u(axis));
    if (c == 0.0) continue;
    t_max = std::min({t_max, 0.75 * L / c, (L - radius) / c});
  }
  double t_min = 0.0;
  if (omega.kind() != DomainMask::Kind::full_space) {
    require(omega.kind() != DomainMask::Kind::explicit_mask,
            "witness placement along a ray needs a cone domain");
    double clearance = omega.contains_point(u) ? omega.boundary_distance(u) : 0.0;
    if (clearance <= 0.0) return std::nullopt;
    t_min = radius / clearance;
  }
  if (t_max < t_min) return std::nullopt;
  Point center = t_max * u;
  Ball support(center, radius);
  if (!omega.contains_ball(support) || !within_support_margin(support, grid)) return std::nullopt;
  return center;
}

bool ExperimentReport::ledger_passes() const {
  return std::all_of(ledger.begin(), ledger.end(), [](const LedgerLine& l) { return l.pass(); });
}

namespace {

struct MeasuredWitness {
  WitnessProbe probe;
  GridFunction witness;
  GridFunction image; // W_Omega(a) f
};

MeasuredWitness measure_witness(const Symbol& a, const SpaceSpec& space, const BumpSpec& bump,
                                const WitnessParams& params, Complex a_eta) {
  const DomainMask& omega = space.domain();
  const Grid& grid = space.grid();
  GridFunction f = make_witness(params, bump, omega);
  GridFunction full_image = apply_multiplier(a, f);
  GridFunction image = restrict_to(full_image, omega);

  WitnessProbe p;
  p.delta = params.delta;
  p.admissible = true;
  p.center = params.center;
  p.residual = (full_image.values() - a_eta * f.values()).abs().maxCoeff();
  p.witness_norm = luxemburg_norm(f, space);
  p.image_norm = luxemburg_norm(image, space);
  p.ratio = p.image_norm / p.witness_norm;
  p.inner_norm = luxemburg_norm(ball_indicator(Ball(params.center, params.plateau_radius()), grid), space);
  p.outer_norm = luxemburg_norm(ball_indicator(Ball(params.center, params.support_radius(bump)), grid), space);
  p.quotient = p.outer_norm / p.inner_norm;
  return {p, std::move(f), std::move(image)};
}

void add_sandwich(ExperimentReport& report, const WitnessProbe& p, const std::string& tag) {
  report.ledger.push_back({tagged("sandwich_lower", tag), p.inner_norm, p.witness_norm,
                           relative_slack(p.witness_norm)});
  report.ledger.push_back({tagged("sandwich_upper", tag), p.witness_norm, p.outer_norm,
                           relative_slack(p.outer_norm)});
}

} // namespace

ExperimentReport norm_lowerbound_experiment(const Symbol& a, const SpaceSpec& space, double rho,
                                            std::span<const double> deltas,
                                            std::optional<Point> eta, std::optional<Point> ray) {
  require(a.grid() == space.grid(), "symbol and space live on different grids");
  require(!deltas.empty(), "delta schedule must not be empty");
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    require(deltas[i] > 0.0, "delta must be positive");
    if (i > 0) require(deltas[i] < deltas[i - 1], "delta schedule must be strictly decreasing");
  }
  BumpSpec bump(rho);
  const DomainMask& omega = space.domain();

  ExperimentReport report;
  report.kind = "norm-lb";
  report.rho = rho;
  report.sup_norm = a.sup_norm();
  report.eta = eta ? *eta : a.lebesgue_point();
  const Complex a_eta = a.at(report.eta);
  report.abs_a_eta = std::abs(a_eta);
  const Point direction = ray ? *ray : omega.central_ray();

  report.doubling_estimate = std::numeric_limits<double>::infinity();
  bool any = false;
  for (double delta : deltas) {
    std::optional<Point> center = farthest_admissible_center(omega, direction, rho / delta);
    if (!center) {
      WitnessProbe skipped;
      skipped.delta = delta;
      skipped.note = "no admissible placement of B(y, rho/delta) inside Omega and the support margin";
      report.probes.push_back(skipped);
      continue;
    }
    WitnessParams params{delta, report.eta, *center};
    WitnessProbe p = measure_witness(a, space, bump, params, a_eta).probe;
    any = true;

    const std::string tag = "delta=" + num(delta);
    report.ledger.push_back({tagged("plateau_bound", tag), report.abs_a_eta * p.inner_norm,
                             p.image_norm + p.residual * p.inner_norm, 1e-8});
    add_sandwich(report, p, tag);
    report.ledger.push_back({tagged("ratio_bound", tag),
                             (report.abs_a_eta - p.residual) / p.quotient, p.ratio, 1e-9});

    report.achieved_lower_bound = std::max(report.achieved_lower_bound, p.ratio);
    report.doubling_estimate = std::min(report.doubling_estimate, p.quotient);
    report.max_residual = std::max(report.max_residual, p.residual);
    report.probes.push_back(p);
  }
  if (!any) throw NumericError("no delta in the schedule admits a witness placement");
  return report;
}

ExperimentReport kuratowski_experiment(const Symbol& a, const SpaceSpec& space, double rho,
                                       std::span<const ScheduleBall> family,
                                       std::optional<Point> eta) {
  require(a.grid() == space.grid(), "symbol and space live on different grids");
  require(family.size() >= 2, "a separated family needs at least 2 balls");
  const Grid& grid = space.grid();
  require(inflated_balls_disjoint(family, rho, grid.dimension()),
          "family balls B(y_j, rho R_j) are not pairwise disjoint");
  BumpSpec bump(rho);

  ExperimentReport report;
  report.kind = "kappa-lb";
  report.rho = rho;
  report.sup_norm = a.sup_norm();
  report.eta = eta ? *eta : a.lebesgue_point();
  const Complex a_eta = a.at(report.eta);
  report.abs_a_eta = std::abs(a_eta);

  const std::size_t m = family.size();
  std::vector<GridFunction> unit_images;
  report.doubling_estimate = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    WitnessParams params{1.0 / family[j].radius, report.eta, family[j].center};
    MeasuredWitness w = measure_witness(a, space, bump, params, a_eta);
    add_sandwich(report, w.probe, "j=" + std::to_string(j));
    unit_images.push_back((1.0 / w.probe.witness_norm) * w.image);
    report.doubling_estimate = std::max(report.doubling_estimate, w.probe.quotient);
    report.max_residual = std::max(report.max_residual, w.probe.residual);
    report.achieved_lower_bound = std::max(report.achieved_lower_bound, w.probe.ratio);
    report.probes.push_back(w.probe);
  }

  report.distances = Eigen::MatrixXd::Zero(Index(m), Index(m));
  report.kappa_lower_bound = std::numeric_limits<double>::infinity();
  const double separation = report.abs_a_eta / (report.doubling_estimate + separated_doubling_slack);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = j + 1; k < m; ++k) {
      double d = luxemburg_norm(unit_images[j] - unit_images[k], space);
      report.distances(Index(j), Index(k)) = d;
      report.distances(Index(k), Index(j)) = d;
      report.kappa_lower_bound = std::min(report.kappa_lower_bound, d);
      double eps = std::max(report.probes[j].residual, report.probes[k].residual);
      report.ledger.push_back({tagged("pair_separation", "j=" + std::to_string(j) + ",k=" + std::to_string(k)),
                               separation - 2.0 * eps, d, 1e-9});
    }
  report.kappa_measure_bound = 0.5 * report.kappa_lower_bound;
  report.kappa_target = 0.5 * separation - report.max_residual;
  report.ledger.push_back({"kappa_bound", report.kappa_target, report.kappa_measure_bound, 1e-9});
  return report;
}

} // namespace whlab
