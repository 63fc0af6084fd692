#include "whlab/axioms.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace whlab {

std::vector<GridFunction> random_functions(const Grid& grid, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> normal(0.0, 1.0);
  const double L = grid.half_width();
  const int n = grid.dimension();

  std::vector<GridFunction> out;
  out.reserve(std::size_t(count));
  for (int s = 0; s < count; ++s) {
    Point c = Point::Zero();
    for (int a = 0; a < n; ++a) c(a) = L * (unit(rng) - 0.5);
    double width = L * (1.0 / 16.0 + unit(rng) * (1.0 / 4.0 - 1.0 / 16.0));
    double freq = 4.0 * (unit(rng) - 0.5);
    bool cut = s % 2 == 1;
    Point lo = Point::Zero(), hi = Point::Zero();
    for (int a = 0; a < n; ++a) {
      double u = unit(rng), v = unit(rng);
      lo(a) = -L + 2.0 * L * std::min(u, v);
      hi(a) = -L + 2.0 * L * std::max(u, v) + grid.spacing();
    }
    Eigen::ArrayXcd values(grid.size());
    for (Index i = 0; i < grid.size(); ++i) {
      Point x = grid.node(i);
      double r = grid.norm(x - c);
      double amp = (0.25 + std::abs(normal(rng))) * std::exp(-0.5 * r * r / (width * width));
      bool inside = true;
      if (cut)
        for (int a = 0; a < n; ++a) inside = inside && x(a) >= lo(a) && x(a) < hi(a);
      values(i) = inside ? amp * std::polar(1.0, freq * x(0) + 2.0 * std::numbers::pi * unit(rng))
                         : Complex(0.0);
    }
    if ((values.abs() == 0.0).all()) values(grid.nearest_node(c)) = 1.0;
    out.emplace_back(grid, std::move(values));
  }
  return out;
}

namespace {

void record(AxiomResult& r, double measure) {
  ++r.checks;
  if (measure > r.tolerance) ++r.failures;
  r.worst = r.checks == 1 ? measure : std::max(r.worst, measure);
}

} // namespace

std::vector<AxiomResult> check_axioms(const SpaceSpec& space, int samples, std::uint64_t seed) {
  require(samples >= 2, "axiom suite needs at least 2 samples");
  const Grid& grid = space.grid();
  const SpaceSpec dual = associate_space(space);
  std::vector<GridFunction> fs = random_functions(grid, samples, seed);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  AxiomResult homogeneity{"homogeneity", 0, 0, 0.0, 1e-8};
  AxiomResult triangle{"triangle", 0, 0, 0.0, 1e-8};
  AxiomResult lattice{"lattice", 0, 0, 0.0, 1e-9};
  AxiomResult fatou_monotone{"fatou_monotone", 0, 0, 0.0, 1e-10};
  AxiomResult fatou_limit{"fatou_limit", 0, 0, 0.0, 1e-8};
  AxiomResult local{"local_finiteness", 0, 0, 0.0, 0.0};
  AxiomResult holder{"holder", 0, 0, 0.0, 0.0};

  const double diagonal = grid.half_width() * std::sqrt(double(grid.dimension()));
  for (int s = 0; s < samples; ++s) {
    const GridFunction& f = fs[std::size_t(s)];
    const GridFunction& g = fs[std::size_t((s + 1) % samples)];
    const double nf = luxemburg_norm(f, space);
    const double ng = luxemburg_norm(g, space);

    Complex c = std::polar(0.1 + 9.9 * unit(rng), 2.0 * std::numbers::pi * unit(rng));
    double nc = luxemburg_norm(c * f, space);
    double scale = std::abs(c) * nf;
    record(homogeneity, scale > 0.0 ? std::abs(nc - scale) / scale : nc);

    double sum = luxemburg_norm(f + g, space);
    record(triangle, nf + ng > 0.0 ? (sum - nf - ng) / (nf + ng) : sum);

    Eigen::ArrayXd damp(grid.size());
    for (Index i = 0; i < grid.size(); ++i) damp(i) = unit(rng);
    GridFunction smaller(grid, f.values() * damp.cast<Complex>());
    record(lattice, luxemburg_norm(smaller, space) - nf);

    double previous = 0.0;
    double worst_drop = -1.0;
    double last = 0.0;
    for (int k = 1; k <= 9; ++k) {
      double radius = diagonal * k / 8.0;
      Eigen::ArrayXcd cut(grid.size());
      for (Index i = 0; i < grid.size(); ++i)
        cut(i) = grid.norm(grid.node(i)) <= radius ? f[i] : Complex(0.0);
      last = luxemburg_norm(GridFunction(grid, std::move(cut)), space);
      if (k > 1) worst_drop = std::max(worst_drop, (previous - last) / std::max(nf, 1e-300));
      previous = last;
    }
    record(fatou_monotone, worst_drop);
    record(fatou_limit, nf > 0.0 ? std::abs(last - nf) / nf : last);

    Ball ball(grid.node(grid.nearest_node(Point::Zero())), grid.half_width() * (0.05 + 0.4 * unit(rng)));
    double chi = luxemburg_norm(ball_indicator(ball, grid), space);
    record(local, (std::isfinite(chi) && chi > 0.0) ? -1.0 : 1.0);

    double pairing = (space.domain().indicator().select(f.values().abs() * g.values().abs(), 0.0)).sum() *
                     grid.cell_volume();
    double bound = 2.0 * nf * luxemburg_norm(g, dual);
    record(holder, bound > 0.0 ? pairing / bound - 1.0 : pairing);
  }
  return {homogeneity, triangle, lattice, fatou_monotone, fatou_limit, local, holder};
}

} // namespace whlab
