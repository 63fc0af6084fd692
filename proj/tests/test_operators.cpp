#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "whlab/operators.hpp"

using namespace whlab;

namespace {

GridFunction random_function(const Grid& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> z(0.0, 1.0);
  Eigen::ArrayXcd v(g.size());
  for (Index i = 0; i < g.size(); ++i) v(i) = Complex(z(rng), z(rng));
  return GridFunction(g, v);
}

double l2(const GridFunction& u) { return std::sqrt(u.values().abs2().sum() * u.grid().cell_volume()); }

} // namespace

TEST_SUITE("operators") {

TEST_CASE("fourier of a gaussian") {
  Grid g = Grid::make(1, 16.0, 512);
  GridFunction u = sample(g, [](const Point& x) { return std::exp(-0.5 * x(0) * x(0)); });
  GridFunction v = fourier(u);
  CHECK(v.side() == Side::frequency);
  double worst = 0.0;
  for (Index k = 0; k < g.size(); ++k) {
    double xi = g.frequency_node(k)(0);
    worst = std::max(worst, std::abs(v[k] - std::sqrt(2.0 * std::numbers::pi) * std::exp(-0.5 * xi * xi)));
  }
  CHECK(worst < 1e-6);

  Grid g2 = Grid::make(2, 8.0, 64);
  GridFunction u2 = sample(g2, [](const Point& x) { return std::exp(-0.5 * x.squaredNorm()); });
  GridFunction v2 = fourier(u2);
  worst = 0.0;
  for (Index k = 0; k < g2.size(); ++k)
    worst = std::max(worst, std::abs(v2[k] - 2.0 * std::numbers::pi * std::exp(-0.5 * g2.frequency_node(k).squaredNorm())));
  CHECK(worst < 1e-6);
}

TEST_CASE("fourier basics") {
  for (int n : {1, 2}) {
    Grid g = Grid::make(n, 8.0, n == 1 ? 256 : 32);
    CHECK(fourier(GridFunction::zeros(g)).sup_norm() == 0.0);
    GridFunction u = random_function(g, 11 + n);
    GridFunction v = fourier(u);
    double lhs = v.values().abs2().sum() * g.frequency_cell_volume();
    double rhs = std::pow(2.0 * std::numbers::pi, n) * u.values().abs2().sum() * g.cell_volume();
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-8));
    GridFunction back = inverse_fourier(v);
    CHECK((back.values() - u.values()).abs().maxCoeff() <= 1e-10 * u.sup_norm());

    GridFunction spike = GridFunction::zeros(g);
    Eigen::ArrayXcd s = spike.values();
    s(0) = 1.0;
    GridFunction spiked = inverse_fourier(fourier(GridFunction(g, s)));
    CHECK(std::abs(spiked[0] - 1.0) < 1e-12);
    GridFunction fs = fourier(GridFunction(g, s));
    CHECK((fs.values().abs() - fs.values().abs()(0)).abs().maxCoeff() < 1e-12);

    GridFunction v2 = fourier(random_function(g, 99));
    Complex alpha(0.3, -1.7);
    GridFunction combo = inverse_fourier(GridFunction(g, alpha * v.values() + v2.values(), Side::frequency));
    GridFunction parts = alpha * inverse_fourier(v) + inverse_fourier(v2);
    CHECK((combo.values() - parts.values()).abs().maxCoeff() < 1e-12);
  }
  Grid g = Grid::make(1, 8.0, 64);
  CHECK_THROWS_AS(fourier(fourier(random_function(g, 1))), ValidationError);
  CHECK_THROWS_AS(inverse_fourier(random_function(g, 1)), ValidationError);
}

TEST_CASE("multipliers") {
  Grid g = Grid::make(1, 32.0, 1024);
  GridFunction u = sample(g, [](const Point& x) { return Complex(std::exp(-x(0) * x(0)), x(0) * std::exp(-x(0) * x(0))); });
  CHECK((apply_multiplier(Symbol::constant(g, 1.0), u).values() - u.values()).abs().maxCoeff() < 1e-13);
  CHECK(apply_multiplier(Symbol::constant(g, 0.0), u).sup_norm() == 0.0);

  const double t0 = 40 * g.spacing();
  Symbol shift = Symbol::sampled(g, [&](const Point& xi) { return std::polar(1.0, -xi(0) * t0); });
  GridFunction moved = apply_multiplier(shift, u);
  GridFunction oracle = sample(g, [&](const Point& x) {
    double y = x(0) - t0;
    return Complex(std::exp(-y * y), y * std::exp(-y * y));
  });
  CHECK((moved.values() - oracle.values()).abs().maxCoeff() < 1e-8);
}

TEST_CASE("wiener-hopf operator") {
  Grid g = Grid::make(1, 32.0, 1024);
  DomainMask half = DomainMask::half_line(g);
  GridFunction u = restrict_to(sample(g, [](const Point& x) { return std::exp(-(x(0) - 8.0) * (x(0) - 8.0)); }), half);
  CHECK((wiener_hopf_apply(Symbol::constant(g, 1.0), half, u).values() - u.values()).abs().maxCoeff() < 1e-13);

  Symbol gauss = Symbol::gaussian(g, point(0.0), 1.0);
  GridFunction v = random_function(g, 5);
  CHECK((wiener_hopf_apply(gauss, DomainMask::full(g), v).values() - apply_multiplier(gauss, v).values()).abs().maxCoeff() == 0.0);

  Symbol step = Symbol::smoothed_step(g, 0.0, 4.0 * g.frequency_spacing());
  CHECK(l2(wiener_hopf_apply(step, half, u)) <= l2(u) * (1.0 + 1e-6));

  Symbol b = Symbol::sampled(g, [](const Point& xi) { return Complex(std::cos(xi(0)), 0.5); });
  Complex alpha(2.0, -1.0);
  GridFunction lhs = wiener_hopf_apply(gauss * alpha + b, half, u);
  GridFunction rhs = alpha * wiener_hopf_apply(gauss, half, u) + wiener_hopf_apply(b, half, u);
  CHECK((lhs.values() - rhs.values()).abs().maxCoeff() < 1e-12);
}

TEST_CASE("real even symbols preserve real even functions") {
  Grid g = Grid::make(1, 16.0, 256);
  Symbol a = Symbol::sampled(g, [](const Point& xi) { return 1.0 / (1.0 + xi(0) * xi(0)); });
  GridFunction u = sample(g, [](const Point& x) { return std::cos(x(0)) * std::exp(-x(0) * x(0) / 4.0); });
  GridFunction v = apply_multiplier(a, u);
  const int N = g.points_per_axis();
  double worst = v.values().imag().abs().maxCoeff();
  for (int m = 1; m < N; ++m) worst = std::max(worst, std::abs(v[m] - v[N - m]));
  CHECK(worst < 1e-9);
}

TEST_CASE("symbols") {
  Grid g = Grid::make(1, 16.0, 256);
  Symbol gauss = Symbol::gaussian(g, point(g.frequency(140)), 0.5, 2.0);
  CHECK(gauss.sup_norm() == doctest::Approx(2.0));
  CHECK(gauss.lebesgue_point()(0) == doctest::Approx(g.frequency(140)));
  CHECK(Symbol::constant(g, Complex(0.0, 3.0)).lebesgue_point()(0) == 0.0);
  CHECK(Symbol::constant(g, Complex(0.0, 3.0)).sup_norm() == 3.0);

  Symbol step = Symbol::smoothed_step(g, 0.0, 1.0);
  CHECK(step.at(point(g.frequency(100))) == Complex(0.0));
  CHECK(step.at(point(g.frequency(200))) == Complex(1.0));
  Point lp = step.lebesgue_point();
  CHECK(std::abs(step.at(lp)) == 1.0);
  CHECK(lp(0) > 1.0);

  CHECK_THROWS_AS(Symbol::sampled(g, [](const Point&) { return Complex(std::nan(""), 0.0); }), ValidationError);
  CHECK_THROWS_AS(Symbol::gaussian(g, point(0.0), 0.0), ValidationError);
}

TEST_CASE("norm probe") {
  Grid g = Grid::make(1, 32.0, 1024);
  SpaceSpec l2s = SpaceSpec::lebesgue(g, 2.0);
  Symbol gauss = Symbol::gaussian(g, point(0.0), 1.0, 0.8);
  std::vector<GridFunction> probes;
  for (int s = 0; s < 5; ++s) probes.push_back(random_function(g, 100 + s));
  probes.push_back(sample(g, [](const Point& x) { return std::exp(-x(0) * x(0) / 50.0); }));
  double r = norm_probe(gauss, l2s, probes);
  CHECK(r <= 0.8 * (1.0 + 1e-6));
  CHECK(r > 0.7);

  SpaceSpec half = SpaceSpec::lebesgue(DomainMask::half_line(g), 3.0);
  std::vector<GridFunction> one{random_function(g, 7)};
  CHECK(norm_probe(Symbol::constant(g, Complex(0.0, -0.6)), half, one) == doctest::Approx(0.6).epsilon(1e-8));

  std::vector<GridFunction> left{sample(g, [](const Point& x) { return x(0) < 0.0 ? 1.0 : 0.0; })};
  CHECK_THROWS_AS(norm_probe(gauss, half, left), ValidationError);
}

TEST_CASE("support margin") {
  Grid g = Grid::make(1, 64.0, 256);
  CHECK(within_support_margin(Ball(point(20.0), 16.0), g));
  CHECK_FALSE(within_support_margin(Ball(point(20.0), 17.0), g));
  CHECK(within_support_margin(Ball(point(48.0), 16.0), g));
  CHECK_FALSE(within_support_margin(Ball(point(49.0), 15.0), g));
}

} // TEST_SUITE
