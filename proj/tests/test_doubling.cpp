#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "whlab/doubling.hpp"

using namespace whlab;

TEST_SUITE("doubling") {

TEST_CASE("doubling ratio closed forms") {
  Grid g = Grid::make(1, 64.0, 4096);
  SpaceSpec l2 = SpaceSpec::lebesgue(g, 2.0);
  CHECK(doubling_ratio(point(0.0), 4.0, 4.0, l2) == doctest::Approx(2.0).epsilon(0.02));

  SpaceSpec power(ExponentField::constant(g, 2.0), Weight::power(g, 0.2), DomainMask::full(g));
  for (double tau : {1.1, 1.5, 2.0, 4.0})
    CHECK(doubling_ratio(point(0.0), 3.0, tau, power) == doctest::Approx(std::pow(tau, 0.7)).epsilon(0.03));

  double previous = doubling_ratio(point(5.0), 4.0, 2.0, l2);
  for (double tau : {1.8, 1.5, 1.3, 1.1, 1.05}) {
    double r = doubling_ratio(point(5.0), 4.0, tau, l2);
    CHECK(r <= previous);
    CHECK(r >= 1.0);
    previous = r;
  }
}

TEST_CASE("doubling ratio preconditions") {
  Grid g = Grid::make(1, 16.0, 1024);
  SpaceSpec half = SpaceSpec::lebesgue(DomainMask::half_line(g), 2.0);
  CHECK_THROWS_AS(doubling_ratio(point(4.0), 1.0, 1.0, half), ValidationError);
  CHECK_THROWS_AS(doubling_ratio(point(4.0), 3.0, 2.0, half), ValidationError);
  CHECK_THROWS_AS(doubling_ratio(point(10.0), 4.0, 2.0, SpaceSpec::lebesgue(g, 2.0)), ValidationError);
  CHECK_THROWS_AS(doubling_ratio(point(4.01), 1e-4, 2.0, half), NumericError);
}

TEST_CASE("separated sequence") {
  Grid g = Grid::make(1, 128.0, 1024);
  DomainMask half = DomainMask::half_line(g);
  FamilyParams params{0.25, 4.0, 3, 1.0};
  std::vector<ScheduleBall> f = separated_sequence(half, 2.0, params);
  REQUIRE(f.size() == 3);
  const double centers[] = {4.0, 16.0, 64.0};
  for (std::size_t j = 0; j < 3; ++j) {
    CHECK(f[j].center(0) == doctest::Approx(centers[j]));
    CHECK(f[j].center(0) - 2.0 * f[j].radius == doctest::Approx(centers[j] / 2.0));
    CHECK(f[j].center(0) + 2.0 * f[j].radius == doctest::Approx(1.5 * centers[j]));
  }
  CHECK(inflated_balls_disjoint(f, 2.0, 1));
  CHECK_FALSE(inflated_balls_disjoint(f, 3.5, 1));

  Grid g2 = Grid::make(2, 64.0, 256);
  DomainMask sector = DomainMask::sector(g2, 0.0, std::numbers::pi / 2.0);
  CHECK_NOTHROW(separated_sequence(sector, 2.0, {0.2, 3.0, 2, {}}));
  CHECK_THROWS_AS(separated_sequence(sector, 2.0, {0.2, 2.0, 2, {}}), ValidationError);
  CHECK_THROWS_AS(separated_sequence(sector, 2.0, {0.4, 10.0, 2, {}}), ValidationError);
  CHECK_THROWS_AS(separated_sequence(half, 2.0, {0.25, 4.0, 1, {}}), ValidationError);
  CHECK_THROWS_AS(separated_sequence(half, 2.0, {0.25, 4.0, 8, {}}), ValidationError);
  CHECK_THROWS_AS(separated_sequence(half, 1.0, params), ValidationError);
}

TEST_CASE("weak doubling scan") {
  Grid g = Grid::make(1, 64.0, 2048);
  SpaceSpec l3 = SpaceSpec::lebesgue(g, 3.0);
  std::vector<ScheduleBall> schedule{{point(-20.0), 2.0}, {point(5.0), 4.0}, {point(0.0), 8.0}};
  DoublingReport r = weak_doubling_scan(l3, 2.0, schedule);
  CHECK(r.containment_verified);
  CHECK(r.d_est == doctest::Approx(std::pow(2.0, 1.0 / 3.0)).epsilon(0.03));
  for (const DoublingEntry& e : r.entries) CHECK(e.ratio >= 0.95);
  CHECK_THROWS_AS(weak_doubling_scan(l3, 2.0, {}), ValidationError);

  Grid big = Grid::make(1, 1024.0, 32768);
  SpaceSpec power(ExponentField::constant(big, 2.0), Weight::power(big, 0.2), DomainMask::half_line(big));
  std::vector<ScheduleBall> geometric;
  for (int j = 1; j <= 4; ++j) geometric.push_back({point(std::pow(4.0, j)), std::pow(4.0, j) / 4.0});
  DoublingReport pw = weak_doubling_scan(power, 2.0, geometric);
  CHECK(pw.d_est <= std::pow(2.0, 0.7));
  CHECK(pw.d_est >= 0.95);
}

TEST_CASE("separated doubling scan") {
  Grid g = Grid::make(1, 1024.0, 16384);
  SpaceSpec l2 = SpaceSpec::lebesgue(DomainMask::half_line(g), 2.0);
  DoublingReport r = separated_doubling_scan(l2, 2.0, {0.25, 4.0, 3, {}});
  CHECK(r.disjointness_verified);
  CHECK(r.containment_verified);
  CHECK(r.s_est == doctest::Approx(std::sqrt(2.0)).epsilon(0.03));

  SpaceSpec power(ExponentField::constant(g, 2.0), Weight::power(g, 0.2), DomainMask::half_line(g));
  DoublingReport pw = separated_doubling_scan(power, 2.0, {0.25, 4.0, 3, {}});
  CHECK(pw.s_est <= std::pow(2.0, 0.7) * 1.05);
  CHECK_THROWS_AS(separated_doubling_scan(l2, 2.0, {0.25, 4.0, 1, {}}), ValidationError);
}

TEST_CASE("tau scan") {
  Grid g = Grid::make(1, 1024.0, 16384);
  SpaceSpec l2 = SpaceSpec::lebesgue(DomainMask::half_line(g), 2.0);
  std::vector<double> taus{4.0, 2.0, 1.5, 1.1};
  std::vector<TauScanRow> rows = tau_scan(l2, taus, {0.125, 4.0, 3, {}});
  REQUIRE(rows.size() == 4);
  const double expected[] = {2.0, 1.414, 1.225, 1.049};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(rows[i].d_est == doctest::Approx(expected[i]).epsilon(0.03));
    CHECK(rows[i].s_est == doctest::Approx(expected[i]).epsilon(0.03));
    if (i > 0) {
      CHECK(rows[i].d_est < rows[i - 1].d_est);
      CHECK(rows[i].s_est < rows[i - 1].s_est);
    }
  }

  SpaceSpec power(ExponentField::constant(g, 2.0), Weight::power(g, 0.2), DomainMask::half_line(g));
  std::vector<TauScanRow> far = tau_scan(power, taus, {0.125, 4.0, 3, {}});
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(far[i].s_est == doctest::Approx(std::sqrt(taus[i])).epsilon(0.05));
    if (i > 0) CHECK(far[i].s_est < far[i - 1].s_est);
  }

  std::vector<double> one{1.0};
  CHECK_THROWS_AS(tau_scan(l2, one, {0.125, 4.0, 3, {}}), ValidationError);
  std::vector<double> rising{1.5, 2.0};
  CHECK_THROWS_AS(tau_scan(l2, rising, {0.125, 4.0, 3, {}}), ValidationError);
}

TEST_CASE("two-dimensional doubling") {
  Grid g = Grid::make(2, 32.0, 256);
  SpaceSpec l3 = SpaceSpec::lebesgue(g, 3.0);
  for (double tau : {1.1, 1.5, 2.0, 4.0})
    CHECK(doubling_ratio(point(1.0, -2.0), 3.0, tau, l3) == doctest::Approx(std::pow(tau, 2.0 / 3.0)).epsilon(0.05));
}

} // TEST_SUITE
