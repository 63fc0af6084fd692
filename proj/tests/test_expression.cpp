#include <doctest.h>

#include <array>
#include <cmath>

#include "whlab/errors.hpp"
#include "whlab/expression.hpp"

using namespace whlab;

TEST_SUITE("expression") {

TEST_CASE("arithmetic and precedence") {
  Expression e = Expression::parse("1 + 2 * 3 - 4 / 2", {});
  CHECK(e({}) == 5.0);
  CHECK(Expression::parse("-2^2", {})({}) == -4.0);
  CHECK(Expression::parse("2^3^2", {})({}) == 512.0);
  CHECK(Expression::parse("(1 + 2) * 3", {})({}) == 9.0);
  CHECK(Expression::parse("2 * -3", {})({}) == -6.0);
}

TEST_CASE("variables and functions") {
  Expression e = Expression::parse("2 + 0.5 * step(x) + max(y, 0) * exp(abs(x))", {"x", "y"});
  std::array<double, 2> a{-1.0, -3.0}, b{0.0, 1.0};
  CHECK(e(a) == 2.0);
  CHECK(e(b) == doctest::Approx(3.5));
  CHECK(Expression::parse("atan2(1, 1) * 4", {})({}) == doctest::Approx(std::acos(-1.0)));
  CHECK(Expression::parse("pi - 4 * atan(1)", {})({}) == 0.0);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(Expression::parse("1 +", {}), ValidationError);
  CHECK_THROWS_AS(Expression::parse("foo(1)", {}), ValidationError);
  CHECK_THROWS_AS(Expression::parse("z", {"x"}), ValidationError);
  CHECK_THROWS_AS(Expression::parse("(1", {}), ValidationError);
  CHECK_THROWS_AS(Expression::parse("1 2", {}), ValidationError);
  CHECK_THROWS_AS(Expression::parse("pow(1)", {}), ValidationError);
}

} // TEST_SUITE
