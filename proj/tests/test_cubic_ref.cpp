#include <cmath>
#include <vector>

#include "doctest.h"
#include "hypspline/cubic_ref.hpp"

using namespace hypspline;
using cubic::CubicSpline;

namespace {

double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

}  // namespace

TEST_CASE("natural cubic spline reproduces the frozen reference values") {
  Partition p = make_partition({0.0, 1.0, 2.0, 3.0});
  CubicSpline sigma = cubic::fit_cubic(p, {0.0, 1.0, 0.0, 1.0}, EndCondition::type2());

  CHECK(rel_err(sigma.eval(0.5), 0.75) <= 1e-14);
  CHECK(rel_err(sigma.eval(1.5), 0.5) <= 1e-14);
  CHECK(rel_err(sigma.eval(1.0, 2), -4.0) <= 1e-13);

  // natural ends: vanishing second derivative
  CHECK(std::abs(sigma.eval(0.0, 2)) <= 1e-13);
  CHECK(std::abs(sigma.eval(3.0, 2)) <= 1e-13);

  // interpolation at the nodes
  const std::vector<double> y{0.0, 1.0, 0.0, 1.0};
  for (int j = 0; j < 4; ++j) CHECK(rel_err(sigma.eval(p.nodes[j]), y[j]) <= 1e-14);
}

TEST_CASE("Type I and Type III cubic fits reproduce a cubic polynomial exactly") {
  auto f = [](double x) { return ((x - 2.0) * x + 3.0) * x - 1.0; };   // x^3-2x^2+3x-1
  auto fp = [](double x) { return (3.0 * x - 4.0) * x + 3.0; };
  auto fpp = [](double x) { return 6.0 * x - 4.0; };

  Partition p = make_partition({0.0, 0.5, 1.0, 1.3, 2.0});
  std::vector<double> y;
  for (double x : p.nodes) y.push_back(f(x));

  CubicSpline s1 = cubic::fit_cubic(p, y, EndCondition::type1(fp(0.0), fp(2.0)));
  CubicSpline s3 = cubic::fit_cubic(p, y, EndCondition::type3(fpp(0.0), fpp(2.0)));
  for (double x : {0.1, 0.45, 0.77, 1.11, 1.62, 1.93, 2.0}) {
    CHECK(rel_err(s1.eval(x), f(x)) <= 1e-13);
    CHECK(rel_err(s1.eval(x, 1), fp(x)) <= 1e-13);
    CHECK(rel_err(s1.eval(x, 2), fpp(x)) <= 1e-12);
    CHECK(rel_err(s3.eval(x), f(x)) <= 1e-13);
  }
}

TEST_CASE("natural cubic fit reproduces linear data exactly") {
  Partition p = make_partition({-1.0, 0.25, 1.0, 2.5});
  std::vector<double> y;
  for (double x : p.nodes) y.push_back(2.0 * x + 3.0);
  CubicSpline s = cubic::fit_cubic(p, y, EndCondition::type2());
  for (double x : {-0.9, -0.2, 0.6, 1.7, 2.5}) {
    CHECK(rel_err(s.eval(x), 2.0 * x + 3.0) <= 1e-14);
    CHECK(rel_err(s.eval(x, 1), 2.0) <= 1e-13);
  }
}

TEST_CASE("piecewise-linear fit interpolates and has secant slopes") {
  Partition p = make_partition({0.0, 1.0, 3.0});
  CubicSpline lin = cubic::fit_linear(p, {1.0, 3.0, 2.0});
  CHECK(lin.smoothness == cubic::Smoothness::C1);
  CHECK(rel_err(lin.eval(0.5), 2.0) <= 1e-15);
  CHECK(rel_err(lin.eval(2.0), 2.5) <= 1e-15);
  CHECK(rel_err(lin.eval(0.2, 1), 2.0) <= 1e-15);
  CHECK(rel_err(lin.eval(1.5, 1), -0.5) <= 1e-15);
  CHECK(std::abs(lin.eval(2.9, 2)) == 0.0);
}

TEST_CASE("cubic Hermite fit reproduces a cubic with exact node data") {
  auto f = [](double x) { return (0.5 * x - 1.0) * x * x + 4.0; };
  auto fp = [](double x) { return (1.5 * x - 2.0) * x; };
  Partition p = make_partition({-1.0, 0.0, 0.8, 2.0});
  std::vector<double> y, d;
  for (double x : p.nodes) {
    y.push_back(f(x));
    d.push_back(fp(x));
  }
  CubicSpline s = cubic::fit_cubic_hermite(p, y, d);
  CHECK(s.smoothness == cubic::Smoothness::C1);
  for (double x : {-0.7, -0.1, 0.3, 1.2, 1.9}) {
    CHECK(rel_err(s.eval(x), f(x)) <= 1e-13);
    CHECK(rel_err(s.eval(x, 1), fp(x)) <= 1e-13);
  }
}

TEST_CASE("monotone_slopes flattens flat runs and keeps monotone data monotone") {
  Partition p = make_partition({0.0, 1.0, 2.0, 3.0, 4.0});
  const std::vector<double> y{0.0, 0.0, 0.1, 10.0, 10.0};
  std::vector<double> m = cubic::monotone_slopes(p, y);
  REQUIRE(m.size() == y.size());

  // zero across the flat segments (including both nodes of each flat run)
  CHECK(m[0] == 0.0);
  CHECK(m[1] == 0.0);
  CHECK(m[3] == 0.0);
  CHECK(m[4] == 0.0);
  for (double mj : m) CHECK(mj >= 0.0);

  // the resulting Hermite interpolant never decreases
  CubicSpline s = cubic::fit_cubic_hermite(p, y, m);
  double prev = s.eval(0.0);
  for (int k = 1; k <= 400; ++k) {
    double x = 4.0 * k / 400.0;
    double v = s.eval(x);
    CHECK(v >= prev - 1e-12);
    prev = v;
  }
}

TEST_CASE("monotone_slopes zeroes local extrema of oscillating data") {
  Partition p = make_partition({0.0, 1.0, 2.0, 3.0});
  std::vector<double> m = cubic::monotone_slopes(p, {0.0, 1.0, -1.0, 0.0});
  CHECK(m[1] == 0.0);  // local max
  CHECK(m[2] == 0.0);  // local min
  CHECK(m[0] == doctest::Approx(1.0));   // one-sided secant
  CHECK(m[3] == doctest::Approx(1.0));
}

TEST_CASE("monotone Hermite fit stays inside the data range on a step") {
  Partition p = make_partition({0.0, 1.0, 2.0, 3.0});
  const std::vector<double> y{0.0, 0.0, 1.0, 1.0};
  std::vector<double> m = cubic::monotone_slopes(p, y);
  CubicSpline s = cubic::fit_cubic_hermite(p, y, m);
  for (int k = 0; k <= 300; ++k) {
    double x = 3.0 * k / 300.0;
    double v = s.eval(x);
    CHECK(v >= -1e-12);
    CHECK(v <= 1.0 + 1e-12);
  }
}

TEST_CASE("cubic fits validate their input") {
  Partition p = make_partition({0.0, 1.0, 2.0});
  CHECK_THROWS_AS(cubic::fit_cubic(p, {1.0, 2.0}, EndCondition::type2()), Error);
  CHECK_THROWS_AS(cubic::fit_cubic(p, {1.0, std::nan(""), 2.0}, EndCondition::type2()), Error);
  CHECK_THROWS_AS(cubic::fit_cubic_hermite(p, {1.0, 2.0, 3.0}, {0.0, 0.0}), Error);
  CubicSpline s = cubic::fit_linear(p, {0.0, 1.0, 2.0});
  CHECK_THROWS_AS(s.eval(-0.5), Error);
  CHECK_THROWS_AS(s.eval(2.5), Error);
  CHECK_THROWS_AS(s.eval(1.0, 3), Error);
}
