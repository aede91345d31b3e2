#include "doctest.h"

#include <cmath>

#include "test_support.hpp"
#include "zo/objective.hpp"

using namespace zo;

TEST_CASE("exp-sine function value at the origin") {
  const auto f = make_exp_sine_function(500);
  CHECK(f(Vector::Zero(500)) == doctest::Approx(std::exp(-2.0)).epsilon(1e-14));
  CHECK(std::exp(-2.0) == doctest::Approx(0.135335).epsilon(1e-5));
}

TEST_CASE("exp-sine function gradient at the origin") {
  const auto f = make_exp_sine_function(500);
  const Vector x = Vector::Zero(500);
  const Vector g = f.gradient(x);
  const double e = std::exp(-2.0);
  CHECK(g[0] == doctest::Approx(2 * e + 1).epsilon(1e-14));
  CHECK(g[1] == doctest::Approx(1 - e).epsilon(1e-14));
  for (Index i = 2; i < 500; ++i) REQUIRE(g[i] == 1.0);

  // independent route: central differences at h = 1e-6
  const Vector fd = test::central_difference_gradient(f, x, 1e-6);
  CHECK((fd - g).cwiseAbs().maxCoeff() <= 1e-8);
  CHECK(fd.norm() == doctest::Approx(22.369).epsilon(5e-5));
}

TEST_CASE("exp-sine function Hessian at the origin") {
  const auto f = make_exp_sine_function(500);
  const Matrix h = f.hessian(Vector::Zero(500));
  const double e = std::exp(-2.0);
  CHECK(h(0, 0) == doctest::Approx(4 * e).epsilon(1e-14));
  CHECK(h(0, 1) == doctest::Approx(-e).epsilon(1e-14));
  CHECK(h(1, 0) == h(0, 1));
  CHECK(h(1, 1) == doctest::Approx(e).epsilon(1e-14));
  Matrix rest = h;
  rest.topLeftCorner(2, 2).setZero();
  CHECK(rest.cwiseAbs().maxCoeff() == 0.0);

  // finite differences of the exact gradient reproduce the 2x2 block
  const double step = 1e-6;
  for (Index j = 0; j < 2; ++j) {
    Vector p = Vector::Zero(500), m = Vector::Zero(500);
    p[j] = step;
    m[j] = -step;
    const Vector col = (f.gradient(p) - f.gradient(m)) / (2 * step);
    CHECK(std::abs(col[0] - h(0, j)) <= 1e-8);
    CHECK(std::abs(col[1] - h(1, j)) <= 1e-8);
  }
}

TEST_CASE("exact gradients agree with finite differences at random points") {
  RandomSource rng(20);
  const Index n = 20;
  const Vector c = test::random_box(n, rng);
  const Matrix a = test::random_symmetric(n, rng);
  const Vector b = test::random_box(n, rng);
  for (const auto& f : {make_exp_sine_function(n), make_linear(c), make_quadratic(a, b)}) {
    for (int p = 0; p < 20; ++p) {
      const Vector x = test::random_box(n, rng);
      const Vector fd = test::central_difference_gradient(f, x, 1e-5);
      CHECK((fd - f.gradient(x)).cwiseAbs().maxCoeff() <= 1e-4);
    }
  }
}

TEST_CASE("linear and quadratic built-ins") {
  Vector c(3);
  c << 1.5, -2, 0.25;
  const auto lin = make_linear(c);
  CHECK(lin(Vector::Zero(3)) == 0.0);
  CHECK((lin.gradient(Vector::Ones(3)) - c).norm() == 0.0);
  CHECK(lin.hessian(Vector::Ones(3)).norm() == 0.0);

  Matrix a(2, 2);
  a << 2, 1, 1, 3;
  Vector b(2);
  b << -1, 4;
  const auto quad = make_quadratic(a, b);
  CHECK(quad(Vector::Zero(2)) == 0.0);
  CHECK((quad.gradient(Vector::Zero(2)) - b).norm() == 0.0);
  CHECK((quad.hessian(Vector::Ones(2)) - a).norm() == 0.0);

  Matrix asym = a;
  asym(0, 1) += 1e-9;
  CHECK_THROWS_AS(make_quadratic(asym, b), ParameterError);
  CHECK_THROWS_AS(make_exp_sine_function(1), ParameterError);
  Vector bad = c;
  bad[0] = NAN;
  CHECK_THROWS_AS(make_linear(bad), ParameterError);
}

TEST_CASE("evaluation counter counts every call, shared by copies") {
  const auto f = make_exp_sine_function(4);
  const auto copy = f;
  const Vector x = Vector::Zero(4);
  f(x);
  copy(x);
  f(x);
  CHECK(f.evaluations() == 3);
  f.gradient(x);
  CHECK(copy.evaluations() == 3);
  f.reset_evaluations();
  CHECK(copy.evaluations() == 0);
}

TEST_CASE("non-finite values and wrong shapes are rejected") {
  const Objective blowup("blowup", 2, [](const Vector& x) { return 1.0 / x[0]; });
  try {
    blowup(Vector::Zero(2));
    FAIL("expected EvaluationError");
  } catch (const EvaluationError& e) {
    CHECK(std::string(e.what()).find("x = (0, 0)") != std::string::npos);
  }
  CHECK_THROWS_AS(blowup(Vector::Zero(3)), ParameterError);
}

TEST_CASE("comparison oracle") {
  Vector c = Vector::Zero(3);
  c[0] = 1;
  const ComparisonOracle lin(make_linear(c));
  CHECK(lin.compare(Vector::Unit(3, 0), Vector::Zero(3)) == 1);
  CHECK(lin.compare(Vector::Zero(3), Vector::Unit(3, 0)) == -1);
  CHECK(lin.compare(Vector::Ones(3), Vector::Ones(3)) == 0);
  CHECK(lin.calls() == 3);

  // f(0.1 e1) - f(0) = e^{(-0.9)(2)} - e^{-2} + sin(0.1) > 0
  const double expected = std::exp(-1.8) - std::exp(-2.0) + std::sin(0.1);
  REQUIRE(expected > 0);
  const ComparisonOracle oracle(make_exp_sine_function(10));
  CHECK(oracle.compare(0.1 * Vector::Unit(10, 0), Vector::Zero(10)) == 1);
}

TEST_CASE("comparison oracle is antisymmetric") {
  RandomSource rng(21);
  const ComparisonOracle oracle(make_exp_sine_function(8));
  for (int i = 0; i < 100; ++i) {
    const Vector x = test::random_box(8, rng), y = test::random_box(8, rng);
    CHECK(oracle.compare(x, y) == -oracle.compare(y, x));
  }
}
