#include "doctest.h"

#include <cmath>

#include "test_support.hpp"
#include "zo/gradient.hpp"

using namespace zo;

namespace {

Vector soft_threshold(const Vector& c, double mu) {
  return c.unaryExpr([mu](double v) { return std::copysign(std::max(std::abs(v) - mu, 0.0), v); });
}

// Dual of max <c, g> s.t. ||g||_1 <= B, ||g||_2 <= 1:
// min_{mu >= 0} mu B + ||soft(c, mu)||_2, convex in mu.
double dual_value(const Vector& c, double budget) {
  auto phi = [&](double mu) { return mu * budget + soft_threshold(c, mu).norm(); };
  double lo = 0.0, hi = c.cwiseAbs().maxCoeff();
  for (int it = 0; it < 300; ++it) {
    const double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
    if (phi(m1) < phi(m2))
      hi = m2;
    else
      lo = m1;
  }
  return std::min({phi(0.0), phi(0.5 * (lo + hi)), phi(c.cwiseAbs().maxCoeff())});
}

void check_feasible(const Vector& g, double sparsity) {
  CHECK(g.norm() <= 1.0 + 1e-12);
  if (std::isfinite(sparsity)) CHECK(g.lpNorm<1>() <= std::sqrt(sparsity) * (1 + 1e-12) + 1e-12);
}

}  // namespace

TEST_CASE("l1/l2 max examples") {
  const Vector a = l1_l2_linear_max(Vector{{3.0, 1.0}}, 1.0);
  CHECK(a[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(a[1]) <= 1e-12);

  const Vector b = l1_l2_linear_max(Vector::Ones(4), 4.0);
  for (Index i = 0; i < 4; ++i) CHECK(b[i] == doctest::Approx(0.5).epsilon(1e-12));

  const Vector c{{3.0, -4.0}};
  const Vector d = l1_l2_linear_max(c, kUnbounded);
  CHECK(d[0] == doctest::Approx(0.6));
  CHECK(d[1] == doctest::Approx(-0.8));

  CHECK(l1_l2_linear_max(Vector::Zero(3), 2.0).norm() == 0.0);
}

TEST_CASE("l1/l2 max: slack l1 budget returns c / ||c||") {
  const Vector c{{1.0, 2.0, -2.0}};  // ||c||_1 / ||c||_2 = 5/3 < sqrt(4)
  const Vector g = l1_l2_linear_max(c, 4.0);
  CHECK((g - c / 3.0).norm() <= 1e-12);
}

TEST_CASE("l1/l2 max: tiny budget splits over tied coordinates") {
  const Vector c{{2.0, -2.0, 1.0}};
  const Vector g = l1_l2_linear_max(c, 0.25);  // budget 0.5 < sqrt(2)
  CHECK(g[0] == doctest::Approx(0.25));
  CHECK(g[1] == doctest::Approx(-0.25));
  CHECK(g[2] == 0.0);
  CHECK(c.dot(g) == doctest::Approx(dual_value(c, 0.5)).epsilon(1e-9));
}

TEST_CASE("l1/l2 max matches the dual on random instances") {
  RandomSource rng(60);
  for (int rep = 0; rep < 200; ++rep) {
    const Index n = 1 + static_cast<Index>(rng.below(30));
    Vector c = test::random_box(n, rng, 2.0);
    if (rep % 5 == 0) c[0] = c[n - 1];  // plant ties
    const double sparsity = 0.05 + 1.2 * static_cast<double>(n) * rng.uniform();
    CAPTURE(rep);
    CAPTURE(n);
    CAPTURE(sparsity);
    const Vector g = l1_l2_linear_max(c, sparsity);
    check_feasible(g, sparsity);
    CHECK(c.dot(g) == doctest::Approx(dual_value(c, std::sqrt(sparsity))).epsilon(1e-8));
  }
}

TEST_CASE("l1/l2 max matches a brute-force grid in two dimensions") {
  RandomSource rng(61);
  for (int rep = 0; rep < 20; ++rep) {
    const Vector c = test::random_box(2, rng, 1.0);
    const double sparsity = 0.2 + 2.0 * rng.uniform();
    const double budget = std::sqrt(sparsity);
    double best = 0.0;
    const int steps = 801;
    for (int i = 0; i < steps; ++i)
      for (int j = 0; j < steps; ++j) {
        const Eigen::Vector2d g(-1.0 + 2.0 * i / (steps - 1), -1.0 + 2.0 * j / (steps - 1));
        if (g.norm() <= 1.0 && g.lpNorm<1>() <= budget) best = std::max(best, c.dot(g));
      }
    const Vector g = l1_l2_linear_max(c, sparsity);
    check_feasible(g, sparsity);
    CHECK(c.dot(g) >= best - 1e-12);
    CHECK(c.dot(g) <= best + 5e-3 * c.norm());
  }
}

TEST_CASE("l1/l2 max rejects a non-positive sparsity") {
  CHECK_THROWS_AS(l1_l2_linear_max(Vector::Ones(3), 0.0), ParameterError);
  CHECK_THROWS_AS(l1_l2_linear_max(Vector::Ones(3), -1.0), ParameterError);
}
