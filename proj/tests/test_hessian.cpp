#include "doctest.h"

#include <cmath>

#include "test_support.hpp"
#include "zo/hessian.hpp"
#include "zo/metrics.hpp"

using namespace zo;

namespace {

using Estimator = HessianEstimate (*)(const Objective&, const Vector&, Index, double,
                                      RandomSource&, ExecPolicy);

Matrix small_test_matrix() {
  Matrix a(5, 5);
  a << 2.0, 0.5, 0.0, -0.3, 0.1,  //
      0.5, 1.0, 0.2, 0.0, 0.0,    //
      0.0, 0.2, -1.5, 0.4, 0.0,   //
      -0.3, 0.0, 0.4, 0.8, -0.6,  //
      0.1, 0.0, 0.0, -0.6, 3.0;
  return a;
}

Matrix mean_estimate(Estimator est, const Objective& f, const Vector& x, Index k, double delta,
                     int trials, std::uint64_t seed) {
  Matrix sum = Matrix::Zero(f.dimension(), f.dimension());
  for (int t = 0; t < trials; ++t) {
    RandomSource rng(seed, static_cast<std::uint64_t>(t));
    sum += est(f, x, k, delta, rng, ExecPolicy::serial).matrix;
  }
  return sum / trials;
}

}  // namespace

TEST_CASE("full Stiefel frames and the entry-wise stencil are exact on quadratics") {
  RandomSource pick(70);
  for (Index n : {10, 50}) {
    for (double delta : {0.1, 0.01}) {
      for (int rep = 0; rep < 20; ++rep) {
        const Matrix a = test::random_symmetric(n, pick, 2.0);
        const auto f = make_quadratic(a, test::random_box(n, pick));
        const Vector x = test::random_box(n, pick);
        RandomSource rng(700 + rep, static_cast<std::uint64_t>(n));
        CHECK(spectral_norm(hess_stiefel(f, x, n, delta, rng).matrix - a) <= 1e-6);
        CHECK(spectral_norm(hess_entrywise(f, x, delta).matrix - a) <= 1e-6);
      }
    }
  }
}

TEST_CASE("Hessian estimates are exactly symmetric") {
  const auto f = make_exp_sine_function(12);
  const Vector x = Vector::Constant(12, 0.3);
  RandomSource rng(71);
  for (const Matrix& m :
       {hess_stiefel(f, x, 4, 0.1, rng).matrix, hess_spherical(f, x, 3, 0.1, rng).matrix,
        hess_gaussian_stein(f, x, 3, 0.1, rng).matrix, hess_entrywise(f, x, 0.1).matrix}) {
    CHECK((m.array() == m.transpose().array()).all());
  }
}

TEST_CASE("spherical Hessian estimator is unbiased on quadratics (k = 1, 2)") {
  const Matrix a = small_test_matrix();
  const auto f = make_quadratic(a, Vector::Zero(5));
  for (Index k : {1, 2}) {
    CAPTURE(k);
    const Matrix mean = mean_estimate(&hess_spherical, f, Vector::Zero(5), k, 0.1, 100000, 72);
    CHECK((mean - a).norm() / a.norm() <= 0.03);
  }
}

TEST_CASE("Stiefel Hessian estimator is unbiased on quadratics (k < n)") {
  const Matrix a = small_test_matrix();
  const auto f = make_quadratic(a, Vector::Zero(5));
  const Matrix mean = mean_estimate(&hess_stiefel, f, Vector::Zero(5), 2, 0.1, 100000, 73);
  CHECK((mean - a).norm() / a.norm() <= 0.03);
}

TEST_CASE("Gaussian Stein Hessian estimator is unbiased on quadratics") {
  const Matrix a = small_test_matrix();
  const auto f = make_quadratic(a, Vector::Zero(5));
  const Matrix mean =
      mean_estimate(&hess_gaussian_stein, f, Vector::Zero(5), 10, 0.1, 10000, 74);
  CHECK((mean - a).norm() / a.norm() <= 0.05);
}

TEST_CASE("constant objective gives a zero Hessian") {
  const auto f = make_constant(6, -2.0);
  RandomSource rng(75);
  CHECK(hess_stiefel(f, Vector::Zero(6), 3, 0.1, rng).matrix.norm() == 0.0);
  CHECK(hess_spherical(f, Vector::Zero(6), 3, 0.1, rng).matrix.norm() == 0.0);
  CHECK(hess_gaussian_stein(f, Vector::Zero(6), 3, 0.1, rng).matrix.norm() == 0.0);
  CHECK(hess_entrywise(f, Vector::Zero(6), 0.1).matrix.norm() == 0.0);
}

TEST_CASE("Hessian evaluation counts") {
  const Index n = 9;
  const auto f = make_exp_sine_function(n);
  const Vector x = Vector::Zero(n);
  RandomSource rng(76);
  auto check = [&](const HessianEstimate& e, std::uint64_t expected) {
    CHECK(e.n_evals == expected);
    CHECK(f.evaluations() == expected);
    f.reset_evaluations();
  };
  f.reset_evaluations();
  check(hess_stiefel(f, x, 4, 0.1, rng), 64);
  check(hess_spherical(f, x, 3, 0.1, rng), 36);
  check(hess_gaussian_stein(f, x, 3, 0.1, rng), 19);
  check(hess_entrywise(f, x, 0.1), 2 * 9 * 10);
}

TEST_CASE("Hessian provenance and names") {
  const auto f = make_exp_sine_function(4);
  RandomSource rng(77, 5);
  const auto est = hess_stiefel(f, Vector::Zero(4), 2, 0.05, rng);
  CHECK(est.method == HessianMethod::stiefel);
  CHECK(est.seed == 77);
  CHECK(est.stream == 5);
  CHECK(est.k == 2);
  CHECK(to_string(HessianMethod::gaussian_stein) == "hess-gaussian");
  CHECK(to_string(HessianMethod::entrywise) == "hess-entrywise");
}

TEST_CASE("Hessian preconditions") {
  const auto f = make_exp_sine_function(4);
  RandomSource rng(78);
  CHECK_THROWS_AS(hess_stiefel(f, Vector::Zero(4), 5, 0.1, rng), ParameterError);
  CHECK_THROWS_AS(hess_spherical(f, Vector::Zero(4), 0, 0.1, rng), ParameterError);
  CHECK_THROWS_AS(hess_gaussian_stein(f, Vector::Zero(4), 0, 0.1, rng), ParameterError);
  CHECK_THROWS_AS(hess_entrywise(f, Vector::Zero(4), 0.0), ParameterError);
  CHECK_THROWS_AS(hess_stiefel(f, Vector::Zero(3), 2, 0.1, rng), ParameterError);
}

TEST_CASE("Stiefel Hessian bias shrinks with delta squared (n = 30, k = n)") {
  const Index n = 30;
  const auto f = make_exp_sine_function(n);
  const Vector x = Vector::Constant(n, M_PI / 4);
  const Matrix truth = f.hessian(x);
  auto mean_error = [&](double delta) {
    double sum = 0;
    for (int t = 0; t < 10; ++t) {
      RandomSource rng(79, static_cast<std::uint64_t>(t));
      sum += spectral_norm(hess_stiefel(f, x, n, delta, rng).matrix - truth);
    }
    return sum / 10;
  };
  const double ratio = mean_error(0.1) / mean_error(0.01);
  CHECK(ratio >= 50);
  CHECK(ratio <= 200);
}

TEST_CASE("Stiefel Hessian variance collapses at k = n on quadratics") {
  RandomSource pick(80);
  const Index n = 8;
  const Matrix a = test::random_symmetric(n, pick);
  const auto f = make_quadratic(a, Vector::Zero(n));
  Matrix first;
  for (int t = 0; t < 20; ++t) {
    RandomSource rng(81, static_cast<std::uint64_t>(t));
    const Matrix m = hess_stiefel(f, Vector::Zero(n), n, 0.1, rng).matrix;
    if (t == 0) first = m;
    CHECK((m - first).norm() <= 1e-9);
  }
}
