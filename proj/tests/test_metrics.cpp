#include "doctest.h"

#include <cmath>

#include "test_support.hpp"
#include "zo/metrics.hpp"

using namespace zo;

TEST_CASE("spectral norm") {
  CHECK(spectral_norm(Eigen::Vector3d{1.0, -3.0, 2.0}.asDiagonal().toDenseMatrix()) ==
        doctest::Approx(3.0).epsilon(1e-14));
  CHECK(spectral_norm(Matrix::Zero(4, 4)) == 0.0);

  RandomSource rng(100);
  const Matrix m = test::random_symmetric(50, rng);
  CHECK(std::abs(spectral_norm(m) - spectral_norm_power_iteration(m)) <= 1e-8);

  Matrix bad = Matrix::Identity(3, 3);
  bad(0, 1) = 1e-6;
  CHECK_THROWS_AS(spectral_norm(bad), ParameterError);
  CHECK_THROWS_AS(spectral_norm(Matrix::Zero(2, 3)), ParameterError);
}

TEST_CASE("spectral norm never exceeds the Frobenius norm") {
  RandomSource rng(101);
  for (int rep = 0; rep < 100; ++rep) {
    const Index n = 1 + static_cast<Index>(rng.below(40));
    const Matrix m = test::random_symmetric(n, rng, 5.0);
    CHECK(spectral_norm(m) <= m.norm() * (1 + 1e-14));
  }
}

TEST_CASE("vector errors and cosine") {
  const Vector g{{1.0, 1.0}};
  const auto same = errors(g, g);
  CHECK(same.l2 == 0.0);
  CHECK(same.cosine == doctest::Approx(1.0));
  CHECK(errors(Vector(-g), g).cosine == doctest::Approx(-1.0));
  CHECK(cosine_similarity(Vector{{1.0, 0.0}}, g) == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(errors(Vector{{4.0, 5.0}}, g).l2 == doctest::Approx(5.0));

  bool degenerate = false;
  CHECK(cosine_similarity(Vector::Zero(2), g, &degenerate) == 0.0);
  CHECK(degenerate);
  const auto zero = errors(Vector::Zero(2), g);
  CHECK(zero.cosine == 0.0);
  CHECK(zero.cosine_degenerate);
  CHECK_THROWS_AS(errors(Vector::Zero(3), g), ParameterError);
}

TEST_CASE("matrix errors") {
  const Matrix truth = Eigen::Vector2d{2.0, -1.0}.asDiagonal();
  const Matrix estimate = Eigen::Vector2d{2.0, 1.0}.asDiagonal();
  const auto e = errors(estimate, truth);
  CHECK(e.frobenius == doctest::Approx(2.0));
  CHECK(e.spectral == doctest::Approx(2.0));
  CHECK(errors(truth, truth).spectral == 0.0);
}

TEST_CASE("compensated sum keeps small addends") {
  CompensatedSum s;
  s.add(1.0);
  for (int i = 0; i < 1000; ++i) s.add(1e-17);
  s.add(-1.0);
  CHECK(s.value() == doctest::Approx(1e-14).epsilon(1e-6));
}

TEST_CASE("Pearson correlation") {
  const Vector a{{1.0, 2.0, 3.0, 4.0}};
  CHECK(pearson_correlation(a, 2.0 * a + Vector::Ones(4)) == doctest::Approx(1.0));
  CHECK(pearson_correlation(a, -a) == doctest::Approx(-1.0));
  CHECK(pearson_correlation(a, Vector{{1.0, -1.0, -1.0, 1.0}}) == doctest::Approx(0.0));
  CHECK_THROWS_AS(pearson_correlation(Vector::Ones(1), Vector::Ones(1)), ParameterError);
}
