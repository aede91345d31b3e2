#include "doctest.h"

#include <cmath>

#include <omp.h>

#include "test_support.hpp"
#include "zo/trials.hpp"

using namespace zo;

namespace {

MethodSpec spec_for(std::string_view name, Index k, double delta) {
  MethodSpec spec;
  spec.method = *parse_method(name);
  spec.k = k;
  spec.delta = delta;
  return spec;
}

bool identical(const TrialStatistics& a, const TrialStatistics& b) {
  bool same = (a.mean_estimate.array() == b.mean_estimate.array()).all() &&
              a.empirical_bias == b.empirical_bias &&
              a.empirical_variance == b.empirical_variance && a.error.mean == b.error.mean &&
              a.error.std == b.error.std && a.error.min == b.error.min &&
              a.error.max == b.error.max && a.mean_cosine == b.mean_cosine &&
              a.total_evals == b.total_evals && a.records.size() == b.records.size();
  for (std::size_t t = 0; same && t < a.records.size(); ++t)
    same = a.records[t].error == b.records[t].error &&
           a.records[t].spectral == b.records[t].spectral;
  return same;
}

}  // namespace

TEST_CASE("method names round-trip") {
  for (const char* name : {"stiefel", "spherical", "gaussian", "rademacher", "comparison",
                           "entrywise", "hess-stiefel", "hess-spherical", "hess-gaussian",
                           "hess-entrywise"}) {
    const auto parsed = parse_method(name);
    REQUIRE(parsed);
    MethodSpec spec;
    spec.method = *parsed;
    CHECK(spec.name() == name);
  }
  CHECK(!parse_method("newton"));
}

TEST_CASE("run_trials is reproducible and independent of the execution policy") {
  omp_set_num_threads(4);
  const auto f = make_exp_sine_function(20);
  const Vector x = Vector::Constant(20, 0.4);
  for (const char* name : {"stiefel", "gaussian", "comparison", "hess-stiefel", "hess-gaussian"}) {
    CAPTURE(name);
    const auto spec = spec_for(name, 4, 0.05);
    const auto a = run_trials(spec, f, x, 25, 110, ExecPolicy::parallel);
    const auto b = run_trials(spec, f, x, 25, 110, ExecPolicy::parallel);
    const auto c = run_trials(spec, f, x, 25, 110, ExecPolicy::serial);
    CHECK(identical(a, b));
    CHECK(identical(a, c));
  }
}

TEST_CASE("deterministic estimators have zero spread") {
  const auto f = make_exp_sine_function(10);
  const auto stats = run_trials(spec_for("entrywise", 1, 0.01), f, Vector::Zero(10), 5, 111);
  CHECK(stats.error.std == 0.0);
  CHECK(stats.error.min == stats.error.max);
  CHECK(*stats.empirical_variance <= 1e-24);  // mean of equal values may round
  CHECK(stats.k == 10);
  CHECK(stats.total_evals == 5 * 20);
}

TEST_CASE("spherical estimator bias on a linear objective is within noise") {
  const Index n = 10;
  RandomSource pick(112);
  const Vector c = test::random_box(n, pick, 2.0);
  const std::uint64_t trials = 100000;
  const auto stats = run_trials(spec_for("spherical", 1, 0.1), make_linear(c), Vector::Zero(n),
                                trials, 113);
  const double standard_error = std::sqrt(*stats.empirical_variance / trials);
  CHECK(stats.empirical_bias <= 3 * standard_error);
}

TEST_CASE("error decomposition holds on produced statistics") {
  const auto f = make_exp_sine_function(15);
  const Vector x = Vector::Constant(15, 0.7);
  for (const char* name : {"stiefel", "spherical", "gaussian", "rademacher", "comparison",
                           "entrywise", "hess-stiefel", "hess-spherical", "hess-gaussian",
                           "hess-entrywise"}) {
    for (std::uint64_t trials : {1, 2, 40}) {
      CAPTURE(name);
      CAPTURE(trials);
      const auto stats = run_trials(spec_for(name, 3, 0.1), f, x, trials, 114);
      CHECK(satisfies_error_decomposition(stats));
      if (trials < 2) CHECK(!stats.empirical_variance);
      else CHECK(*stats.empirical_variance >= 0.0);
    }
  }
}

TEST_CASE("comparison trials are measured against the normalised gradient") {
  const auto f = make_exp_sine_function(12);
  const Vector x = Vector::Zero(12);
  const auto stats = run_trials(spec_for("comparison", 30, 0.05), f, x, 10, 115);
  const Vector g = f.gradient(x);
  CHECK((Vector(stats.truth.col(0)) - g / g.norm()).norm() <= 1e-15);
  CHECK(stats.mean_cosine);
  CHECK(*stats.mean_cosine > 0.3);
}

TEST_CASE("Hessian trials record spectral errors") {
  const auto f = make_exp_sine_function(8);
  const auto stats = run_trials(spec_for("hess-stiefel", 8, 0.01), f, Vector::Zero(8), 4, 116);
  REQUIRE(stats.spectral_error);
  REQUIRE(stats.empirical_bias_spectral);
  CHECK(stats.spectral_error->mean <= stats.error.mean * (1 + 1e-12));
  CHECK(stats.truth.rows() == 8);
  CHECK(stats.truth.cols() == 8);
  for (const auto& r : stats.records) CHECK(r.spectral);
}

TEST_CASE("run_trials reports the failing trial") {
  const Objective cliff("cliff", 4, [](const Vector& p) { return p.norm() > 0.5 ? NAN : 1.0; },
                        [](const Vector&) { return Vector::Zero(4); });
  try {
    run_trials(spec_for("entrywise", 1, 1.0), cliff, Vector::Zero(4), 3, 117);
    FAIL("expected an evaluation error");
  } catch (const EvaluationError& e) {
    CHECK(std::string(e.what()).find("trial 0") != std::string::npos);
  }
  CHECK_THROWS_AS(run_trials(spec_for("stiefel", 5, 0.1), cliff, Vector::Zero(4), 3, 117),
                  ParameterError);
  CHECK_THROWS_AS(run_trials(spec_for("stiefel", 2, 0.1), cliff, Vector::Zero(4), 0, 117),
                  ParameterError);
}
