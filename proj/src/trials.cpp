#include "zo/trials.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>

#include "zo/metrics.hpp"

namespace zo {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

struct TrialOutput {
  Matrix estimate;
  std::uint64_t n_evals = 0;
};

TrialOutput run_one(const MethodSpec& spec, const Objective& f, const ComparisonOracle& oracle,
                    const Vector& x, RandomSource& rng, ExecPolicy inner) {
  return std::visit(
      overloaded{
          [&](GradientMethod m) -> TrialOutput {
            GradientEstimate e;
            switch (m) {
              case GradientMethod::stiefel:
                e = grad_stiefel(f, x, spec.k, spec.delta, rng, inner);
                break;
              case GradientMethod::spherical:
                e = grad_spherical(f, x, spec.k, spec.delta, rng, inner);
                break;
              case GradientMethod::gaussian:
                e = grad_gaussian(f, x, spec.k, spec.delta, rng, inner);
                break;
              case GradientMethod::rademacher:
                e = grad_rademacher(f, x, spec.k, spec.delta, rng);
                break;
              case GradientMethod::comparison:
                e = grad_comparison(oracle, x, spec.k, spec.delta, spec.sparsity, rng, inner);
                break;
              case GradientMethod::entrywise:
                e = grad_entrywise(f, x, spec.delta, inner);
                break;
            }
            return {Matrix(e.vector), e.n_evals};
          },
          [&](HessianMethod m) -> TrialOutput {
            HessianEstimate e;
            switch (m) {
              case HessianMethod::stiefel:
                e = hess_stiefel(f, x, spec.k, spec.delta, rng, inner);
                break;
              case HessianMethod::spherical:
                e = hess_spherical(f, x, spec.k, spec.delta, rng, inner);
                break;
              case HessianMethod::gaussian_stein:
                e = hess_gaussian_stein(f, x, spec.k, spec.delta, rng, inner);
                break;
              case HessianMethod::entrywise:
                e = hess_entrywise(f, x, spec.delta, inner);
                break;
            }
            return {std::move(e.matrix), e.n_evals};
          }},
      spec.method);
}

ErrorSummary summarize(const std::vector<double>& values) {
  ErrorSummary s;
  CompensatedSum sum;
  for (double v : values) sum.add(v);
  const double count = static_cast<double>(values.size());
  s.mean = sum.value() / count;
  CompensatedSum sq;
  for (double v : values) sq.add((v - s.mean) * (v - s.mean));
  s.std = values.size() > 1 ? std::sqrt(sq.value() / (count - 1.0)) : 0.0;
  s.min = *std::min_element(values.begin(), values.end());
  s.max = *std::max_element(values.begin(), values.end());
  return s;
}

}  // namespace

bool MethodSpec::is_random() const {
  return std::visit(overloaded{[](GradientMethod m) { return m != GradientMethod::entrywise; },
                               [](HessianMethod m) { return m != HessianMethod::entrywise; }},
                    method);
}

std::string MethodSpec::name() const {
  return std::visit([](auto m) { return std::string(to_string(m)); }, method);
}

std::optional<std::variant<GradientMethod, HessianMethod>> parse_method(std::string_view name) {
  using V = std::variant<GradientMethod, HessianMethod>;
  for (auto m : {GradientMethod::stiefel, GradientMethod::spherical, GradientMethod::gaussian,
                 GradientMethod::rademacher, GradientMethod::comparison,
                 GradientMethod::entrywise})
    if (to_string(m) == name) return V(m);
  for (auto m : {HessianMethod::stiefel, HessianMethod::spherical, HessianMethod::gaussian_stein,
                 HessianMethod::entrywise})
    if (to_string(m) == name) return V(m);
  return std::nullopt;
}

TrialStatistics run_trials(const MethodSpec& spec, const Objective& f, const Vector& x,
                           std::uint64_t trials, std::uint64_t base_seed, ExecPolicy policy) {
  if (trials < 1) throw ParameterError("run_trials: trials must be >= 1");
  if (x.size() != f.dimension()) throw ParameterError("run_trials: point dimension mismatch");

  const bool hessian = spec.is_hessian();
  const bool comparison = !hessian && std::get<GradientMethod>(spec.method) ==
                                          GradientMethod::comparison;
  Matrix truth;
  if (hessian) {
    truth = f.hessian(x);
  } else {
    Vector g = f.gradient(x);
    if (comparison) {
      const double norm = g.norm();
      if (norm > 0.0) g /= norm;
    }
    truth = g;
  }

  const ComparisonOracle oracle(f);
  const auto count = static_cast<Index>(trials);
  std::vector<TrialOutput> outputs(static_cast<std::size_t>(count));

  // Trials are independent; with an outer parallel loop the kernels run
  // serially inside each trial. Either way each slot is written once.
  std::exception_ptr failure;
  Index failed_at = std::numeric_limits<Index>::max();
  auto body = [&](Index t, ExecPolicy inner) {
    try {
      RandomSource rng(base_seed, static_cast<std::uint64_t>(t));
      outputs[static_cast<std::size_t>(t)] = run_one(spec, f, oracle, x, rng, inner);
    } catch (...) {
#pragma omp critical(zo_trial_failure)
      if (t < failed_at) {
        failed_at = t;
        failure = std::current_exception();
      }
    }
  };
  if (policy == ExecPolicy::parallel && count > 1) {
#pragma omp parallel for schedule(dynamic)
    for (Index t = 0; t < count; ++t) body(t, ExecPolicy::serial);
  } else {
    for (Index t = 0; t < count; ++t) body(t, policy);
  }
  if (failure) {
    try {
      std::rethrow_exception(failure);
    } catch (const ParameterError& e) {
      throw ParameterError("trial " + std::to_string(failed_at) + ": " + e.what());
    } catch (const EvaluationError& e) {
      throw EvaluationError("trial " + std::to_string(failed_at) + ": " + e.what());
    } catch (const std::exception& e) {
      throw std::runtime_error("trial " + std::to_string(failed_at) + ": " + e.what());
    }
  }

  TrialStatistics stats;
  stats.method = spec.name();
  stats.n = f.dimension();
  stats.k = spec.is_random() ? spec.k : f.dimension();
  stats.delta = spec.delta;
  stats.trials = trials;
  stats.base_seed = base_seed;
  stats.truth = truth;

  // mean estimate, entrywise compensated sums in trial order
  const Index rows = truth.rows();
  const Index cols = truth.cols();
  stats.mean_estimate.resize(rows, cols);
  for (Index c = 0; c < cols; ++c)
    for (Index r = 0; r < rows; ++r) {
      CompensatedSum s;
      for (const auto& o : outputs) s.add(o.estimate(r, c));
      stats.mean_estimate(r, c) = s.value() / static_cast<double>(count);
    }

  const Matrix bias = stats.mean_estimate - truth;
  stats.empirical_bias = bias.norm();
  if (hessian) stats.empirical_bias_spectral = spectral_norm(bias);

  std::vector<double> errs, spectral, cosines;
  CompensatedSum spread;
  std::uint64_t total_evals = 0;
  for (Index t = 0; t < count; ++t) {
    const auto& o = outputs[static_cast<std::size_t>(t)];
    TrialRecord rec;
    rec.n_evals = o.n_evals;
    rec.stream = static_cast<std::uint64_t>(t);
    const Matrix diff = o.estimate - truth;
    rec.error = diff.norm();
    if (hessian) {
      rec.spectral = spectral_norm(diff);
      spectral.push_back(*rec.spectral);
    } else {
      rec.cosine = cosine_similarity(Vector(o.estimate.col(0)), Vector(truth.col(0)));
      cosines.push_back(*rec.cosine);
    }
    errs.push_back(rec.error);
    spread.add((o.estimate - stats.mean_estimate).squaredNorm());
    total_evals += o.n_evals;
    stats.records.push_back(rec);
  }
  if (count >= 2) stats.empirical_variance = spread.value() / static_cast<double>(count);
  stats.error = summarize(errs);
  if (hessian) stats.spectral_error = summarize(spectral);
  else stats.mean_cosine = summarize(cosines).mean;
  stats.total_evals = total_evals;
  return stats;
}

bool satisfies_error_decomposition(const TrialStatistics& stats) {
  const double variance = stats.empirical_variance.value_or(0.0);
  const double slack = 3.0 * stats.error.std / std::sqrt(static_cast<double>(stats.trials));
  // a few ulps of headroom for the rounding in the sums themselves
  const double rhs = std::sqrt(variance) + stats.empirical_bias + slack;
  return stats.error.mean <= rhs * (1.0 + 1e-12) + 1e-300;
}

}  // namespace zo
