#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "zo/gradient.hpp"
#include "zo/hessian.hpp"
#include "zo/objective.hpp"
#include "zo/types.hpp"

namespace zo {

/// Which estimator to run and with what parameters. `k` is ignored by the
/// entry-wise methods; `sparsity` only matters for the comparison estimator.
struct MethodSpec {
  std::variant<GradientMethod, HessianMethod> method = GradientMethod::stiefel;
  Index k = 1;
  double delta = 0.1;
  double sparsity = kUnbounded;

  bool is_hessian() const { return std::holds_alternative<HessianMethod>(method); }
  bool is_random() const;
  std::string name() const;
};

/// Parses CLI names: stiefel, spherical, gaussian, rademacher, comparison,
/// entrywise, hess-stiefel, hess-spherical, hess-gaussian, hess-entrywise.
std::optional<std::variant<GradientMethod, HessianMethod>> parse_method(std::string_view name);

/// Per-trial distances to the truth. For gradients `error` is the l2 distance
/// and `spectral` is unset; for Hessians `error` is the Frobenius distance.
struct TrialRecord {
  double error = 0.0;
  std::optional<double> spectral;
  std::optional<double> cosine;
  std::uint64_t n_evals = 0;
  std::uint64_t stream = 0;
};

struct ErrorSummary {
  double mean = 0.0;
  double std = 0.0;  // sample standard deviation, 0 for a single trial
  double min = 0.0;
  double max = 0.0;
};

struct TrialStatistics {
  std::string method;
  Index n = 0;
  Index k = 0;
  double delta = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t base_seed = 0;

  /// Vector (as n x 1) for gradients, n x n for Hessians.
  Matrix mean_estimate;
  Matrix truth;
  /// ||mean - truth||: l2 for gradients, Frobenius for Hessians.
  double empirical_bias = 0.0;
  std::optional<double> empirical_bias_spectral;
  /// (1/trials) sum_t ||estimate_t - mean||^2; unset when trials < 2.
  std::optional<double> empirical_variance;

  ErrorSummary error;
  std::optional<ErrorSummary> spectral_error;
  std::optional<double> mean_cosine;
  std::uint64_t total_evals = 0;
  std::vector<TrialRecord> records;
};

/// Runs the estimator `trials` times, trial t on RandomSource(base_seed, t),
/// and folds the results in trial order. Trials run in parallel under
/// ExecPolicy::parallel; the output is identical either way.
///
/// Truth is the objective's exact gradient / Hessian. The comparison
/// estimator targets the normalised gradient, so its truth is grad / ||grad||.
TrialStatistics run_trials(const MethodSpec& spec, const Objective& f, const Vector& x,
                           std::uint64_t trials, std::uint64_t base_seed,
                           ExecPolicy policy = ExecPolicy::parallel);

/// Returns true when error_mean <= sqrt(variance) + bias + 3 error_std / sqrt(trials).
bool satisfies_error_decomposition(const TrialStatistics& stats);

}  // namespace zo
