#pragma once

#include <cstdint>
#include <limits>
#include <string_view>

#include "zo/objective.hpp"
#include "zo/random.hpp"
#include "zo/sampling.hpp"
#include "zo/types.hpp"

namespace zo {

enum class GradientMethod { stiefel, spherical, gaussian, rademacher, comparison, entrywise };

std::string_view to_string(GradientMethod method);

struct GradientEstimate {
  Vector vector;
  GradientMethod method = GradientMethod::stiefel;
  Index k = 0;
  double delta = 0.0;
  std::uint64_t n_evals = 0;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
  /// Comparison estimator only: every response was a tie, vector is zero.
  bool degenerate = false;
};

inline constexpr double kUnbounded = std::numeric_limits<double>::infinity();

/// (n / (2 delta k)) sum_i (f(x + delta v_i) - f(x - delta v_i)) v_i with
/// [v_1..v_k] drawn from St(n, k). Uses 2k evaluations.
GradientEstimate grad_stiefel(const Objective& f, const Vector& x, Index k, double delta,
                              RandomSource& rng, ExecPolicy policy = ExecPolicy::parallel);

/// Same formula with i.i.d. uniform directions on the sphere.
GradientEstimate grad_spherical(const Objective& f, const Vector& x, Index k, double delta,
                                RandomSource& rng, ExecPolicy policy = ExecPolicy::parallel);

/// Gaussian smoothing: (sqrt(n) / (2 k delta)) sum_i (f(x + delta v_i / sqrt(n)) - ...) v_i.
GradientEstimate grad_gaussian(const Objective& f, const Vector& x, Index k, double delta,
                               RandomSource& rng, ExecPolicy policy = ExecPolicy::parallel);

/// One k-sparse Rademacher draw z; g_i = z_i (f(x + delta z) - f(x)) / delta.
/// Two evaluations regardless of k.
GradientEstimate grad_rademacher(const Objective& f, const Vector& x, Index k, double delta,
                                 RandomSource& rng);

/// Comparison-based direction estimate. Returns a vector with ||g|| <= 1 that
/// estimates grad f / ||grad f||, using k oracle calls. `sparsity` is s in the
/// l1 budget sqrt(s); pass kUnbounded for no l1 constraint.
GradientEstimate grad_comparison(const ComparisonOracle& oracle, const Vector& x, Index k,
                                 double delta, double sparsity, RandomSource& rng,
                                 ExecPolicy policy = ExecPolicy::parallel);

/// Central differences along the canonical axes. Deterministic, 2n evaluations.
GradientEstimate grad_entrywise(const Objective& f, const Vector& x, double delta,
                                ExecPolicy policy = ExecPolicy::parallel);

/// argmax <c, g> over { ||g||_1 <= sqrt(s), ||g||_2 <= 1 }.
///
/// Soft-thresholds c at the level lambda (found by bisection) that makes the
/// l1 budget tight, then normalises. lambda = 0 when the budget is slack.
/// When the budget is below sqrt(#ties at max|c_i|) the l2 ball is slack and
/// the budget is split evenly over the tied coordinates. c = 0 gives 0.
Vector l1_l2_linear_max(const Vector& c, double sparsity);

}  // namespace zo
