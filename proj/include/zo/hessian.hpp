#pragma once

#include <cstdint>
#include <string_view>

#include "zo/objective.hpp"
#include "zo/random.hpp"
#include "zo/types.hpp"

namespace zo {

enum class HessianMethod { stiefel, spherical, gaussian_stein, entrywise };

std::string_view to_string(HessianMethod method);

struct HessianEstimate {
  Matrix matrix;  // exactly symmetric
  HessianMethod method = HessianMethod::stiefel;
  Index k = 0;
  double delta = 0.0;
  std::uint64_t n_evals = 0;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
};

/// Two independent frames V, W from St(n, k);
/// H = (n^2 / (8 delta^2 k^2)) sum_ij D_ij (v_i w_j^T + w_j v_i^T), where D_ij
/// is the four-point difference. 4k^2 evaluations.
HessianEstimate hess_stiefel(const Objective& f, const Vector& x, Index k, double delta,
                             RandomSource& rng, ExecPolicy policy = ExecPolicy::parallel);

/// Same kernel with i.i.d. sphere directions for v_i and w_j.
HessianEstimate hess_spherical(const Objective& f, const Vector& x, Index k, double delta,
                               RandomSource& rng, ExecPolicy policy = ExecPolicy::parallel);

/// Stein-identity estimator over k^2 Gaussian directions:
/// (n / (2 k^2 delta^2)) sum_i (f(x + h v_i) - 2 f(x) + f(x - h v_i)) (v_i v_i^T - I),
/// h = delta / sqrt(n). 2k^2 + 1 evaluations.
HessianEstimate hess_gaussian_stein(const Objective& f, const Vector& x, Index k, double delta,
                                    RandomSource& rng, ExecPolicy policy = ExecPolicy::parallel);

/// Four-point stencil on every coordinate pair (i <= j). 2n(n+1) evaluations.
HessianEstimate hess_entrywise(const Objective& f, const Vector& x, double delta,
                               ExecPolicy policy = ExecPolicy::parallel);

}  // namespace zo
