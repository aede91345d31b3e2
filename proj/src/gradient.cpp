#include "zo/gradient.hpp"

#include <cmath>
#include <string>

#include "zo/kernels.hpp"

namespace zo {

std::string_view to_string(GradientMethod method) {
  switch (method) {
    case GradientMethod::stiefel: return "stiefel";
    case GradientMethod::spherical: return "spherical";
    case GradientMethod::gaussian: return "gaussian";
    case GradientMethod::rademacher: return "rademacher";
    case GradientMethod::comparison: return "comparison";
    case GradientMethod::entrywise: return "entrywise";
  }
  return "unknown";
}

namespace {

void check_common(Index dimension, const Vector& x, double delta) {
  if (x.size() != dimension)
    throw ParameterError("point has dimension " + std::to_string(x.size()) + ", expected " +
                         std::to_string(dimension));
  if (!(delta > 0.0) || !std::isfinite(delta))
    throw ParameterError("delta must be a positive finite number");
  if (!x.allFinite()) throw ParameterError("point has non-finite entries");
}

void check_frame_size(Index n, Index k) {
  if (k < 1 || k > n)
    throw ParameterError("k must satisfy 1 <= k <= n (n=" + std::to_string(n) +
                         ", k=" + std::to_string(k) + ")");
}

GradientEstimate make_estimate(Vector v, GradientMethod method, Index k, double delta,
                               std::uint64_t evals, const RandomSource* rng) {
  GradientEstimate out;
  out.vector = std::move(v);
  out.method = method;
  out.k = k;
  out.delta = delta;
  out.n_evals = evals;
  if (rng) {
    out.seed = rng->seed();
    out.stream = rng->stream();
  }
  return out;
}

// (scale) * sum_i d_i v_i over the columns of `directions`
Vector weighted_directions(const Matrix& directions, const Vector& differences, double scale) {
  return scale * (directions * differences);
}

}  // namespace

GradientEstimate grad_stiefel(const Objective& f, const Vector& x, Index k, double delta,
                              RandomSource& rng, ExecPolicy policy) {
  const Index n = f.dimension();
  check_common(n, x, delta);
  check_frame_size(n, k);
  const OrthonormalFrame frame = sample_stiefel(n, k, rng);
  const Vector d = kernels::central_differences(policy, f, x, frame.matrix(), delta);
  const double scale = static_cast<double>(n) / (2.0 * delta * static_cast<double>(k));
  return make_estimate(weighted_directions(frame.matrix(), d, scale), GradientMethod::stiefel,
                       k, delta, 2 * static_cast<std::uint64_t>(k), &rng);
}

GradientEstimate grad_spherical(const Objective& f, const Vector& x, Index k, double delta,
                                RandomSource& rng, ExecPolicy policy) {
  const Index n = f.dimension();
  check_common(n, x, delta);
  check_frame_size(n, k);
  const Matrix dirs = sample_sphere_columns(n, k, rng);
  const Vector d = kernels::central_differences(policy, f, x, dirs, delta);
  const double scale = static_cast<double>(n) / (2.0 * delta * static_cast<double>(k));
  return make_estimate(weighted_directions(dirs, d, scale), GradientMethod::spherical, k, delta,
                       2 * static_cast<std::uint64_t>(k), &rng);
}

GradientEstimate grad_gaussian(const Objective& f, const Vector& x, Index k, double delta,
                               RandomSource& rng, ExecPolicy policy) {
  const Index n = f.dimension();
  check_common(n, x, delta);
  check_frame_size(n, k);
  const Matrix dirs = sample_gaussian_matrix(n, k, rng);
  const double root_n = std::sqrt(static_cast<double>(n));
  const Vector d = kernels::central_differences(policy, f, x, dirs, delta / root_n);
  const double scale = root_n / (2.0 * static_cast<double>(k) * delta);
  return make_estimate(weighted_directions(dirs, d, scale), GradientMethod::gaussian, k, delta,
                       2 * static_cast<std::uint64_t>(k), &rng);
}

GradientEstimate grad_rademacher(const Objective& f, const Vector& x, Index k, double delta,
                                 RandomSource& rng) {
  const Index n = f.dimension();
  check_common(n, x, delta);
  check_frame_size(n, k);
  const SparseSignVector z = sample_sparse_rademacher(n, k, rng);
  const Vector dense = z.dense();
  const double base = f(x);
  const double moved = f(x + delta * dense);
  return make_estimate(dense * ((moved - base) / delta), GradientMethod::rademacher, k, delta, 2,
                       &rng);
}

GradientEstimate grad_comparison(const ComparisonOracle& oracle, const Vector& x, Index k,
                                 double delta, double sparsity, RandomSource& rng,
                                 ExecPolicy policy) {
  const Index n = oracle.dimension();
  check_common(n, x, delta);
  if (k < 1) throw ParameterError("k must be >= 1");
  if (!(sparsity > 0.0)) throw ParameterError("sparsity must be positive or infinite");
  const Matrix dirs = sample_sphere_columns(n, k, rng);
  const Vector signs = kernels::comparison_signs(policy, oracle, x, dirs, delta);
  const Vector c = dirs * signs;
  GradientEstimate out = make_estimate(Vector::Zero(n), GradientMethod::comparison, k, delta,
                                       static_cast<std::uint64_t>(k), &rng);
  if (signs.cwiseAbs().maxCoeff() == 0.0) {
    out.degenerate = true;
    return out;
  }
  out.vector = l1_l2_linear_max(c, sparsity);
  return out;
}

GradientEstimate grad_entrywise(const Objective& f, const Vector& x, double delta,
                                ExecPolicy policy) {
  const Index n = f.dimension();
  check_common(n, x, delta);
  const Vector d = kernels::coordinate_differences(policy, f, x, delta);
  return make_estimate(d / (2.0 * delta), GradientMethod::entrywise, n, delta,
                       2 * static_cast<std::uint64_t>(n), nullptr);
}

}  // namespace zo
