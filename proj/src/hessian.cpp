#include "zo/hessian.hpp"

#include <cmath>
#include <string>

#include "zo/kernels.hpp"
#include "zo/sampling.hpp"

namespace zo {

std::string_view to_string(HessianMethod method) {
  switch (method) {
    case HessianMethod::stiefel: return "hess-stiefel";
    case HessianMethod::spherical: return "hess-spherical";
    case HessianMethod::gaussian_stein: return "hess-gaussian";
    case HessianMethod::entrywise: return "hess-entrywise";
  }
  return "unknown";
}

namespace {

void check_inputs(Index n, const Vector& x, double delta) {
  if (x.size() != n)
    throw ParameterError("point has dimension " + std::to_string(x.size()) + ", expected " +
                         std::to_string(n));
  if (!x.allFinite()) throw ParameterError("point has non-finite entries");
  if (!(delta > 0.0) || !std::isfinite(delta))
    throw ParameterError("delta must be a positive finite number");
}

void check_frame_size(Index n, Index k) {
  if (k < 1 || k > n)
    throw ParameterError("k must satisfy 1 <= k <= n (n=" + std::to_string(n) +
                         ", k=" + std::to_string(k) + ")");
}

// scale * (V D W^T + W D^T V^T); M + M^T is symmetric bit for bit
Matrix symmetric_outer_sum(const Matrix& v, const Matrix& d, const Matrix& w, double scale) {
  const Matrix half = scale * (v * d * w.transpose());
  return half + half.transpose();
}

HessianEstimate make_estimate(Matrix m, HessianMethod method, Index k, double delta,
                              std::uint64_t evals, const RandomSource* rng) {
  HessianEstimate out;
  out.matrix = std::move(m);
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

std::uint64_t four_point_evals(Index k) { return 4 * static_cast<std::uint64_t>(k * k); }

double four_point_scale(Index n, Index k, double delta) {
  const double nn = static_cast<double>(n);
  const double kk = static_cast<double>(k);
  return (nn * nn) / (8.0 * delta * delta * kk * kk);
}

}  // namespace

HessianEstimate hess_stiefel(const Objective& f, const Vector& x, Index k, double delta,
                             RandomSource& rng, ExecPolicy policy) {
  const Index n = f.dimension();
  check_inputs(n, x, delta);
  check_frame_size(n, k);
  const OrthonormalFrame v = sample_stiefel(n, k, rng);
  const OrthonormalFrame w = sample_stiefel(n, k, rng);
  const Matrix d = kernels::four_point_differences(policy, f, x, v.matrix(), w.matrix(), delta);
  return make_estimate(symmetric_outer_sum(v.matrix(), d, w.matrix(), four_point_scale(n, k, delta)),
                       HessianMethod::stiefel, k, delta, four_point_evals(k), &rng);
}

HessianEstimate hess_spherical(const Objective& f, const Vector& x, Index k, double delta,
                               RandomSource& rng, ExecPolicy policy) {
  const Index n = f.dimension();
  check_inputs(n, x, delta);
  check_frame_size(n, k);
  const Matrix v = sample_sphere_columns(n, k, rng);
  const Matrix w = sample_sphere_columns(n, k, rng);
  const Matrix d = kernels::four_point_differences(policy, f, x, v, w, delta);
  // Normalised by k^2 like the Stiefel estimator, so the k^2 terms are averaged.
  return make_estimate(symmetric_outer_sum(v, d, w, four_point_scale(n, k, delta)),
                       HessianMethod::spherical, k, delta, four_point_evals(k), &rng);
}

HessianEstimate hess_gaussian_stein(const Objective& f, const Vector& x, Index k, double delta,
                                    RandomSource& rng, ExecPolicy policy) {
  const Index n = f.dimension();
  check_inputs(n, x, delta);
  if (k < 1) throw ParameterError("k must be >= 1");
  const Index count = k * k;
  const Matrix v = sample_gaussian_matrix(n, count, rng);
  const double root_n = std::sqrt(static_cast<double>(n));
  const double f0 = f(x);
  const Vector s = kernels::second_differences(policy, f, x, f0, v, delta / root_n);

  const double scale = static_cast<double>(n) /
                       (2.0 * static_cast<double>(count) * delta * delta);
  double s_total = 0.0;
  for (Index i = 0; i < count; ++i) s_total += s[i];
  Matrix m = v * s.asDiagonal() * v.transpose();
  m.diagonal().array() -= s_total;
  m *= scale;
  Matrix h = 0.5 * (m + m.transpose());
  return make_estimate(std::move(h), HessianMethod::gaussian_stein, k, delta,
                       2 * static_cast<std::uint64_t>(count) + 1, &rng);
}

HessianEstimate hess_entrywise(const Objective& f, const Vector& x, double delta,
                               ExecPolicy policy) {
  const Index n = f.dimension();
  check_inputs(n, x, delta);
  const Matrix d = kernels::coordinate_four_point(policy, f, x, delta);
  const auto pairs = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n + 1) / 2;
  return make_estimate(d / (4.0 * delta * delta), HessianMethod::entrywise, n, delta, 4 * pairs,
                       nullptr);
}

}  // namespace zo
