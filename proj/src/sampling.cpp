#include "zo/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace zo {

namespace {

constexpr double kRelativeEigenFloor = 1e-12;
constexpr int kMaxResamples = 3;
// For k close to n the Gram matrix is badly conditioned and U (U^T U)^{-1/2}
// loses orthonormality to rounding. Newton-Schulz steps X <- X (3I - X^T X) / 2
// pull it back; X is its own polar factor, so in exact arithmetic the step is
// the identity and the distribution is untouched.
constexpr double kRefineThreshold = 1e-13;
constexpr int kMaxRefinements = 4;

double max_orthonormality_error(const Matrix& x) {
  Matrix gram = x.transpose() * x;
  gram.diagonal().array() -= 1.0;
  return gram.cwiseAbs().maxCoeff();
}

}  // namespace

OrthonormalFrame::OrthonormalFrame(Matrix columns, double tolerance)
    : columns_(std::move(columns)) {
  if (columns_.cols() < 1 || columns_.rows() < columns_.cols())
    throw ParameterError("OrthonormalFrame: need 1 <= k <= n");
  if (!columns_.allFinite()) throw ParameterError("OrthonormalFrame: non-finite entry");
  const double err = orthonormality_error();
  if (err > tolerance)
    throw ParameterError("OrthonormalFrame: columns not orthonormal (error " +
                         std::to_string(err) + ")");
}

double OrthonormalFrame::orthonormality_error() const {
  return max_orthonormality_error(columns_);
}

Vector SparseSignVector::dense() const {
  Vector out = Vector::Zero(n);
  for (std::size_t i = 0; i < support.size(); ++i) out[support[i]] = signs[i];
  return out;
}

Matrix gram_inverse_sqrt(const Matrix& gram) {
  if (gram.rows() != gram.cols() || gram.rows() == 0)
    throw ParameterError("gram_inverse_sqrt: matrix must be square and non-empty");
  const double scale = std::max(1.0, gram.cwiseAbs().maxCoeff());
  if ((gram - gram.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw ParameterError("gram_inverse_sqrt: matrix is not symmetric");

  Eigen::SelfAdjointEigenSolver<Matrix> eig(gram);
  if (eig.info() != Eigen::Success)
    throw SingularMatrixError("gram_inverse_sqrt: eigendecomposition failed");
  const Vector& lambda = eig.eigenvalues();  // ascending
  const double lambda_max = lambda[lambda.size() - 1];
  if (!(lambda_max > 0.0) || lambda[0] <= kRelativeEigenFloor * lambda_max)
    throw SingularMatrixError("gram_inverse_sqrt: matrix is numerically singular");

  const Matrix& q = eig.eigenvectors();
  return q * lambda.cwiseSqrt().cwiseInverse().asDiagonal() * q.transpose();
}

OrthonormalFrame sample_stiefel(Index n, Index k, RandomSource& rng) {
  if (k < 1 || k > n)
    throw ParameterError("sample_stiefel: need 1 <= k <= n (n=" + std::to_string(n) +
                         ", k=" + std::to_string(k) + ")");
  for (int attempt = 0; attempt <= kMaxResamples; ++attempt) {
    Matrix u = sample_gaussian_matrix(n, k, rng);
    Matrix frame;
    try {
      Matrix gram = u.transpose() * u;
      gram = 0.5 * (gram + gram.transpose());
      frame = u * gram_inverse_sqrt(gram);
      for (int pass = 0; pass < kMaxRefinements; ++pass) {
        Matrix residual = frame.transpose() * frame;
        residual.diagonal().array() -= 1.0;
        if (residual.cwiseAbs().maxCoeff() <= kRefineThreshold) break;
        frame -= 0.5 * (frame * residual);
      }
    } catch (const SingularMatrixError&) {
      continue;
    }
    return OrthonormalFrame(std::move(frame));
  }
  throw SamplingError("sample_stiefel: Gram matrix singular after " +
                      std::to_string(kMaxResamples) + " resamples");
}

Matrix sample_gaussian_matrix(Index n, Index count, RandomSource& rng) {
  Matrix u(n, count);
  for (Index j = 0; j < count; ++j)
    for (Index i = 0; i < n; ++i) u(i, j) = rng.normal();
  return u;
}

Vector sample_standard_gaussian(Index n, RandomSource& rng) {
  if (n < 1) throw ParameterError("sample_standard_gaussian: n must be >= 1");
  Vector v(n);
  for (Index i = 0; i < n; ++i) v[i] = rng.normal();
  return v;
}

Vector sample_unit_sphere(Index n, RandomSource& rng) {
  if (n < 1) throw ParameterError("sample_unit_sphere: n must be >= 1");
  for (;;) {
    Vector v = sample_standard_gaussian(n, rng);
    const double norm = v.norm();
    if (norm > 0.0) return v / norm;
  }
}

Matrix sample_sphere_columns(Index n, Index count, RandomSource& rng) {
  Matrix out(n, count);
  for (Index j = 0; j < count; ++j) out.col(j) = sample_unit_sphere(n, rng);
  return out;
}

SparseSignVector sample_sparse_rademacher(Index n, Index k, RandomSource& rng) {
  if (k < 1 || k > n) throw ParameterError("sample_sparse_rademacher: need 1 <= k <= n");
  // partial Fisher-Yates: the first k slots form a uniform k-subset
  std::vector<Index> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), Index{0});
  for (Index i = 0; i < k; ++i) {
    const auto j = i + static_cast<Index>(rng.below(static_cast<std::uint64_t>(n - i)));
    std::swap(pool[i], pool[j]);
  }
  SparseSignVector z;
  z.n = n;
  z.support.assign(pool.begin(), pool.begin() + k);
  std::sort(z.support.begin(), z.support.end());
  z.signs.resize(static_cast<std::size_t>(k));
  for (auto& s : z.signs) s = rng.sign();
  return z;
}

}  // namespace zo
