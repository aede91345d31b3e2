#pragma once

#include <vector>

#include "zo/random.hpp"
#include "zo/types.hpp"

namespace zo {

/// An n x k matrix with orthonormal columns, i.e. a point of St(n, k).
class OrthonormalFrame {
 public:
  /// Wraps `columns` after checking max|X^T X - I| <= tolerance.
  explicit OrthonormalFrame(Matrix columns, double tolerance = 1e-10);

  Index n() const { return columns_.rows(); }
  Index k() const { return columns_.cols(); }
  const Matrix& matrix() const { return columns_; }
  auto column(Index i) const { return columns_.col(i); }

  /// max_{i,j} |<v_i, v_j> - delta_ij|
  double orthonormality_error() const;

 private:
  Matrix columns_;
};

/// k-sparse Rademacher vector: k distinct support indices (sorted, 0-based),
/// each carrying a sign in {-1, +1}.
struct SparseSignVector {
  Index n = 0;
  std::vector<Index> support;
  std::vector<int> signs;

  Index k() const { return static_cast<Index>(support.size()); }
  Vector dense() const;
};

/// M^{-1/2} for a symmetric positive-definite M via its eigendecomposition.
/// Throws SingularMatrixError when lambda_min <= 1e-12 * lambda_max.
Matrix gram_inverse_sqrt(const Matrix& gram);

/// Uniform (Haar) frame on St(n, k): U (U^T U)^{-1/2} with U standard normal.
/// A numerically singular Gram matrix triggers up to 3 resamples.
OrthonormalFrame sample_stiefel(Index n, Index k, RandomSource& rng);

/// Uniform point on S^{n-1} (normalised standard Gaussian).
Vector sample_unit_sphere(Index n, RandomSource& rng);

Vector sample_standard_gaussian(Index n, RandomSource& rng);

/// n x count matrix of i.i.d. standard normal entries, filled column by column.
Matrix sample_gaussian_matrix(Index n, Index count, RandomSource& rng);

/// n x count matrix whose columns are i.i.d. uniform on S^{n-1}.
Matrix sample_sphere_columns(Index n, Index count, RandomSource& rng);

SparseSignVector sample_sparse_rademacher(Index n, Index k, RandomSource& rng);

}  // namespace zo
