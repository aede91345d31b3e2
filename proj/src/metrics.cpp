#include "zo/metrics.hpp"

#include <algorithm>
#include <cmath>

namespace zo {

double spectral_norm(const Matrix& m) {
  if (m.rows() != m.cols()) throw ParameterError("spectral_norm: matrix must be square");
  if (m.size() == 0) return 0.0;
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-10 * scale)
    throw ParameterError("spectral_norm: matrix is not symmetric");
  Eigen::SelfAdjointEigenSolver<Matrix> eig(m, Eigen::EigenvaluesOnly);
  return eig.eigenvalues().cwiseAbs().maxCoeff();
}

double spectral_norm_power_iteration(const Matrix& m, int iterations) {
  // Block power iteration on M^2 (PSD, so +lambda and -lambda do not cancel),
  // then Rayleigh-Ritz on the block. The block keeps near-tied |eigenvalues|
  // from stalling convergence.
  const Index n = m.rows();
  if (n == 0) return 0.0;
  const Index block = std::min<Index>(n, 4);
  Matrix q(n, block);
  for (Index j = 0; j < block; ++j)
    for (Index i = 0; i < n; ++i)
      q(i, j) = 1.0 + 1e-3 * static_cast<double>((i * (j + 3)) % 11) + (i == j ? 1.0 : 0.0);
  for (int it = 0; it < iterations; ++it) {
    const Matrix next = m * (m * q);
    if (next.norm() == 0.0) return 0.0;
    q = Eigen::HouseholderQR<Matrix>(next).householderQ() * Matrix::Identity(n, block);
  }
  const Matrix mq = m * q;
  const Matrix ritz = mq.transpose() * mq;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (ritz + ritz.transpose()),
                                               Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, solver.eigenvalues().maxCoeff()));
}

double cosine_similarity(const Vector& a, const Vector& b, bool* degenerate) {
  const double na = a.norm();
  const double nb = b.norm();
  const bool zero = na == 0.0 || nb == 0.0;
  if (degenerate) *degenerate = zero;
  if (zero) return 0.0;
  return a.dot(b) / (na * nb);
}

VectorErrors errors(const Vector& estimate, const Vector& truth) {
  if (estimate.size() != truth.size()) throw ParameterError("errors: shape mismatch");
  VectorErrors out;
  out.l2 = (estimate - truth).norm();
  out.cosine = cosine_similarity(estimate, truth, &out.cosine_degenerate);
  return out;
}

MatrixErrors errors(const Matrix& estimate, const Matrix& truth) {
  if (estimate.rows() != truth.rows() || estimate.cols() != truth.cols())
    throw ParameterError("errors: shape mismatch");
  const Matrix diff = estimate - truth;
  return {diff.norm(), spectral_norm(diff)};
}

void CompensatedSum::add(double value) {
  const double t = sum_ + value;
  if (std::abs(sum_) >= std::abs(value)) compensation_ += (sum_ - t) + value;
  else compensation_ += (value - t) + sum_;
  sum_ = t;
}

double pearson_correlation(const Vector& a, const Vector& b) {
  if (a.size() != b.size() || a.size() < 2)
    throw ParameterError("pearson_correlation needs two samples of equal size >= 2");
  const Vector da = a.array() - a.mean();
  const Vector db = b.array() - b.mean();
  const double denom = da.norm() * db.norm();
  if (denom == 0.0) throw ParameterError("pearson_correlation: constant sample");
  return da.dot(db) / denom;
}

}  // namespace zo
