#pragma once

#include "zo/types.hpp"

namespace zo {

/// max |eigenvalue| of a symmetric matrix. Rejects asymmetry beyond 1e-10
/// (relative to the largest entry).
double spectral_norm(const Matrix& m);

/// Block power iteration on M^2; slow reference used to cross-check spectral_norm.
double spectral_norm_power_iteration(const Matrix& m, int iterations = 500);

struct VectorErrors {
  double l2 = 0.0;
  double cosine = 0.0;
  /// Either vector has zero norm; cosine is reported as 0.
  bool cosine_degenerate = false;
};

struct MatrixErrors {
  double frobenius = 0.0;
  double spectral = 0.0;
};

double cosine_similarity(const Vector& a, const Vector& b, bool* degenerate = nullptr);

VectorErrors errors(const Vector& estimate, const Vector& truth);
MatrixErrors errors(const Matrix& estimate, const Matrix& truth);

/// Neumaier-compensated running sum; addition order is the caller's order.
class CompensatedSum {
 public:
  void add(double value);
  double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

/// Pearson correlation of two equally sized samples (n >= 2).
double pearson_correlation(const Vector& a, const Vector& b);

}  // namespace zo
