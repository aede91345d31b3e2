#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace zo {

using Index = Eigen::Index;
using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Selects the serial reference kernels or the OpenMP kernels. Both produce
/// bit-identical results; only the evaluation schedule differs.
enum class ExecPolicy { serial, parallel };

/// A precondition on an argument was violated (bad k, delta, shape, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The objective returned a non-finite value. The message names the point.
class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A matrix expected to be positive definite was numerically singular.
class SingularMatrixError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Frame sampling failed after exhausting its resample budget.
class SamplingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace zo
