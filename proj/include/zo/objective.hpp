#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>

#include "zo/types.hpp"

namespace zo {

/// Black-box f : R^n -> R with optional exact derivatives used as ground truth.
///
/// Every call through operator() bumps an atomic evaluation counter. Copies
/// share the counter, so an estimator holding a copy is still accounted for.
/// A non-finite value raises EvaluationError naming the offending point.
class Objective {
 public:
  using EvalFn = std::function<double(const Vector&)>;
  using GradFn = std::function<Vector(const Vector&)>;
  using HessFn = std::function<Matrix(const Vector&)>;

  Objective(std::string name, Index dimension, EvalFn eval, GradFn gradient = {},
            HessFn hessian = {});

  const std::string& name() const { return name_; }
  Index dimension() const { return dimension_; }

  double operator()(const Vector& x) const;

  bool has_gradient() const { return static_cast<bool>(gradient_); }
  bool has_hessian() const { return static_cast<bool>(hessian_); }

  /// Exact derivatives; these do not touch the evaluation counter.
  Vector gradient(const Vector& x) const;
  Matrix hessian(const Vector& x) const;

  std::uint64_t evaluations() const { return counter_->load(std::memory_order_relaxed); }
  void reset_evaluations() const { counter_->store(0, std::memory_order_relaxed); }

 private:
  std::string name_;
  Index dimension_;
  EvalFn eval_;
  GradFn gradient_;
  HessFn hessian_;
  std::shared_ptr<std::atomic<std::uint64_t>> counter_;
};

/// sign(f(x) - f(y)) with its own call counter (one call = one comparison).
class ComparisonOracle {
 public:
  explicit ComparisonOracle(Objective objective);

  Index dimension() const { return objective_.dimension(); }
  const Objective& objective() const { return objective_; }

  /// Returns -1, 0 or +1; 0 only on an exact tie.
  int compare(const Vector& x, const Vector& y) const;

  std::uint64_t calls() const { return calls_->load(std::memory_order_relaxed); }
  void reset_calls() const { calls_->store(0, std::memory_order_relaxed); }

 private:
  Objective objective_;
  std::shared_ptr<std::atomic<std::uint64_t>> calls_;
};

/// f(x) = exp((x_1 - 1)(x_2 + 2)) + sum_j sin(x_j), with closed-form derivatives.
Objective make_exp_sine_function(Index n);

/// f(x) = c^T x.
Objective make_linear(const Vector& c);

/// f(x) = 1/2 x^T A x + b^T x. A must be symmetric within 1e-12.
Objective make_quadratic(const Matrix& a, const Vector& b);

/// f(x) = value everywhere; gradient and Hessian are zero.
Objective make_constant(Index n, double value);

/// Short human-readable description of a point for error messages.
std::string describe_point(const Vector& x);

}  // namespace zo
