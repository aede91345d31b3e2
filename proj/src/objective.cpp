#include "zo/objective.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace zo {

Objective::Objective(std::string name, Index dimension, EvalFn eval, GradFn gradient,
                     HessFn hessian)
    : name_(std::move(name)),
      dimension_(dimension),
      eval_(std::move(eval)),
      gradient_(std::move(gradient)),
      hessian_(std::move(hessian)),
      counter_(std::make_shared<std::atomic<std::uint64_t>>(0)) {
  if (dimension_ < 1) throw ParameterError("Objective: dimension must be >= 1");
  if (!eval_) throw ParameterError("Objective: missing evaluation function");
}

double Objective::operator()(const Vector& x) const {
  if (x.size() != dimension_)
    throw ParameterError("Objective '" + name_ + "': point has dimension " +
                         std::to_string(x.size()) + ", expected " +
                         std::to_string(dimension_));
  counter_->fetch_add(1, std::memory_order_relaxed);
  const double value = eval_(x);
  if (!std::isfinite(value))
    throw EvaluationError("Objective '" + name_ + "' returned a non-finite value at " +
                          describe_point(x));
  return value;
}

Vector Objective::gradient(const Vector& x) const {
  if (!gradient_) throw ParameterError("Objective '" + name_ + "' has no exact gradient");
  return gradient_(x);
}

Matrix Objective::hessian(const Vector& x) const {
  if (!hessian_) throw ParameterError("Objective '" + name_ + "' has no exact Hessian");
  return hessian_(x);
}

ComparisonOracle::ComparisonOracle(Objective objective)
    : objective_(std::move(objective)),
      calls_(std::make_shared<std::atomic<std::uint64_t>>(0)) {}

int ComparisonOracle::compare(const Vector& x, const Vector& y) const {
  calls_->fetch_add(1, std::memory_order_relaxed);
  const double fx = objective_(x);
  const double fy = objective_(y);
  return (fx > fy) - (fx < fy);
}

Objective make_exp_sine_function(Index n) {
  if (n < 2) throw ParameterError("exp-sine function needs n >= 2");
  auto eval = [](const Vector& x) {
    return std::exp((x[0] - 1.0) * (x[1] + 2.0)) + x.array().sin().sum();
  };
  auto gradient = [](const Vector& x) {
    const double e = std::exp((x[0] - 1.0) * (x[1] + 2.0));
    Vector g = x.array().cos().matrix();
    g[0] += e * (x[1] + 2.0);
    g[1] += e * (x[0] - 1.0);
    return g;
  };
  auto hessian = [](const Vector& x) {
    const double e = std::exp((x[0] - 1.0) * (x[1] + 2.0));
    const double a = x[1] + 2.0;  // d/dx1 of the exponent
    const double b = x[0] - 1.0;  // d/dx2 of the exponent
    Matrix h = Matrix::Zero(x.size(), x.size());
    h.diagonal() = -x.array().sin().matrix();
    h(0, 0) += e * a * a;
    h(1, 1) += e * b * b;
    h(0, 1) += e * (a * b + 1.0);
    h(1, 0) = h(0, 1);
    return h;
  };
  return Objective("exp-sine", n, eval, gradient, hessian);
}

Objective make_linear(const Vector& c) {
  if (!c.allFinite()) throw ParameterError("make_linear: coefficients must be finite");
  const Index n = c.size();
  return Objective(
      "linear", n, [c](const Vector& x) { return c.dot(x); },
      [c](const Vector&) { return c; },
      [n](const Vector&) { return Matrix::Zero(n, n).eval(); });
}

Objective make_quadratic(const Matrix& a, const Vector& b) {
  if (a.rows() != a.cols() || a.rows() != b.size())
    throw ParameterError("make_quadratic: A must be n x n and b of length n");
  if (!a.allFinite() || !b.allFinite())
    throw ParameterError("make_quadratic: coefficients must be finite");
  if ((a - a.transpose()).cwiseAbs().maxCoeff() > 1e-12)
    throw ParameterError("make_quadratic: A must be symmetric");
  return Objective(
      "quadratic", a.rows(),
      [a, b](const Vector& x) { return 0.5 * x.dot(a * x) + b.dot(x); },
      [a, b](const Vector& x) { return (a * x + b).eval(); },
      [a](const Vector&) { return a; });
}

Objective make_constant(Index n, double value) {
  return Objective(
      "constant", n, [value](const Vector&) { return value; },
      [n](const Vector&) { return Vector::Zero(n).eval(); },
      [n](const Vector&) { return Matrix::Zero(n, n).eval(); });
}

std::string describe_point(const Vector& x) {
  std::ostringstream out;
  out.precision(17);
  out << "x = (";
  const Index shown = std::min<Index>(x.size(), 6);
  for (Index i = 0; i < shown; ++i) out << (i ? ", " : "") << x[i];
  if (shown < x.size()) out << ", ... [" << x.size() << " entries]";
  out << ")";
  return out.str();
}

}  // namespace zo
