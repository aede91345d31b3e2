#include "zo/bounds.hpp"

#include <cmath>
#include <string>

namespace zo::bounds {

namespace {

double require(const std::optional<double>& value, const char* name) {
  if (!value) throw ParameterError(std::string("bound needs ") + name);
  if (!std::isfinite(*value) || *value < 0.0)
    throw ParameterError(std::string(name) + " must be finite and nonnegative");
  return *value;
}

void check_sizes(const BoundInputs& b) {
  if (b.n < 1 || b.k < 1 || b.k > b.n) throw ParameterError("bound inputs need n >= k >= 1");
  if (!(b.delta >= 0.0) || !std::isfinite(b.delta))
    throw ParameterError("bound inputs need a finite delta >= 0");
}

double log_floor(double argument) {
  return argument > 0.0 ? std::log10(argument) : kLogFloor;
}

}  // namespace

double grad_variance_bound(const BoundInputs& b) {
  check_sizes(b);
  const double l3 = require(b.L3, "L3");
  const double n = static_cast<double>(b.n);
  const double k = static_cast<double>(b.k);
  const double d2 = b.delta * b.delta;
  const double g = b.grad_norm;
  return (n / k - 1.0) * g * g + (l3 * d2 / 3.0) * (n * n / k - n) * g +
         l3 * l3 * n * n * d2 * d2 / (36.0 * k);
}

double grad_bias_bound_first_order(const BoundInputs& b) {
  check_sizes(b);
  const double n = static_cast<double>(b.n);
  return require(b.L1, "L1") * n * b.delta / (n + 1.0);
}

double grad_bias_bound_refined(const BoundInputs& b) {
  check_sizes(b);
  if (!b.F_contract) throw ParameterError("bound needs F_contract");
  const double l4 = require(b.L4, "L4");
  const double n = static_cast<double>(b.n);
  const double d = b.delta;
  return d * d / (2.0 * n) * b.F_contract->norm() + d * d * d * l4 * n / 24.0;
}

HessVarianceBound hess_variance_bound_split(const BoundInputs& b,
                                            HessRemainderConstants constants) {
  check_sizes(b);
  const double l4 = require(b.L4, "L4");
  const double l6 = require(b.L6, "L6");
  const double n = static_cast<double>(b.n);
  const double k = static_cast<double>(b.k);
  const double n2 = n * n;
  const double n4 = n2 * n2;
  const double k2 = k * k;
  const double d2 = b.delta * b.delta;
  HessVarianceBound out;
  out.explicit_terms = b.hess_fro * b.hess_fro * (n2 / k2 - 1.0) +
                       2.0 * d2 * l4 * b.hess_spec * (n4 / k2 - n2);
  out.remainder =
      (constants.c_a * l6 * n2 * b.hess_spec + constants.c_b * n4 * l4 * l4 / k2) * d2 * d2;
  return out;
}

double hess_variance_bound(const BoundInputs& b, HessRemainderConstants constants) {
  return hess_variance_bound_split(b, constants).total();
}

double hess_bias_bound_first_order(const BoundInputs& b) {
  check_sizes(b);
  const double n = static_cast<double>(b.n);
  return 2.0 * n * require(b.L2, "L2") * b.delta / (n + 1.0);
}

double hess_bias_bound_refined(const BoundInputs& b) {
  check_sizes(b);
  const double ftilde = require(b.Ftilde_spec, "Ftilde_spec");
  const double l5 = require(b.L5, "L5");
  const double n = static_cast<double>(b.n);
  const double d = b.delta;
  return d * d / (n + 2.0) * ftilde + 4.0 * d * d * d * l5 * n * n / 15.0;
}

double c_curve_grad(Index n_, Index k_, double delta, double grad_norm) {
  if (n_ < 1 || k_ < 1 || k_ > n_) throw ParameterError("c_curve_grad needs n >= k >= 1");
  const double n = static_cast<double>(n_);
  const double k = static_cast<double>(k_);
  const double d2 = delta * delta;
  return log_floor(grad_norm * grad_norm * (n / k - 1.0) + d2 * (n * n / k - n) * grad_norm +
                   d2 * d2 * n * n / k);
}

double c_curve_hess(Index n_, Index k_, double delta, double hess_fro, double hess_spec) {
  if (n_ < 1 || k_ < 1 || k_ > n_) throw ParameterError("c_curve_hess needs n >= k >= 1");
  const double n = static_cast<double>(n_);
  const double k = static_cast<double>(k_);
  const double n2 = n * n;
  const double k2 = k * k;
  const double d2 = delta * delta;
  return log_floor(hess_fro * hess_fro * (n2 / k2 - 1.0) +
                   2.0 * d2 * hess_spec * (n2 * n2 / k2 - n2) +
                   hess_spec * n2 * n2 * d2 * d2 / k2);
}

double sphere_even_moment(Index n, int p) {
  if (n < 1) throw ParameterError("sphere_even_moment needs n >= 1");
  if (p < 2 || p % 2 != 0) throw ParameterError("sphere_even_moment needs an even p >= 2");
  double value = 1.0;
  for (int j = 0; 2 * j < p; ++j)
    value *= static_cast<double>(p - 1 - 2 * j) / static_cast<double>(n + 2 * j);
  return value;
}

double sphere_cross_fourth_moment(Index n) {
  if (n < 2) throw ParameterError("sphere_cross_fourth_moment needs n >= 2");
  const double nn = static_cast<double>(n);
  return 1.0 / (nn * nn + 2.0 * nn);
}

}  // namespace zo::bounds
