#include <algorithm>
#include <cmath>

#include "zo/gradient.hpp"

namespace zo {

namespace {

Vector soft_threshold(const Vector& c, double level) {
  return c.unaryExpr([level](double v) {
    const double mag = std::abs(v) - level;
    return mag > 0.0 ? std::copysign(mag, v) : 0.0;
  });
}

// ||soft(c, level)||_1 / ||soft(c, level)||_2, nonincreasing in level
double l1_l2_ratio(const Vector& c, double level) {
  const Vector h = soft_threshold(c, level);
  return h.lpNorm<1>() / h.norm();
}

}  // namespace

Vector l1_l2_linear_max(const Vector& c, double sparsity) {
  if (!(sparsity > 0.0)) throw ParameterError("l1_l2_linear_max: sparsity must be positive");
  const Index n = c.size();
  const double cmax = n ? c.cwiseAbs().maxCoeff() : 0.0;
  if (n == 0 || cmax == 0.0) return Vector::Zero(n);

  const Vector unit = c / c.norm();
  const double budget = std::sqrt(sparsity);
  if (std::isinf(budget) || unit.lpNorm<1>() <= budget) return unit;

  // The smallest reachable l1/l2 ratio is sqrt(m), m = #coordinates tied at
  // max |c_i|. Below that the l2 ball is slack.
  const auto ties = (c.cwiseAbs().array() == cmax).count();
  if (budget <= std::sqrt(static_cast<double>(ties))) {
    Vector g = Vector::Zero(n);
    const double share = budget / static_cast<double>(ties);
    for (Index i = 0; i < n; ++i)
      if (std::abs(c[i]) == cmax) g[i] = std::copysign(share, c[i]);
    return g;
  }

  // ratio(lo) > budget >= ratio(hi); shrink until the slack is below 1e-12
  double lo = 0.0;
  double hi = cmax;
  for (int iter = 0; iter < 200 && hi - lo > 0.0; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (l1_l2_ratio(c, mid) > budget) lo = mid;
    else hi = mid;
    if (budget - l1_l2_ratio(c, hi) <= 1e-12) break;
  }
  const Vector h = soft_threshold(c, hi);
  const double norm = h.norm();
  if (norm == 0.0) return unit;  // unreachable for budget > sqrt(ties)
  return h / norm;
}

}  // namespace zo
