// Finite-difference probes of higher derivatives of a black-box objective.

#include <array>
#include <cmath>
#include <vector>

#include "zo/bounds.hpp"
#include "zo/sampling.hpp"

namespace zo::bounds {

namespace {

struct Stencil {
  // weights for offsets -r..r and the power of h in the denominator
  std::vector<double> weights;
  double denominator_scale;
};

// Second-order accurate central stencils for the p-th derivative.
Stencil central_stencil(int order) {
  switch (order) {
    case 1: return {{-1, 0, 1}, 2.0};
    case 2: return {{1, -2, 1}, 1.0};
    case 3: return {{-1, 2, 0, -2, 1}, 2.0};
    case 4: return {{1, -4, 6, -4, 1}, 1.0};
    case 5: return {{-1, 4, -5, 0, 5, -4, 1}, 2.0};
    case 6: return {{1, -6, 15, -20, 15, -6, 1}, 1.0};
    default: throw ParameterError("directional_derivative supports orders 1..6");
  }
}

double laplacian(const Objective& f, Vector y, double h) {
  const double center = f(y);
  double sum = 0.0;
  for (Index j = 0; j < y.size(); ++j) {
    const double keep = y[j];
    y[j] = keep + h;
    const double plus = f(y);
    y[j] = keep - h;
    const double minus = f(y);
    y[j] = keep;
    sum += (plus - 2.0 * center) + minus;
  }
  return sum / (h * h);
}

}  // namespace

double directional_derivative(const Objective& f, const Vector& y, const Vector& u, int order,
                              double h) {
  if (!(h > 0.0)) throw ParameterError("directional_derivative needs h > 0");
  const Stencil s = central_stencil(order);
  const int radius = static_cast<int>(s.weights.size() / 2);
  double acc = 0.0;
  for (int m = -radius; m <= radius; ++m) {
    const double w = s.weights[static_cast<std::size_t>(m + radius)];
    if (w != 0.0) acc += w * f(y + (m * h) * u);
  }
  return acc / (s.denominator_scale * std::pow(h, order));
}

double estimate_lipschitz(const Objective& f, const Vector& x, int order,
                          const LipschitzProbe& probe, RandomSource& rng) {
  const Index n = f.dimension();
  if (x.size() != n) throw ParameterError("estimate_lipschitz: dimension mismatch");

  std::vector<Vector> candidates;
  for (Index i = 0; i < n; ++i) candidates.push_back(Vector::Unit(n, i));
  if (n <= 64) {
    const double r = 1.0 / std::sqrt(2.0);
    for (Index i = 0; i < n; ++i)
      for (Index j = i + 1; j < n; ++j) {
        Vector plus = Vector::Zero(n), minus = Vector::Zero(n);
        plus[i] = r, plus[j] = r;
        minus[i] = r, minus[j] = -r;
        candidates.push_back(plus);
        candidates.push_back(minus);
      }
  }
  for (int i = 0; i < probe.random_directions; ++i)
    candidates.push_back(sample_unit_sphere(n, rng));

  auto magnitude = [&](const Vector& y, const Vector& u) {
    return std::abs(directional_derivative(f, y, u, order, probe.h));
  };

  double best_overall = 0.0;
  for (int p = 0; p < std::max(1, probe.points); ++p) {
    Vector y = x;
    if (p > 0 && probe.radius > 0.0) {
      // uniform in the ball: direction times radius * U^{1/n}
      const double r = probe.radius * std::pow(rng.uniform(), 1.0 / static_cast<double>(n));
      y += r * sample_unit_sphere(n, rng);
    }
    Vector best_dir = candidates.front();
    double best = 0.0;
    for (const Vector& u : candidates) {
      const double m = magnitude(y, u);
      if (m > best) best = m, best_dir = u;
    }
    // local refinement around the best candidate
    double scale = 0.5;
    for (int iter = 0; iter < 120; ++iter) {
      Vector trial = best_dir + scale * sample_unit_sphere(n, rng);
      trial.normalize();
      const double m = magnitude(y, trial);
      if (m > best) best = m, best_dir = trial;
      else if (iter % 20 == 19) scale *= 0.5;
    }
    best_overall = std::max(best_overall, best);
    if (probe.radius <= 0.0) break;
  }
  return best_overall;
}

Vector third_derivative_contraction(const Objective& f, const Vector& x, double h) {
  // sum_j d_jji f = d_i (Laplacian f)
  const Index n = x.size();
  Vector out(n);
  Vector y = x;
  for (Index i = 0; i < n; ++i) {
    y[i] = x[i] + h;
    const double plus = laplacian(f, y, h);
    y[i] = x[i] - h;
    const double minus = laplacian(f, y, h);
    y[i] = x[i];
    out[i] = (plus - minus) / (2.0 * h);
  }
  return out;
}

Matrix fourth_derivative_contraction(const Objective& f, const Vector& x, double h) {
  // Ftilde = Hessian of the Laplacian, four-point stencil on each pair
  const Index n = x.size();
  Matrix out(n, n);
  Vector y = x;
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i <= j; ++i) {
      auto at = [&](double a, double b) {
        y[i] += a;
        y[j] += b;
        const double value = laplacian(f, y, h);
        y[i] = x[i];
        y[j] = x[j];
        return value;
      };
      out(i, j) = ((at(h, h) - at(-h, h)) - at(h, -h) + at(-h, -h)) / (4.0 * h * h);
      out(j, i) = out(i, j);
    }
  return out;
}

}  // namespace zo::bounds
