#pragma once

// Test-only reference computations, kept independent of the library paths
// they are used to check.

#include <cmath>

#include "zo/objective.hpp"
#include "zo/random.hpp"
#include "zo/sampling.hpp"

namespace zo::test {

inline Vector central_difference_gradient(const Objective& f, const Vector& x, double h) {
  Vector g(x.size());
  for (Index i = 0; i < x.size(); ++i) {
    Vector p = x, m = x;
    p[i] += h;
    m[i] -= h;
    g[i] = (f(p) - f(m)) / (2 * h);
  }
  return g;
}

inline Matrix random_symmetric(Index n, RandomSource& rng, double scale = 1.0) {
  Matrix a(n, n);
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < n; ++i) a(i, j) = 2 * rng.uniform() - 1;
  return scale * 0.5 * (a + a.transpose());
}

inline Vector random_box(Index n, RandomSource& rng, double half_width = 1.0) {
  Vector v(n);
  for (Index i = 0; i < n; ++i) v[i] = half_width * (2 * rng.uniform() - 1);
  return v;
}

}  // namespace zo::test
