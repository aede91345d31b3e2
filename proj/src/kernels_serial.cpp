// Serial reference kernels. The OpenMP versions in kernels_parallel.cpp must
// agree with these bit for bit.

#include "zo/kernels.hpp"

namespace zo::kernels::serial {

Vector central_differences(const Objective& f, const Vector& x, const Matrix& directions,
                           double step) {
  Vector out(directions.cols());
  for (Index i = 0; i < directions.cols(); ++i) {
    const Vector plus = x + step * directions.col(i);
    const Vector minus = x - step * directions.col(i);
    out[i] = f(plus) - f(minus);
  }
  return out;
}

Vector second_differences(const Objective& f, const Vector& x, double f0,
                          const Matrix& directions, double step) {
  Vector out(directions.cols());
  for (Index i = 0; i < directions.cols(); ++i) {
    const Vector plus = x + step * directions.col(i);
    const Vector minus = x - step * directions.col(i);
    out[i] = (f(plus) - 2.0 * f0) + f(minus);
  }
  return out;
}

Matrix four_point_differences(const Objective& f, const Vector& x, const Matrix& v,
                              const Matrix& w, double step) {
  Matrix out(v.cols(), w.cols());
  for (Index j = 0; j < w.cols(); ++j) {
    const Vector xw_plus = x + step * w.col(j);
    const Vector xw_minus = x - step * w.col(j);
    for (Index i = 0; i < v.cols(); ++i) {
      const Vector hv = step * v.col(i);
      out(i, j) = ((f(xw_plus + hv) - f(xw_plus - hv)) - f(xw_minus + hv)) + f(xw_minus - hv);
    }
  }
  return out;
}

Vector coordinate_differences(const Objective& f, const Vector& x, double step) {
  Vector out(x.size());
  Vector probe = x;
  for (Index i = 0; i < x.size(); ++i) {
    probe[i] = x[i] + step;
    const double plus = f(probe);
    probe[i] = x[i] - step;
    const double minus = f(probe);
    probe[i] = x[i];
    out[i] = plus - minus;
  }
  return out;
}

Matrix coordinate_four_point(const Objective& f, const Vector& x, double step) {
  const Index n = x.size();
  Matrix out(n, n);
  Vector probe = x;
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i <= j; ++i) {
      // probe = x + a e_i + b e_j, restored after each evaluation
      auto at = [&](double a, double b) {
        probe[i] += a;
        probe[j] += b;
        const double value = f(probe);
        probe[i] = x[i];
        probe[j] = x[j];
        return value;
      };
      out(i, j) = ((at(step, step) - at(-step, step)) - at(step, -step)) + at(-step, -step);
      out(j, i) = out(i, j);
    }
  }
  return out;
}

Vector comparison_signs(const ComparisonOracle& oracle, const Vector& x,
                        const Matrix& directions, double step) {
  Vector out(directions.cols());
  for (Index i = 0; i < directions.cols(); ++i) {
    const Vector moved = x + step * directions.col(i);
    out[i] = oracle.compare(moved, x);
  }
  return out;
}

}  // namespace zo::kernels::serial
