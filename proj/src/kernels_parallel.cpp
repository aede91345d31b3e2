#include "zo/kernels.hpp"

#include <omp.h>

#include <exception>
#include <limits>

namespace zo::kernels {

namespace {

// Exceptions cannot cross an OpenMP region. Each failing iteration records
// its index; the lowest index wins so the reported error does not depend on
// the schedule.
class FirstFailure {
 public:
  void record(Index index, std::exception_ptr error) {
#pragma omp critical(zo_kernel_failure)
    {
      if (index < index_) {
        index_ = index;
        error_ = std::move(error);
      }
    }
  }
  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  Index index_ = std::numeric_limits<Index>::max();
  std::exception_ptr error_;
};

template <class Body>
void parallel_for(Index count, Body&& body) {
  FirstFailure failure;
#pragma omp parallel for schedule(static)
  for (Index i = 0; i < count; ++i) {
    try {
      body(i);
    } catch (...) {
      failure.record(i, std::current_exception());
    }
  }
  failure.rethrow();
}

}  // namespace

namespace parallel {

int thread_count() { return omp_get_max_threads(); }

Vector central_differences(const Objective& f, const Vector& x, const Matrix& directions,
                           double step) {
  Vector out(directions.cols());
  parallel_for(directions.cols(), [&](Index i) {
    const Vector plus = x + step * directions.col(i);
    const Vector minus = x - step * directions.col(i);
    out[i] = f(plus) - f(minus);
  });
  return out;
}

Vector second_differences(const Objective& f, const Vector& x, double f0,
                          const Matrix& directions, double step) {
  Vector out(directions.cols());
  parallel_for(directions.cols(), [&](Index i) {
    const Vector plus = x + step * directions.col(i);
    const Vector minus = x - step * directions.col(i);
    out[i] = (f(plus) - 2.0 * f0) + f(minus);
  });
  return out;
}

Matrix four_point_differences(const Objective& f, const Vector& x, const Matrix& v,
                              const Matrix& w, double step) {
  const Index rows = v.cols();
  Matrix out(rows, w.cols());
  // one task per w column keeps the x +- h w_j points shared across i
  parallel_for(w.cols(), [&](Index j) {
    const Vector xw_plus = x + step * w.col(j);
    const Vector xw_minus = x - step * w.col(j);
    for (Index i = 0; i < rows; ++i) {
      const Vector hv = step * v.col(i);
      out(i, j) = ((f(xw_plus + hv) - f(xw_plus - hv)) - f(xw_minus + hv)) + f(xw_minus - hv);
    }
  });
  return out;
}

Vector coordinate_differences(const Objective& f, const Vector& x, double step) {
  Vector out(x.size());
  parallel_for(x.size(), [&](Index i) {
    Vector probe = x;
    probe[i] = x[i] + step;
    const double plus = f(probe);
    probe[i] = x[i] - step;
    const double minus = f(probe);
    out[i] = plus - minus;
  });
  return out;
}

Matrix coordinate_four_point(const Objective& f, const Vector& x, double step) {
  const Index n = x.size();
  Matrix out(n, n);
  parallel_for(n, [&](Index j) {
    Vector probe = x;
    for (Index i = 0; i <= j; ++i) {
      auto at = [&](double a, double b) {
        probe[i] += a;
        probe[j] += b;
        const double value = f(probe);
        probe[i] = x[i];
        probe[j] = x[j];
        return value;
      };
      out(i, j) = ((at(step, step) - at(-step, step)) - at(step, -step)) + at(-step, -step);
    }
  });
  out.triangularView<Eigen::StrictlyLower>() = out.transpose();
  return out;
}

Vector comparison_signs(const ComparisonOracle& oracle, const Vector& x,
                        const Matrix& directions, double step) {
  Vector out(directions.cols());
  parallel_for(directions.cols(), [&](Index i) {
    const Vector moved = x + step * directions.col(i);
    out[i] = oracle.compare(moved, x);
  });
  return out;
}

}  // namespace parallel

Vector central_differences(ExecPolicy policy, const Objective& f, const Vector& x,
                           const Matrix& directions, double step) {
  return policy == ExecPolicy::parallel ? parallel::central_differences(f, x, directions, step)
                                        : serial::central_differences(f, x, directions, step);
}

Vector second_differences(ExecPolicy policy, const Objective& f, const Vector& x, double f0,
                          const Matrix& directions, double step) {
  return policy == ExecPolicy::parallel
             ? parallel::second_differences(f, x, f0, directions, step)
             : serial::second_differences(f, x, f0, directions, step);
}

Matrix four_point_differences(ExecPolicy policy, const Objective& f, const Vector& x,
                              const Matrix& v, const Matrix& w, double step) {
  return policy == ExecPolicy::parallel ? parallel::four_point_differences(f, x, v, w, step)
                                        : serial::four_point_differences(f, x, v, w, step);
}

Vector coordinate_differences(ExecPolicy policy, const Objective& f, const Vector& x,
                              double step) {
  return policy == ExecPolicy::parallel ? parallel::coordinate_differences(f, x, step)
                                        : serial::coordinate_differences(f, x, step);
}

Matrix coordinate_four_point(ExecPolicy policy, const Objective& f, const Vector& x,
                             double step) {
  return policy == ExecPolicy::parallel ? parallel::coordinate_four_point(f, x, step)
                                        : serial::coordinate_four_point(f, x, step);
}

Vector comparison_signs(ExecPolicy policy, const ComparisonOracle& oracle, const Vector& x,
                        const Matrix& directions, double step) {
  return policy == ExecPolicy::parallel ? parallel::comparison_signs(oracle, x, directions, step)
                                        : serial::comparison_signs(oracle, x, directions, step);
}

}  // namespace zo::kernels
