#pragma once

// Evaluation kernels shared by the estimators. Every kernel writes each
// function difference into its own output slot, so the serial reference and
// the OpenMP version return bit-identical results regardless of scheduling.

#include "zo/objective.hpp"
#include "zo/types.hpp"

namespace zo::kernels {

namespace serial {

/// out_i = f(x + h d_i) - f(x - h d_i) for each column d_i of `directions`.
Vector central_differences(const Objective& f, const Vector& x, const Matrix& directions,
                           double step);

/// out_i = f(x + h d_i) - 2 f0 + f(x - h d_i).
Vector second_differences(const Objective& f, const Vector& x, double f0,
                          const Matrix& directions, double step);

/// out_ij = f(x+hv_i+hw_j) - f(x-hv_i+hw_j) - f(x+hv_i-hw_j) + f(x-hv_i-hw_j).
Matrix four_point_differences(const Objective& f, const Vector& x, const Matrix& v,
                              const Matrix& w, double step);

/// out_i = f(x + h e_i) - f(x - h e_i).
Vector coordinate_differences(const Objective& f, const Vector& x, double step);

/// Four-point stencil on (e_i, e_j), upper triangle computed and mirrored.
Matrix coordinate_four_point(const Objective& f, const Vector& x, double step);

/// out_i = compare(x + h d_i, x).
Vector comparison_signs(const ComparisonOracle& oracle, const Vector& x,
                        const Matrix& directions, double step);

}  // namespace serial

namespace parallel {

Vector central_differences(const Objective& f, const Vector& x, const Matrix& directions,
                           double step);
Vector second_differences(const Objective& f, const Vector& x, double f0,
                          const Matrix& directions, double step);
Matrix four_point_differences(const Objective& f, const Vector& x, const Matrix& v,
                              const Matrix& w, double step);
Vector coordinate_differences(const Objective& f, const Vector& x, double step);
Matrix coordinate_four_point(const Objective& f, const Vector& x, double step);
Vector comparison_signs(const ComparisonOracle& oracle, const Vector& x,
                        const Matrix& directions, double step);

/// Number of OpenMP threads the parallel kernels will use.
int thread_count();

}  // namespace parallel

// Policy dispatch.

Vector central_differences(ExecPolicy policy, const Objective& f, const Vector& x,
                           const Matrix& directions, double step);
Vector second_differences(ExecPolicy policy, const Objective& f, const Vector& x, double f0,
                          const Matrix& directions, double step);
Matrix four_point_differences(ExecPolicy policy, const Objective& f, const Vector& x,
                              const Matrix& v, const Matrix& w, double step);
Vector coordinate_differences(ExecPolicy policy, const Objective& f, const Vector& x,
                              double step);
Matrix coordinate_four_point(ExecPolicy policy, const Objective& f, const Vector& x,
                             double step);
Vector comparison_signs(ExecPolicy policy, const ComparisonOracle& oracle, const Vector& x,
                        const Matrix& directions, double step);

}  // namespace zo::kernels
