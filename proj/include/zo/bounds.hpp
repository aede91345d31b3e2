#pragma once

#include <optional>

#include "zo/objective.hpp"
#include "zo/random.hpp"
#include "zo/types.hpp"

namespace zo::bounds {

/// Inputs to the closed-form variance and bias bounds. Norms are taken at the
/// estimation point x. L[p] is the Lipschitz constant of the (p-1)-th total
/// derivative, so ||d^p f|| <= L[p] everywhere.
struct BoundInputs {
  Index n = 1;
  Index k = 1;
  double delta = 0.0;
  double grad_norm = 0.0;
  double hess_spec = 0.0;
  double hess_fro = 0.0;
  std::optional<double> L1, L2, L3, L4, L5, L6;
  /// Components sum_j F_jji of the third derivative tensor F at x.
  std::optional<Vector> F_contract;
  /// Spectral norm of Ftilde_ij = sum_m [d^4 f(x)]_mmij.
  std::optional<double> Ftilde_spec;
};

/// (n/k - 1)||g||^2 + (L3 d^2 / 3)(n^2/k - n)||g|| + L3^2 n^2 d^4 / (36 k). Needs L3.
double grad_variance_bound(const BoundInputs& b);

/// L1 n delta / (n + 1). Needs L1.
double grad_bias_bound_first_order(const BoundInputs& b);

/// (delta^2 / (2n)) ||F_contract|| + delta^3 L4 n / 24. Needs F_contract and L4.
double grad_bias_bound_refined(const BoundInputs& b);

/// The fourth-order remainder of the Hessian variance bound is only known up
/// to constants; these scale its two pieces.
struct HessRemainderConstants {
  double c_a = 1.0;  // multiplies L6 n^2 ||H||
  double c_b = 1.0;  // multiplies n^4 L4^2 / k^2
};

struct HessVarianceBound {
  /// ||H||_F^2 (n^2/k^2 - 1) + 2 d^2 L4 ||H|| (n^4/k^2 - n^2)
  double explicit_terms = 0.0;
  /// (c_a L6 n^2 ||H|| + c_b n^4 L4^2 / k^2) d^4, constants assumed
  double remainder = 0.0;
  double total() const { return explicit_terms + remainder; }
};

/// Needs L4 and L6.
HessVarianceBound hess_variance_bound_split(const BoundInputs& b,
                                            HessRemainderConstants constants = {});
double hess_variance_bound(const BoundInputs& b, HessRemainderConstants constants = {});

/// 2 n L2 delta / (n + 1). Needs L2.
double hess_bias_bound_first_order(const BoundInputs& b);

/// (delta^2 / (n + 2)) ||Ftilde|| + 4 delta^3 L5 n^2 / 15. Needs Ftilde_spec and L5.
double hess_bias_bound_refined(const BoundInputs& b);

/// Value returned by the c-curves when their argument is not positive.
inline constexpr double kLogFloor = -300.0;

/// lg(||g||^2 (n/k - 1) + d^2 (n^2/k - n) ||g|| + d^4 n^2 / k), constants dropped.
double c_curve_grad(Index n, Index k, double delta, double grad_norm);

/// lg(||H||_F^2 (n^2/k^2 - 1) + 2 d^2 ||H|| (n^4/k^2 - n^2) + ||H|| n^4 d^4 / k^2).
double c_curve_hess(Index n, Index k, double delta, double hess_fro, double hess_spec);

/// E[v_i^p] for v uniform on S^{n-1}, p even: (p-1)!! / (n (n+2) ... (n+p-2)).
double sphere_even_moment(Index n, int p);

/// E[v_i^2 v_j^2], i != j: 1 / (n^2 + 2n).
double sphere_cross_fourth_moment(Index n);

// Derivative probes. Nested central differences of the black box; used to
// supply smoothness constants and tensor contractions the objective does not
// expose.

/// d^p f(y)[u, ..., u] by the order-p central stencil with step h.
double directional_derivative(const Objective& f, const Vector& y, const Vector& u, int order,
                              double h);

struct LipschitzProbe {
  double radius = 0.0;     // points sampled in the ball of this radius around x
  int points = 32;
  int random_directions = 64;
  double h = 1e-2;         // finite-difference step of the stencil
};

/// Estimates max |d^p f(y)[u,...,u]| over sampled points y near x and unit
/// directions u (canonical axes, their pairwise sums, and random draws). For
/// symmetric tensors this is the spectral norm, so the result estimates L_p
/// restricted to the ball. It is a sampled maximum, not a certified bound.
double estimate_lipschitz(const Objective& f, const Vector& x, int order,
                          const LipschitzProbe& probe, RandomSource& rng);

/// sum_j d^3 f(x)[e_j, e_j, e_i] for every i, by nested central differences.
Vector third_derivative_contraction(const Objective& f, const Vector& x, double h = 1e-3);

/// Ftilde_ij = sum_m d^4 f(x)[e_m, e_m, e_i, e_j] by nested central differences.
Matrix fourth_derivative_contraction(const Objective& f, const Vector& x, double h = 1e-2);

}  // namespace zo::bounds
