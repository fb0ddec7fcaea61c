#pragma once

#include <Eigen/Core>

namespace fclab {

/// Gauss-Jacobi rule for weight (1-u)^alpha (1+u)^beta on [-1, 1].
struct JacobiRule {
  double alpha = 0.0;
  double beta = 0.0;
  Eigen::ArrayXd nodes;    // strictly increasing, inside (-1, 1)
  Eigen::ArrayXd weights;  // all positive
};

/// n-point rule, exact for polynomials of degree <= 2n-1 against the weight.
/// Nodes by safeguarded Newton on the three-term recurrence (Chebyshev-grid
/// bracketing, bisection fallback); the weight sum is checked against
/// 2^(alpha+beta+1) B(alpha+1, beta+1) to 1e-12 before returning.
JacobiRule gauss_jacobi_rule(double alpha, double beta, int n);

}  // namespace fclab
