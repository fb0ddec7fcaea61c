#pragma once

#include "fclab/special_functions.hpp"

namespace fclab {

/// Truncated even-moment series sum_k m_k (-xi^2)^k / (2k)!, the transform of
/// the symmetric density, folded in extended precision from exact moments.
double characteristic_series(int s, double xi, int terms = 21);

/// The same quantity as a single sFs+1 evaluation at -K xi^2 / 4; parameter
/// lists come from the exact moment-ratio identity.
HypergeometricSpec characteristic_pfq_spec(int s, double xi);

/// Product-Beta average of 0F1(1 + 1/s; -tau K xi^2 / 4) over the weight, by
/// full tensor Gauss-Jacobi with Beta-matched endpoints (s >= 2); equals the
/// sFs+1 value above when the weight parameterization is right.
double euler_integral_value(int s, double xi, int nodes_per_dim);

/// The s = 1 integral formula with the weight collapsed to a point mass at
/// t = 1: (K - x)^(1/2) / (B(1/2, 3/2) sqrt(x) K) on (0, 4), else 0.
double pi_1_from_integral_formula(double x);

}  // namespace fclab
