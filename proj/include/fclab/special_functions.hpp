#pragma once

#include <vector>

namespace fclab {

/// Generalized hypergeometric series pFq(upper; lower; argument).
struct HypergeometricSpec {
  std::vector<double> upper;
  std::vector<double> lower;  // none may be a nonpositive integer
  double argument = 0.0;
};

struct PfqResult {
  double value = 0.0;
  double tail_bound = 0.0;  // magnitude of the first dropped term
  int terms_used = 0;
};

/// log Gamma(x) for x > 0 by a fixed 13-term Lanczos rational approximation
/// (reflection below 1/2). Relative error ~1e-15 on (0, 200], absolute near
/// the zeros at x = 1, 2.
double log_gamma(double x);

/// Gamma(a) Gamma(b) / Gamma(a+b); a, b > 0.
double beta_function(double a, double b);

/// Truncated pFq series with the summation carried in extended precision.
/// Stops once the running term drops below `tolerance` in magnitude (both
/// absolutely and relative to the partial sum); throws std::runtime_error if
/// that has not happened within `max_terms`. Argument restricted to
/// |z| <= 50, max_terms to 500.
PfqResult hypergeometric_pfq(const HypergeometricSpec& spec, int max_terms,
                             double tolerance = 1e-12);

/// Bessel J_alpha(z) = (z/2)^alpha / Gamma(alpha+1) * 0F1(alpha+1; -z^2/4),
/// for alpha > -1/2 and 0 <= z <= 40.
double bessel_j(double alpha, double z);

}  // namespace fclab
