#include "fclab/quadrature.hpp"

#include "fclab/special_functions.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace fclab {

namespace {

constexpr long double kPi = 3.14159265358979323846264338328L;

// P_n^(alpha,beta)(x) and P_{n-1} via the three-term recurrence. Extended
// precision: the clustered endpoint roots of the strongly singular weights
// (alpha near -1) otherwise cost too much accuracy in the weights.
struct JacobiPair {
  long double pn;
  long double pn1;
};

JacobiPair jacobi_poly(int n, long double alpha, long double beta, long double x) {
  long double p0 = 1.0L;
  if (n == 0) return {p0, 0.0L};
  long double p1 = 0.5L * (alpha - beta) + 0.5L * (alpha + beta + 2.0L) * x;
  for (int m = 2; m <= n; ++m) {
    const long double ab = alpha + beta;
    const long double a1 = 2.0L * m * (m + ab) * (2.0L * m + ab - 2.0L);
    const long double a2 = (2.0L * m + ab - 1.0L) * (alpha * alpha - beta * beta);
    const long double a3 = (2.0L * m + ab - 2.0L) * (2.0L * m + ab - 1.0L) * (2.0L * m + ab);
    const long double a4 = 2.0L * (m + alpha - 1.0L) * (m + beta - 1.0L) * (2.0L * m + ab);
    const long double p2 = ((a2 + a3 * x) * p1 - a4 * p0) / a1;
    p0 = p1;
    p1 = p2;
  }
  return {p1, p0};
}

// Derivative at x = cos(theta); 1 - x^2 is carried as sin^2(theta) so the
// endpoint clusters do not lose precision to cancellation.
long double jacobi_deriv(int n, long double alpha, long double beta, long double x,
                         long double sin_theta, const JacobiPair& p) {
  const long double ab = alpha + beta;
  return (n * (alpha - beta - (2.0L * n + ab) * x) * p.pn +
          2.0L * (n + alpha) * (n + beta) * p.pn1) /
         ((2.0L * n + ab) * sin_theta * sin_theta);
}

}  // namespace

JacobiRule gauss_jacobi_rule(double alpha, double beta, int n) {
  if (!(alpha > -1.0) || !(beta > -1.0))
    throw std::invalid_argument("gauss_jacobi_rule: exponents must be > -1");
  if (n < 1) throw std::invalid_argument("gauss_jacobi_rule: n must be >= 1");

  const long double al = alpha, be = beta;

  // Bracket the n simple roots in theta (x = cos theta) on a uniform theta
  // grid, refining until all are separated.
  std::vector<long double> th_lo(n), th_hi(n);
  int grid = 16 * n + 32;
  for (;; grid *= 2) {
    if (grid > (1 << 22))
      throw std::runtime_error("gauss_jacobi_rule: failed to bracket all nodes");
    int found = 0;
    long double tprev = 0.5L * kPi / grid;
    long double fprev = jacobi_poly(n, al, be, std::cos(tprev)).pn;
    for (int i = 1; i < grid; ++i) {
      const long double t = (i + 0.5L) * kPi / grid;
      const long double f = jacobi_poly(n, al, be, std::cos(t)).pn;
      if ((fprev < 0.0L) != (f < 0.0L) && found < n) {
        th_lo[found] = tprev;
        th_hi[found] = t;
        ++found;
      }
      tprev = t;
      fprev = f;
    }
    if (found == n) break;
  }

  JacobiRule rule;
  rule.alpha = alpha;
  rule.beta = beta;
  rule.nodes.resize(n);
  rule.weights.resize(n);

  const double log_norm = (alpha + beta) * std::log(2.0) + log_gamma(n + alpha) +
                          log_gamma(n + beta) - log_gamma(n + 1.0) -
                          log_gamma(n + alpha + beta + 1.0);
  const long double norm =
      std::exp(static_cast<long double>(log_norm)) * (2.0L * n + al + be);

  for (int i = 0; i < n; ++i) {
    long double a = th_lo[i], b = th_hi[i];
    long double fa = jacobi_poly(n, al, be, std::cos(a)).pn;
    long double theta = 0.5L * (a + b);
    bool converged = false;
    for (int it = 0; it < 200; ++it) {
      const long double x = std::cos(theta);
      const long double st = std::sin(theta);
      const JacobiPair p = jacobi_poly(n, al, be, x);
      if ((fa < 0.0L) != (p.pn < 0.0L))
        b = theta;
      else {
        a = theta;
        fa = p.pn;
      }
      const long double dp_dtheta = -st * jacobi_deriv(n, al, be, x, st, p);
      long double tnew = theta - p.pn / dp_dtheta;
      if (!(tnew > a) || !(tnew < b)) tnew = 0.5L * (a + b);  // bisection fallback
      const long double dt = std::abs(tnew - theta);
      theta = tnew;
      if (dt < 1e-18L) {
        converged = true;
        break;
      }
    }
    if (!converged) throw std::runtime_error("gauss_jacobi_rule: Newton iteration stalled");
    const long double x = std::cos(theta);
    const long double st = std::sin(theta);
    const JacobiPair p = jacobi_poly(n, al, be, x);
    const long double dp = jacobi_deriv(n, al, be, x, st, p);
    // theta ascending means x descending
    rule.nodes[n - 1 - i] = static_cast<double>(x);
    rule.weights[n - 1 - i] = static_cast<double>(norm / (dp * p.pn1));
  }

  for (int i = 0; i < n; ++i) {
    if (!(rule.weights[i] > 0.0))
      throw std::runtime_error("gauss_jacobi_rule: nonpositive weight");
    if (i > 0 && !(rule.nodes[i] > rule.nodes[i - 1]))
      throw std::runtime_error("gauss_jacobi_rule: nodes not increasing");
  }

  const double mass = std::exp((alpha + beta + 1.0) * std::log(2.0)) *
                      beta_function(alpha + 1.0, beta + 1.0);
  const double sum = rule.weights.sum();
  if (std::abs(sum - mass) > 1e-12 * mass)
    throw std::runtime_error("gauss_jacobi_rule: weight-sum residual exceeds 1e-12");

  return rule;
}

}  // namespace fclab
