#include "fclab/verification.hpp"

#include "fclab/combinatorics.hpp"
#include "fclab/density.hpp"
#include "fclab/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace fclab {

double characteristic_series(int s, double xi, int terms) {
  if (terms < 1) throw std::invalid_argument("characteristic_series: terms must be >= 1");
  const long double neg_xi2 = -static_cast<long double>(xi) * xi;
  long double sum = 0.0L;
  long double power = 1.0L;       // (-xi^2)^k
  long double factorial = 1.0L;   // (2k)!
  for (int k = 0; k < terms; ++k) {
    if (k > 0) {
      power *= neg_xi2;
      factorial *= (2.0L * k - 1.0L) * (2.0L * k);
    }
    const long double m = static_cast<long double>(fuss_catalan(s, k).convert_to<double>());
    sum += m * power / factorial;
  }
  return static_cast<double>(sum);
}

HypergeometricSpec characteristic_pfq_spec(int s, double xi) {
  const BetaRatioTerm params = beta_ratio_parameters(s);
  HypergeometricSpec spec;
  for (const auto& a : params.upper) spec.upper.push_back(to_double(a));
  for (const auto& b : params.lower) spec.lower.push_back(to_double(b));
  spec.argument = -0.25 * to_double(params.edge) * xi * xi;
  return spec;
}

namespace {

double zero_f_one(double b, double z) {
  HypergeometricSpec spec;
  spec.lower = {b};
  spec.argument = z;
  return hypergeometric_pfq(spec, 400).value;
}

}  // namespace

double euler_integral_value(int s, double xi, int nodes_per_dim) {
  if (s < 2)
    throw std::invalid_argument("euler_integral_value: the representation degenerates at s = 1");
  const BetaWeightSpec weight = beta_weight_spec(s);
  const double edge = to_double(support_edge(s));
  const double b_last = 1.0 + 1.0 / s;

  std::vector<JacobiRule> rules;
  double scale = 1.0;  // 2^(1-p-q) map factors and the Beta normalizers
  for (const auto& [pa, qb] : weight.pairs) {
    const double p = to_double(pa);
    const double q = to_double(qb);
    rules.push_back(gauss_jacobi_rule(q - 1.0, p - 1.0, nodes_per_dim));
    scale *= std::pow(2.0, 1.0 - p - q);
  }
  scale /= weight.normalizer;

  // tensor recursion over dimensions, accumulating tau
  double total = 0.0;
  std::vector<int> index(static_cast<size_t>(s), 0);
  for (;;) {
    double w = 1.0, tau = 1.0;
    for (int j = 0; j < s; ++j) {
      const JacobiRule& rule = rules[static_cast<size_t>(j)];
      const int i = index[static_cast<size_t>(j)];
      w *= rule.weights[i];
      tau *= 0.5 * (1.0 + rule.nodes[i]);
    }
    total += w * zero_f_one(b_last, -0.25 * tau * edge * xi * xi);
    int j = 0;
    for (; j < s; ++j) {
      if (++index[static_cast<size_t>(j)] < nodes_per_dim) break;
      index[static_cast<size_t>(j)] = 0;
    }
    if (j == s) break;
  }
  return total * scale;
}

double pi_1_from_integral_formula(double x) {
  if (!(x > 0) || x >= 4.0) return 0.0;
  return std::sqrt(4.0 - x) / (beta_function(0.5, 1.5) * std::sqrt(x) * 4.0);
}

}  // namespace fclab
