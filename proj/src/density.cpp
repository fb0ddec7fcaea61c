#include "fclab/density.hpp"

#include "fclab/combinatorics.hpp"
#include "fclab/parallel.hpp"
#include "fclab/quadrature.hpp"
#include "fclab/rng.hpp"
#include "fclab/sampling.hpp"
#include "fclab/special_functions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace fclab {

namespace {
constexpr double kPi = 3.14159265358979323846;

// (1 - e^{-z}) / z, stable down to z -> 0+.
double one_minus_exp_over(double z) { return -std::expm1(-z) / z; }
}  // namespace

const char* to_string(DensityMethod method) {
  switch (method) {
    case DensityMethod::kMonteCarlo: return "monte_carlo";
    case DensityMethod::kQuadrature: return "quadrature";
    case DensityMethod::kClosedForm: return "closed_form";
  }
  return "unknown";
}

SupportConstant support_constant(int s) { return {s, support_edge(s)}; }

BetaWeightSpec beta_weight_spec(int s) {
  if (s < 1) throw std::invalid_argument("beta_weight_spec: s must be >= 1");
  BetaWeightSpec spec;
  spec.s = s;
  if (s == 1) {
    spec.degenerate = true;  // point mass at t = 1
    return spec;
  }
  spec.pairs.emplace_back(Rational(1, s + 1), Rational(s - 1, 2 * s + 2));
  for (int j = 2; j <= s; ++j)
    spec.pairs.emplace_back(Rational(j, s + 1), Rational(j, s * (s + 1)));
  spec.normalizer = 1.0;
  for (const auto& [a, b] : spec.pairs)
    spec.normalizer *= beta_function(to_double(a), to_double(b));
  return spec;
}

McEstimate pi_s_monte_carlo(int s, double x, std::int64_t n_samples, std::uint64_t seed) {
  if (s < 2) throw std::invalid_argument("pi_s_monte_carlo: s must be >= 2 (s = 1 is closed form)");
  if (!(x > 0)) throw std::invalid_argument("pi_s_monte_carlo: x must be > 0");
  if (n_samples < 1) throw std::invalid_argument("pi_s_monte_carlo: n_samples must be >= 1");

  const double edge = to_double(support_edge(s));
  if (x > edge) return {0.0, 0.0};

  const BetaWeightSpec spec = beta_weight_spec(s);
  std::vector<double> shape_a, shape_b;
  for (const auto& [a, b] : spec.pairs) {
    shape_a.push_back(to_double(a));
    shape_b.push_back(to_double(b));
  }

  const double nu = 1.0 / s - 0.5;
  const double inv_s = 1.0 / s;
  const double inv_sqrt_x = 1.0 / std::sqrt(x);

  SplitMix64 rng(seed);
  double sum = 0.0, sum_sq = 0.0;
  for (std::int64_t i = 0; i < n_samples; ++i) {
    double tau = 1.0;
    for (int j = 0; j < s; ++j) tau *= sample_beta(shape_a[j], shape_b[j], rng);
    const double tk = tau * edge;
    double g = 0.0;
    if (tk >= x) g = std::pow(tk - x, nu) * inv_sqrt_x / std::pow(tk, inv_s);
    sum += g;
    sum_sq += g * g;
  }
  const double n = static_cast<double>(n_samples);
  const double mean = sum / n;
  double sem = 0.0;
  if (n_samples >= 2) {
    const double var = std::max(0.0, (sum_sq - n * mean * mean) / (n - 1.0));
    sem = std::sqrt(var / n);
  }
  const double norm = beta_function(0.5, 0.5 + 1.0 / s);
  return {mean / norm, sem / norm};
}

namespace {

// Nested evaluation of the s-dimensional integral. Level j integrates t_j
// over its active range [c / prod_outer, 1] through the geometric map
// t = L^{(1-u)/2}; the Jacobi weight of level j absorbs (1-t)^{q_j - 1} at
// the top end and the accumulated kink exponent delta_{j-1} at the bottom
// end, so the sampled factor stays smooth for any L in (0, 1).
class NestedQuadrature {
 public:
  NestedQuadrature(int s, int nodes) : s_(s) {
    const double nu = 1.0 / s - 0.5;
    p_.resize(s + 1);
    q_.resize(s + 1);
    delta_.assign(s + 1, 0.0);
    delta_[0] = nu;
    for (int j = 1; j <= s; ++j) {
      p_[j] = (j == 1) ? 1.0 / (s + 1) : static_cast<double>(j) / (s + 1);
      q_[j] = (j == 1) ? (s - 1.0) / (2.0 * s + 2.0)
                       : static_cast<double>(j) / (static_cast<double>(s) * (s + 1));
      delta_[j] = delta_[j - 1] + q_[j];
      rules_.push_back(gauss_jacobi_rule(q_[j] - 1.0, delta_[j - 1], nodes));
    }
  }

  // Unnormalized integral value for target point x with support edge K.
  double integrate(double x, double edge) {
    c_ = x / edge;
    edge_ = edge;
    return eval(s_, 1.0);
  }

 private:
  double eval(int j, double prod_outer) const {
    const JacobiRule& rule = rules_[static_cast<size_t>(j) - 1];
    const double lower = c_ / prod_outer;
    const double mu = -0.5 * std::log(lower);
    const int n = static_cast<int>(rule.nodes.size());
    double acc = 0.0;
    for (int k = 0; k < n; ++k) {
      const double u = rule.nodes[k];
      const double z_up = mu * (1.0 - u);
      const double z_lo = mu * (1.0 + u);
      const double t = std::exp(-z_up);
      const double phi_up = one_minus_exp_over(z_up);
      const double phi_lo = one_minus_exp_over(z_lo);
      double g;
      if (j == 1) {
        const double nu = delta_[0];
        // the remaining integrand power is nu - 1/s = -1/2 for every s
        g = std::pow(t, p_[1]) * std::pow(phi_up, q_[1] - 1.0) * std::pow(phi_lo, nu) /
            std::sqrt(edge_ * prod_outer * t);
      } else {
        const double inner = eval(j - 1, prod_outer * t);
        g = std::pow(t, p_[j]) * std::pow(phi_up, q_[j] - 1.0) * inner *
            std::pow(z_lo, -delta_[j - 1]);
      }
      acc += rule.weights[k] * g;
    }
    return std::pow(mu, delta_[j]) * acc;
  }

  int s_;
  std::vector<double> p_, q_, delta_;
  std::vector<JacobiRule> rules_;
  double c_ = 0.0;
  double edge_ = 0.0;
};

}  // namespace

QuadEstimate pi_s_quadrature(int s, double x, int nodes_per_dim) {
  if (s < 2) throw std::invalid_argument("pi_s_quadrature: s = 1 is degenerate (closed form)");
  if (s > 5) throw std::invalid_argument("pi_s_quadrature: s > 5 exceeds the cost guard");
  if (nodes_per_dim < 2) throw std::invalid_argument("pi_s_quadrature: need >= 2 nodes per dim");
  const double edge = to_double(support_edge(s));
  if (!(x > 0) || !(x < edge))
    throw std::invalid_argument("pi_s_quadrature: x must lie inside (0, K)");

  NestedQuadrature fine(s, nodes_per_dim);
  NestedQuadrature coarse(s, std::max(2, nodes_per_dim / 2));
  const double raw_fine = fine.integrate(x, edge);
  const double raw_coarse = coarse.integrate(x, edge);

  const double norm =
      beta_weight_spec(s).normalizer * beta_function(0.5, 0.5 + 1.0 / s) * std::sqrt(x);
  const double value = raw_fine / norm;
  return {value, std::abs(raw_fine - raw_coarse) / norm};
}

double pi_1_closed_form(double x) {
  if (!(x > 0) || x > 4.0) return 0.0;
  return std::sqrt(4.0 / x - 1.0) / (2.0 * kPi);
}

MarchenkoPasturValue marchenko_pastur(double t, double x) {
  if (!(t > 0)) throw std::invalid_argument("marchenko_pastur: t must be > 0");
  MarchenkoPasturValue out;
  out.atom_weight_at_zero = std::max(1.0 - t, 0.0);
  const double root = std::sqrt(t);
  const double lo = (1.0 - root) * (1.0 - root);
  const double hi = (1.0 + root) * (1.0 + root);
  if (x > 0 && x >= lo && x <= hi) {
    const double disc = std::max(0.0, 4.0 * t - (x - 1.0 - t) * (x - 1.0 - t));
    out.continuous_part = std::sqrt(disc) / (2.0 * kPi * x);
  }
  return out;
}

double pi_2_closed_form(double x) {
  const double edge = 6.75;
  if (!(x > 0) || x > edge) return 0.0;
  const double root = std::sqrt(std::max(0.0, 81.0 - 12.0 * x));
  const double inner = std::cbrt(27.0 + 3.0 * root);
  const double cbrt2 = std::cbrt(2.0);
  const double cbrt_x = std::cbrt(x);
  const double numerator = cbrt2 * inner * inner - 6.0 * cbrt_x;
  const double value =
      cbrt2 * std::sqrt(3.0) / (12.0 * kPi) * numerator / (cbrt_x * cbrt_x * inner);
  return std::max(value, 0.0);
}

double sigma_s(int s, double x, DensityMethod method, std::int64_t resolution,
               std::uint64_t seed) {
  if (s < 1) throw std::invalid_argument("sigma_s: s must be >= 1");
  if (s == 1) {
    // semicircle on [-2, 2]
    if (std::abs(x) > 2.0) return 0.0;
    return std::sqrt(4.0 - x * x) / (2.0 * kPi);
  }
  const double edge = to_double(support_edge(s));
  const double y = x * x;
  if (y >= edge) return 0.0;
  if (x == 0.0) return std::numeric_limits<double>::infinity();
  const double ax = std::abs(x);
  switch (method) {
    case DensityMethod::kClosedForm:
      if (s == 2) return ax * pi_2_closed_form(y);
      throw std::invalid_argument("sigma_s: no closed form for s > 2");
    case DensityMethod::kQuadrature:
      return ax * pi_s_quadrature(s, y, static_cast<int>(resolution)).value;
    case DensityMethod::kMonteCarlo:
      return ax * pi_s_monte_carlo(s, y, resolution, seed).value;
  }
  throw std::invalid_argument("sigma_s: unknown method");
}

double grid_warp(double w) {
  const double w3 = w * w * w;
  return w3 * w3 * (3.0 - 2.0 * w3);
}

double grid_unwarp(double fraction_of_edge) {
  if (!(fraction_of_edge >= 0.0) || !(fraction_of_edge <= 1.0))
    throw std::invalid_argument("grid_unwarp: fraction must lie in [0, 1]");
  if (fraction_of_edge == 0.0) return 0.0;
  if (fraction_of_edge == 1.0) return 1.0;
  double lo = 0.0, hi = 1.0, w = std::pow(fraction_of_edge / 3.0, 1.0 / 6.0);
  for (int it = 0; it < 100; ++it) {
    const double f = grid_warp(w) - fraction_of_edge;
    (f > 0 ? hi : lo) = w;
    const double w2 = w * w, w5 = w2 * w2 * w;
    const double df = 18.0 * w5 * (1.0 - w * w2);
    double next = w - f / df;
    if (!(next > lo) || !(next < hi)) next = 0.5 * (lo + hi);
    const double dw = std::abs(next - w);
    w = next;
    if (dw < 1e-16) break;
  }
  return w;
}

Eigen::ArrayXd clustered_grid(int s, int n_points, double w_min, double x_max_fraction) {
  if (n_points < 2) throw std::invalid_argument("clustered_grid: need >= 2 points");
  if (!(w_min > 0) || !(w_min < 1)) throw std::invalid_argument("clustered_grid: w_min in (0,1)");
  const double edge = to_double(support_edge(s));
  const double w_max = grid_unwarp(x_max_fraction);
  Eigen::ArrayXd x(n_points);
  for (int i = 0; i < n_points; ++i) {
    const double w = w_min + (w_max - w_min) * i / (n_points - 1.0);
    x[i] = edge * grid_warp(w);
  }
  return x;
}

DensityEstimate density_grid(int s, const Eigen::ArrayXd& x_grid, const GridConfig& config) {
  if (s < 1) throw std::invalid_argument("density_grid: s must be >= 1");
  const int n = static_cast<int>(x_grid.size());
  if (n == 0) throw std::invalid_argument("density_grid: empty grid");
  const double edge = to_double(support_edge(s));
  const double floor = config.floor_fraction * edge;
  for (int i = 0; i < n; ++i) {
    if (!(x_grid[i] > 0)) throw std::invalid_argument("density_grid: grid must be positive");
    if (i > 0 && x_grid[i] < x_grid[i - 1])
      throw std::invalid_argument("density_grid: grid must be sorted");
    if (x_grid[i] < floor * (1.0 - 1e-9))
      throw std::invalid_argument(
          "density_grid: grid point below the evaluation floor (the density is integrable "
          "but unbounded near zero); lower floor_fraction to evaluate there");
  }
  if (config.method == DensityMethod::kClosedForm && s > 2)
    throw std::invalid_argument("density_grid: closed form only for s in {1, 2}");

  DensityEstimate est;
  est.s = s;
  est.method = (s == 1) ? DensityMethod::kClosedForm : config.method;
  est.x = x_grid;
  est.value = Eigen::ArrayXd::Zero(n);
  est.error = Eigen::ArrayXd::Zero(n);
  est.resolution = config.resolution;
  est.seed = config.seed;

  if (est.method == DensityMethod::kClosedForm) {
    for (int i = 0; i < n; ++i)
      est.value[i] = (s == 1) ? pi_1_closed_form(x_grid[i]) : pi_2_closed_form(x_grid[i]);
    return est;
  }

  parallel_for(static_cast<size_t>(n), [&](size_t i) {
    const double x = x_grid[static_cast<Eigen::Index>(i)];
    if (x >= edge) return;  // outside (or at) the support edge: density 0
    if (est.method == DensityMethod::kQuadrature) {
      const QuadEstimate q = pi_s_quadrature(s, x, static_cast<int>(config.resolution));
      est.value[static_cast<Eigen::Index>(i)] = q.value;
      est.error[static_cast<Eigen::Index>(i)] = q.error_estimate;
    } else {
      const std::uint64_t point_seed = SplitMix64::derive_seed(config.seed, i);
      const McEstimate m = pi_s_monte_carlo(s, x, config.resolution, point_seed);
      est.value[static_cast<Eigen::Index>(i)] = m.value;
      est.error[static_cast<Eigen::Index>(i)] = m.std_error;
    }
  });
  return est;
}

MomentRecovery recover_moment(const DensityEstimate& estimate, int k) {
  const int n = static_cast<int>(estimate.x.size());
  if (n < 40)
    throw std::invalid_argument("recover_moment: grid too sparse (need >= 40 points)");
  if (k < 0 || k > 8) throw std::invalid_argument("recover_moment: k must be in [0, 8]");

  const double edge = to_double(support_edge(estimate.s));
  Eigen::ArrayXd w(n), h(n), herr(n);
  for (int i = 0; i < n; ++i) {
    w[i] = grid_unwarp(std::min(estimate.x[i] / edge, 1.0));
    const double w2 = w[i] * w[i], w5 = w2 * w2 * w[i];
    const double jac = 18.0 * edge * w5 * (1.0 - w[i] * w2) * std::pow(estimate.x[i], k);
    h[i] = jac * estimate.value[i];
    herr[i] = jac * estimate.error[i];
  }

  // Composite integration over the grid span; Simpson when the w-spacing is
  // uniform, trapezoid otherwise.
  Eigen::ArrayXd coef = Eigen::ArrayXd::Zero(n);
  const double dw = w[1] - w[0];
  bool uniform = true;
  for (int i = 1; i + 1 < n; ++i)
    if (std::abs((w[i + 1] - w[i]) - dw) > 1e-6 * dw) uniform = false;
  if (uniform) {
    // pair cells for Simpson; an odd cell count ends with the 3/8 rule so
    // the composite stays fourth order
    const int last = (n % 2 == 1) ? n - 1 : n - 4;
    for (int i = 0; i < last; i += 2) {
      coef[i] += dw / 3.0;
      coef[i + 1] += 4.0 * dw / 3.0;
      coef[i + 2] += dw / 3.0;
    }
    if (last == n - 4) {
      coef[n - 4] += 3.0 * dw / 8.0;
      coef[n - 3] += 9.0 * dw / 8.0;
      coef[n - 2] += 9.0 * dw / 8.0;
      coef[n - 1] += 3.0 * dw / 8.0;
    }
  } else {
    for (int i = 0; i + 1 < n; ++i) {
      const double cell = w[i + 1] - w[i];
      coef[i] += 0.5 * cell;
      coef[i + 1] += 0.5 * cell;
    }
  }
  if (w[n - 1] < 1.0) coef[n - 1] += 0.5 * (1.0 - w[n - 1]);  // linear closure to x = K

  double value = (coef * h).sum();

  // Below the first grid point: local power-law fit pi ~ v0 (x/x0)^gamma,
  // integrated in closed form. The exponent is observed from the data, not
  // assumed.
  double tail = 0.0, tail_err = 0.0;
  {
    const int m = std::min(8, std::max(3, n / 10));
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int used = 0;
    for (int i = 0; i < m; ++i) {
      if (!(estimate.value[i] > 0)) continue;
      const double lx = std::log(estimate.x[i]);
      const double ly = std::log(estimate.value[i]);
      sx += lx;
      sy += ly;
      sxx += lx * lx;
      sxy += lx * ly;
      ++used;
    }
    if (used >= 2) {
      double gamma = (used * sxy - sx * sy) / (used * sxx - sx * sx);
      gamma = std::min(3.0, std::max(-0.98, gamma));
      const double x0 = estimate.x[0];
      tail = estimate.value[0] * std::pow(x0, k + 1) / (k + gamma + 1.0);
      tail_err = estimate.error[0] * std::pow(x0, k + 1) / (k + gamma + 1.0);
    }
  }
  value += tail;

  double err;
  if (estimate.method == DensityMethod::kMonteCarlo) {
    err = std::sqrt((coef * herr).square().sum() + tail_err * tail_err);
  } else {
    err = (coef * herr).abs().sum() + std::abs(tail_err);
  }
  return {value, err};
}

}  // namespace fclab
