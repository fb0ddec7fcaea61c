#pragma once

#include "fclab/rational.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <utility>
#include <vector>

namespace fclab {

enum class DensityMethod { kMonteCarlo, kQuadrature, kClosedForm };

const char* to_string(DensityMethod method);

/// Upper support edge K = (s+1)^(s+1)/s^s.
struct SupportConstant {
  int s = 1;
  Rational edge;
};

SupportConstant support_constant(int s);

/// The s-dimensional product-Beta parameterization of the integral weight.
/// pairs[0] = (1/(s+1), (s-1)/(2s+2)), pairs[j-1] = (j/(s+1), j/(s(s+1)))
/// for j = 2..s. Degenerate at s = 1 (a point mass at t = 1; no pairs).
struct BetaWeightSpec {
  int s = 1;
  bool degenerate = false;
  std::vector<std::pair<Rational, Rational>> pairs;
  double normalizer = 1.0;  // product of the Beta-function normalizers
};

BetaWeightSpec beta_weight_spec(int s);

struct McEstimate {
  double value = 0.0;
  double std_error = 0.0;
};

struct QuadEstimate {
  double value = 0.0;
  double error_estimate = 0.0;  // node-doubling difference
};

/// Importance-sampled Monte Carlo evaluation of the density integral at x.
/// Unbiased; returns (0, 0) without sampling for x > K. Requires s >= 2
/// (s = 1 is closed form) and x > 0.
McEstimate pi_s_monte_carlo(int s, double x, std::int64_t n_samples, std::uint64_t seed);

/// Nested Gauss-Jacobi evaluation for 2 <= s <= 5 and x in (0, K). Each
/// level integrates only over its active range; endpoint singularities are
/// absorbed into the Jacobi weights so the remaining factor is smooth.
QuadEstimate pi_s_quadrature(int s, double x, int nodes_per_dim);

/// Symmetric companion density: |x| * pi_s(x^2) for x != 0, zero outside
/// [-sqrt(K), sqrt(K)]. For s >= 2 the value diverges as x -> 0 (the limit
/// is +infinity); s = 1 is the semicircle and is evaluated in closed form.
double sigma_s(int s, double x, DensityMethod method, std::int64_t resolution,
               std::uint64_t seed = 0);

/// (1/2pi) sqrt(4/x - 1) on (0, 4], else 0.
double pi_1_closed_form(double x);

struct MarchenkoPasturValue {
  double atom_weight_at_zero = 0.0;
  double continuous_part = 0.0;
};

/// Atom max(1-t, 0) at zero plus sqrt(4t - (x-1-t)^2)/(2 pi x) on its
/// support. Requires t > 0.
MarchenkoPasturValue marchenko_pastur(double t, double x);

/// Penson-Solomon cube-root expression on (0, 27/4], else 0.
double pi_2_closed_form(double x);

struct DensityEstimate {
  int s = 1;
  DensityMethod method = DensityMethod::kClosedForm;
  Eigen::ArrayXd x;
  Eigen::ArrayXd value;
  Eigen::ArrayXd error;      // std errors (MC) or node-doubling estimates
  std::int64_t resolution = 0;  // samples per point (MC) or nodes per dim
  std::uint64_t seed = 0;
};

struct GridConfig {
  DensityMethod method = DensityMethod::kQuadrature;
  std::int64_t resolution = 64;
  std::uint64_t seed = 0;
  double floor_fraction = 1e-3;  // reject x below floor_fraction * K
};

/// Element-wise evaluation over a positive, sorted grid. s = 1 always
/// dispatches to the closed form. Monte Carlo points draw their seeds from
/// (seed, point index), so parallel and serial runs match bit for bit.
DensityEstimate density_grid(int s, const Eigen::ArrayXd& x_grid, const GridConfig& config);

/// Grid warp x/K = 3 w^6 - 2 w^9 on w in [0, 1]: sextic clustering against
/// the unbounded density at zero, quadratic approach at the support edge so
/// the square-root vanishing there integrates cleanly.
double grid_warp(double w);
double grid_unwarp(double fraction_of_edge);

/// n points equally spaced in the warped coordinate from w_min up to the
/// point mapping to x_max_fraction * K.
Eigen::ArrayXd clustered_grid(int s, int n_points, double w_min, double x_max_fraction = 1.0);

struct MomentRecovery {
  double value = 0.0;
  double std_error = 0.0;  // propagated point errors (+ tail-fit share)
};

/// integral of x^k against the gridded density, with substitution x = K w^6
/// against the vanishing-at-zero endpoint and a fitted power-law tail below
/// the first grid point. Needs >= 40 grid points and k <= 8.
MomentRecovery recover_moment(const DensityEstimate& estimate, int k);

}  // namespace fclab
