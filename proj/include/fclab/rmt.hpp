#pragma once

#include "fclab/rng.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <vector>

namespace fclab {

enum class RmtVariant { kDistinctFactors, kPower };

const char* to_string(RmtVariant variant);

struct RmtExperimentConfig {
  int s = 1;           // number of factors
  int n_dim = 100;     // matrix dimension N
  int trials = 10;
  std::uint64_t seed = 0;
  RmtVariant variant = RmtVariant::kDistinctFactors;
  int k_max = 3;
  std::int64_t memory_cap_bytes = std::int64_t(2) << 30;
};

struct RmtMomentRow {
  int k = 0;
  double mean = 0.0;
  double std_error = 0.0;
  double reference = 0.0;          // exact Fuss-Catalan value
  double relative_deviation = 0.0;
};

struct RmtReport {
  RmtExperimentConfig config;
  std::vector<RmtMomentRow> moments;  // k = 1..k_max
};

struct HistogramRow {
  double bin_center = 0.0;
  double frequency = 0.0;          // counts / total, sums to 1 with overflow
  double density_reference = 0.0;  // pi_s at the bin center (0 beyond K)
};

/// N x N matrix of i.i.d. complex Gaussians with entry variance 1/N (each
/// part variance 1/(2N)), so the first squared-singular-value moment is 1.
Eigen::MatrixXcd sample_ginibre(int n, SplitMix64& rng);

/// Empirical moments (1/N) tr((W W*)^k) of the factor product, by repeated
/// multiplication, averaged over independent trials. Trials run in parallel
/// with per-trial derived seeds and are reduced in index order.
RmtReport product_moments(const RmtExperimentConfig& config);

/// Squared singular values of W binned uniformly on [0, K] plus one overflow
/// bin at the end; the reference column is the density at the bin center.
/// Requires N <= 512.
std::vector<HistogramRow> histogram_vs_density(const RmtExperimentConfig& config, int bins);

}  // namespace fclab
