#include "fclab/rmt.hpp"

#include "fclab/combinatorics.hpp"
#include "fclab/density.hpp"
#include "fclab/parallel.hpp"
#include "fclab/sampling.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace fclab {

const char* to_string(RmtVariant variant) {
  return variant == RmtVariant::kDistinctFactors ? "distinct_factors" : "power";
}

namespace {

void validate(const RmtExperimentConfig& config) {
  if (config.s < 1) throw std::invalid_argument("rmt: s must be >= 1");
  if (config.n_dim < 2) throw std::invalid_argument("rmt: N must be >= 2");
  if (config.trials < 1) throw std::invalid_argument("rmt: trials must be >= 1");
  if (config.k_max < 1) throw std::invalid_argument("rmt: k_max must be >= 1");
  // Working set: product, current factor, W W*, running power, one temp.
  const std::int64_t bytes = std::int64_t(16) * config.n_dim * config.n_dim * 6;
  if (bytes > config.memory_cap_bytes)
    throw std::invalid_argument("rmt: configuration exceeds the memory cap");
}

Eigen::MatrixXcd factor_product(const RmtExperimentConfig& config, SplitMix64& rng) {
  Eigen::MatrixXcd w = sample_ginibre(config.n_dim, rng);
  if (config.variant == RmtVariant::kDistinctFactors) {
    for (int j = 1; j < config.s; ++j)
      w = (w * sample_ginibre(config.n_dim, rng)).eval();
  } else {
    const Eigen::MatrixXcd x = w;
    for (int j = 1; j < config.s; ++j) w = (w * x).eval();
  }
  return w;
}

}  // namespace

Eigen::MatrixXcd sample_ginibre(int n, SplitMix64& rng) {
  if (n < 1) throw std::invalid_argument("sample_ginibre: n must be >= 1");
  const double scale = 1.0 / std::sqrt(2.0 * n);
  Eigen::MatrixXcd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double re = sample_normal(rng);
      const double im = sample_normal(rng);
      m(i, j) = std::complex<double>(re * scale, im * scale);
    }
  return m;
}

RmtReport product_moments(const RmtExperimentConfig& config) {
  validate(config);
  const int n = config.n_dim;
  const int trials = config.trials;
  const int k_max = config.k_max;

  // trial-major storage, filled in parallel and reduced in index order
  std::vector<double> samples(static_cast<size_t>(trials) * k_max, 0.0);
  parallel_for(static_cast<size_t>(trials), [&](size_t trial) {
    SplitMix64 rng = SplitMix64::derive(config.seed, trial);
    const Eigen::MatrixXcd w = factor_product(config, rng);
    const Eigen::MatrixXcd a = w * w.adjoint();
    Eigen::MatrixXcd power = a;
    for (int k = 1; k <= k_max; ++k) {
      if (k > 1) power = (power * a).eval();
      samples[trial * k_max + (k - 1)] = power.trace().real() / n;
    }
  });

  RmtReport report;
  report.config = config;
  for (int k = 1; k <= k_max; ++k) {
    double sum = 0.0, sum_sq = 0.0;
    for (int t = 0; t < trials; ++t) {
      const double v = samples[static_cast<size_t>(t) * k_max + (k - 1)];
      sum += v;
      sum_sq += v * v;
    }
    RmtMomentRow row;
    row.k = k;
    row.mean = sum / trials;
    if (trials >= 2) {
      const double var = std::max(0.0, (sum_sq - trials * row.mean * row.mean) / (trials - 1.0));
      row.std_error = std::sqrt(var / trials);
    }
    row.reference = fuss_catalan(config.s, k).convert_to<double>();
    row.relative_deviation = std::abs(row.mean - row.reference) / row.reference;
    report.moments.push_back(row);
  }
  return report;
}

std::vector<HistogramRow> histogram_vs_density(const RmtExperimentConfig& config, int bins) {
  validate(config);
  if (config.n_dim > 512)
    throw std::invalid_argument("histogram_vs_density: N restricted to <= 512");
  if (bins < 1) throw std::invalid_argument("histogram_vs_density: bins must be >= 1");

  const double edge = to_double(support_edge(config.s));
  const double width = edge / bins;

  // squared singular values = eigenvalues of the Hermitian W W*
  std::vector<std::vector<double>> per_trial(static_cast<size_t>(config.trials));
  parallel_for(static_cast<size_t>(config.trials), [&](size_t trial) {
    SplitMix64 rng = SplitMix64::derive(config.seed, trial);
    const Eigen::MatrixXcd w = factor_product(config, rng);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(w * w.adjoint(),
                                                           Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
      throw std::runtime_error("histogram_vs_density: eigenvalue decomposition failed");
    auto& values = per_trial[trial];
    values.resize(static_cast<size_t>(config.n_dim));
    for (int i = 0; i < config.n_dim; ++i)
      values[static_cast<size_t>(i)] = std::max(0.0, solver.eigenvalues()[i]);
  });

  std::vector<std::int64_t> counts(static_cast<size_t>(bins) + 1, 0);  // last = overflow
  std::int64_t total = 0;
  for (const auto& values : per_trial)
    for (double v : values) {
      const int bin = v >= edge ? bins : static_cast<int>(v / width);
      ++counts[static_cast<size_t>(bin)];
      ++total;
    }

  std::vector<HistogramRow> table;
  table.reserve(static_cast<size_t>(bins) + 1);
  for (int b = 0; b <= bins; ++b) {
    HistogramRow row;
    row.bin_center = (b < bins) ? (b + 0.5) * width : edge + 0.5 * width;
    row.frequency = static_cast<double>(counts[static_cast<size_t>(b)]) / total;
    if (b < bins) {
      if (config.s == 1)
        row.density_reference = pi_1_closed_form(row.bin_center);
      else if (config.s == 2)
        row.density_reference = pi_2_closed_form(row.bin_center);
      else
        row.density_reference = pi_s_quadrature(config.s, row.bin_center, 32).value;
    }
    table.push_back(row);
  }
  return table;
}

}  // namespace fclab
