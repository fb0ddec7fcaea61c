#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fclab/combinatorics.hpp"
#include "fclab/density.hpp"
#include "fclab/rmt.hpp"

#include <cmath>

using namespace fclab;

namespace {
bool near_abs(double a, double b, double tol) { return std::abs(a - b) <= tol; }
bool near_rel(double a, double b, double tol) { return std::abs(a - b) <= tol * std::abs(b); }
}  // namespace

TEST_CASE("sample_ginibre normalization") {
  // (1/N) tr(X X*) concentrates at 1
  SplitMix64 rng(6);
  const int n = 100, trials = 100;
  double acc = 0.0;
  for (int t = 0; t < trials; ++t) {
    const Eigen::MatrixXcd x = sample_ginibre(n, rng);
    acc += (x * x.adjoint()).trace().real() / n;
  }
  CHECK(near_abs(acc / trials, 1.0, 0.03));

  // entry variance 1/N
  SplitMix64 rng2(7);
  const Eigen::MatrixXcd y = sample_ginibre(50, rng2);
  double var = 0.0;
  int count = 0;
  for (int i = 0; i < 50; ++i)
    for (int j = 0; j < 50; ++j) {
      var += std::norm(y(i, j));
      ++count;
    }
  CHECK(near_rel(var / count, 1.0 / 50, 0.1));

  // N = 1: a single complex Gaussian of unit variance
  SplitMix64 rng3(8);
  double v1 = 0.0;
  for (int t = 0; t < 20000; ++t) v1 += std::norm(sample_ginibre(1, rng3)(0, 0));
  CHECK(near_rel(v1 / 20000, 1.0, 0.05));
}

TEST_CASE("product_moments: first moment is exactly 1 in expectation") {
  for (int s : {1, 2, 3}) {
    RmtExperimentConfig config;
    config.s = s;
    config.n_dim = 80;
    config.trials = 60;
    config.k_max = 1;
    config.seed = 100 + static_cast<std::uint64_t>(s);
    const auto report = product_moments(config);
    CHECK(report.moments[0].mean > 0.0);
    CHECK(std::abs(report.moments[0].mean - 1.0) < 3.0 * report.moments[0].std_error);
  }
}

TEST_CASE("product_moments matches Fuss-Catalan limits") {
  RmtExperimentConfig config;
  config.s = 1;
  config.n_dim = 200;
  config.trials = 50;
  config.k_max = 2;
  config.seed = 11;
  const auto r1 = product_moments(config);
  CHECK(std::abs(r1.moments[1].mean - 2.0) < 3.0 * r1.moments[1].std_error);

  config.s = 2;
  config.k_max = 3;
  config.seed = 12;
  const auto r2 = product_moments(config);
  CHECK(std::abs(r2.moments[2].mean - 12.0) < 3.0 * r2.moments[2].std_error);
  CHECK(r2.moments[2].relative_deviation < 0.05);
}

TEST_CASE("power variant shares the limit") {
  RmtExperimentConfig config;
  config.s = 2;
  config.n_dim = 200;
  config.trials = 40;
  config.k_max = 2;
  config.seed = 21;
  const auto distinct = product_moments(config);
  config.variant = RmtVariant::kPower;
  const auto power = product_moments(config);
  const auto& d = distinct.moments[1];
  const auto& p = power.moments[1];
  CHECK(std::abs(d.mean - 3.0) < 3.0 * d.std_error + 0.15);
  CHECK(std::abs(p.mean - 3.0) < 3.0 * p.std_error + 0.15);
  const double joint = std::sqrt(d.std_error * d.std_error + p.std_error * p.std_error);
  CHECK(std::abs(d.mean - p.mean) < 3.0 * joint);
}

TEST_CASE("power variant is identical to distinct at s = 1") {
  RmtExperimentConfig config;
  config.s = 1;
  config.n_dim = 40;
  config.trials = 5;
  config.k_max = 2;
  config.seed = 5;
  const auto a = product_moments(config);
  config.variant = RmtVariant::kPower;
  const auto b = product_moments(config);
  for (size_t k = 0; k < a.moments.size(); ++k) {
    CHECK(a.moments[k].mean == b.moments[k].mean);
    CHECK(a.moments[k].std_error == b.moments[k].std_error);
  }
}

TEST_CASE("single-trial deviations shrink with N") {
  // mean absolute single-trial deviation at N = 200 must undercut N = 50
  for (int k = 1; k <= 3; ++k) {
    double mad[2] = {0.0, 0.0};
    int idx = 0;
    for (int n : {50, 200}) {
      RmtExperimentConfig config;
      config.s = 2;
      config.n_dim = n;
      config.trials = 1;
      config.k_max = 3;
      const double reference = fuss_catalan(2, k).convert_to<double>();
      double acc = 0.0;
      for (int t = 0; t < 60; ++t) {
        config.seed = SplitMix64::derive_seed(777, static_cast<std::uint64_t>(t));
        const auto report = product_moments(config);
        acc += std::abs(report.moments[static_cast<size_t>(k - 1)].mean - reference) / reference;
      }
      mad[idx++] = acc / 60;
    }
    CHECK(mad[1] < mad[0]);
  }
}

TEST_CASE("report determinism") {
  RmtExperimentConfig config;
  config.s = 2;
  config.n_dim = 60;
  config.trials = 8;
  config.k_max = 3;
  config.seed = 99;
  const auto a = product_moments(config);
  const auto b = product_moments(config);
  for (size_t k = 0; k < a.moments.size(); ++k) {
    CHECK(a.moments[k].mean > 0.0);  // moments of a positive operator
    CHECK(a.moments[k].mean == b.moments[k].mean);
    CHECK(a.moments[k].std_error == b.moments[k].std_error);
  }
}

TEST_CASE("config validation") {
  RmtExperimentConfig config;
  config.s = 0;
  CHECK_THROWS_AS(product_moments(config), std::invalid_argument);
  config.s = 2;
  config.n_dim = 1;
  CHECK_THROWS_AS(product_moments(config), std::invalid_argument);
  config.n_dim = 4000;
  config.memory_cap_bytes = 1 << 20;
  CHECK_THROWS_AS(product_moments(config), std::invalid_argument);
  config.n_dim = 600;
  config.memory_cap_bytes = std::int64_t(2) << 30;
  CHECK_THROWS_AS(histogram_vs_density(config, 40), std::invalid_argument);
}

TEST_CASE("histogram against the closed forms") {
  RmtExperimentConfig config;
  config.s = 1;
  config.n_dim = 512;
  config.trials = 16;
  config.seed = 2;
  const auto table = histogram_vs_density(config, 40);
  REQUIRE(table.size() == 41);

  double freq_sum = 0.0;
  for (const auto& row : table) freq_sum += row.frequency;
  CHECK(near_abs(freq_sum, 1.0, 1e-12));

  const double width = 4.0 / 40;
  double sup_dev = 0.0;
  for (const auto& row : table) {
    if (row.bin_center < 0.2 || row.bin_center > 3.8) continue;
    sup_dev = std::max(sup_dev, std::abs(row.frequency / width - row.density_reference));
  }
  CHECK(sup_dev < 0.05);
}

TEST_CASE("histogram mass above the support edge stays small") {
  RmtExperimentConfig config;
  config.s = 2;
  config.n_dim = 512;
  config.trials = 10;
  config.seed = 4;
  const auto table = histogram_vs_density(config, 30);
  REQUIRE(table.size() == 31);
  CHECK(table.back().frequency <= 0.01);
  CHECK(table.back().density_reference == 0.0);
}
