#include "fclab/power_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace fclab {

namespace {
int min_order(const FormalPowerSeries& f, const FormalPowerSeries& g) {
  return std::min(f.order(), g.order());
}
}  // namespace

FormalPowerSeries FormalPowerSeries::truncated(int order) const {
  if (order < 0) throw std::invalid_argument("truncated: negative order");
  FormalPowerSeries out(order);
  const int n = std::min(order, this->order());
  for (int i = 0; i <= n; ++i) out[i] = (*this)[i];
  return out;
}

FormalPowerSeries operator+(const FormalPowerSeries& f, const FormalPowerSeries& g) {
  FormalPowerSeries out(min_order(f, g));
  for (int i = 0; i <= out.order(); ++i) out[i] = f[i] + g[i];
  return out;
}

FormalPowerSeries operator-(const FormalPowerSeries& f, const FormalPowerSeries& g) {
  FormalPowerSeries out(min_order(f, g));
  for (int i = 0; i <= out.order(); ++i) out[i] = f[i] - g[i];
  return out;
}

FormalPowerSeries operator*(const FormalPowerSeries& f, const FormalPowerSeries& g) {
  FormalPowerSeries out(min_order(f, g));
  for (int i = 0; i <= out.order(); ++i)
    for (int j = 0; i + j <= out.order() && j <= g.order(); ++j)
      if (i <= f.order()) out[i + j] += f[i] * g[j];
  return out;
}

bool operator==(const FormalPowerSeries& f, const FormalPowerSeries& g) {
  return f.coeff_ == g.coeff_;
}

FormalPowerSeries& FormalPowerSeries::operator*=(const Rational& c) {
  for (auto& v : coeff_) v *= c;
  return *this;
}

FormalPowerSeries FormalPowerSeries::compose(const FormalPowerSeries& g) const {
  if (g.order() < 0 || g[0] != 0)
    throw std::invalid_argument("compose: inner series must have zero constant term");
  const int n = std::min(order(), g.order());
  // Horner over series arithmetic.
  FormalPowerSeries acc(n);
  for (int i = order(); i >= 0; --i) {
    acc = acc * g.truncated(n);
    acc[0] += (*this)[i];
  }
  return acc;
}

FormalPowerSeries FormalPowerSeries::pow(int exponent) const {
  if (exponent < 0) throw std::invalid_argument("pow: negative exponent");
  FormalPowerSeries out(order());
  out[0] = 1;
  FormalPowerSeries base = *this;
  while (exponent > 0) {
    if (exponent & 1) out = out * base;
    base = base * base;
    exponent >>= 1;
  }
  return out;
}

FormalPowerSeries series_reversion(const FormalPowerSeries& f) {
  if (f.order() < 1 || f[0] != 0)
    throw std::invalid_argument("series_reversion: requires zero constant term");
  if (f[1] == 0) throw std::invalid_argument("series_reversion: requires nonzero linear term");
  const int n = f.order();
  FormalPowerSeries g(n);
  g[1] = Rational(1) / f[1];
  // The unknown g_k enters [z^k] f(g) only through the linear term of f, so
  // each order is a single division.
  for (int k = 2; k <= n; ++k) {
    const FormalPowerSeries h = f.compose(g);
    g[k] = -h[k] / f[1];
  }
  return g;
}

}  // namespace fclab
