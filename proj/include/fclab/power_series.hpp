#pragma once

#include "fclab/rational.hpp"

#include <vector>

namespace fclab {

/// Truncated formal power series with exact rational coefficients. All
/// operations are closed under the truncation order (the shorter order wins
/// in binary ops).
class FormalPowerSeries {
 public:
  FormalPowerSeries() = default;
  explicit FormalPowerSeries(int order) : coeff_(static_cast<size_t>(order) + 1) {}
  explicit FormalPowerSeries(std::vector<Rational> coefficients)
      : coeff_(std::move(coefficients)) {}

  int order() const { return static_cast<int>(coeff_.size()) - 1; }
  const Rational& operator[](int i) const { return coeff_[static_cast<size_t>(i)]; }
  Rational& operator[](int i) { return coeff_[static_cast<size_t>(i)]; }
  const std::vector<Rational>& coefficients() const { return coeff_; }

  FormalPowerSeries truncated(int order) const;

  friend FormalPowerSeries operator+(const FormalPowerSeries& f, const FormalPowerSeries& g);
  friend FormalPowerSeries operator-(const FormalPowerSeries& f, const FormalPowerSeries& g);
  friend FormalPowerSeries operator*(const FormalPowerSeries& f, const FormalPowerSeries& g);
  friend bool operator==(const FormalPowerSeries& f, const FormalPowerSeries& g);

  FormalPowerSeries& operator*=(const Rational& c);

  /// f(g) for g with zero constant term.
  FormalPowerSeries compose(const FormalPowerSeries& g) const;

  /// Power under series multiplication (exponent >= 0).
  FormalPowerSeries pow(int exponent) const;

 private:
  std::vector<Rational> coeff_;
};

/// Compositional inverse: g with f(g(z)) = z + O(z^{n+1}). Requires
/// f(0) = 0 and a nonzero linear coefficient.
FormalPowerSeries series_reversion(const FormalPowerSeries& f);

}  // namespace fclab
