#include "fclab/sampling.hpp"

#include <cmath>
#include <stdexcept>

namespace fclab {

double sample_normal(SplitMix64& rng) {
  const double u1 = rng.uniform();
  const double u2 = rng.uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
}

double sample_gamma(double shape, SplitMix64& rng) {
  if (!(shape > 0)) throw std::invalid_argument("sample_gamma: shape must be > 0");
  if (shape < 1.0) {
    const double boost = sample_gamma(shape + 1.0, rng);
    return boost * std::pow(rng.uniform(), 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = sample_normal(rng);
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = rng.uniform();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

double sample_beta(double a, double b, SplitMix64& rng) {
  if (!(a > 0) || !(b > 0)) throw std::invalid_argument("sample_beta: shapes must be > 0");
  if (a <= 1.0 && b <= 1.0) {
    // Johnk: exact for both shapes <= 1, and the acceptance rate
    // Gamma(1+a)Gamma(1+b)/Gamma(1+a+b) approaches 1 as the shapes shrink.
    const double inv_a = 1.0 / a;
    const double inv_b = 1.0 / b;
    for (;;) {
      const double x = std::pow(rng.uniform(), inv_a);
      const double y = std::pow(rng.uniform(), inv_b);
      if (x + y <= 1.0) return x / (x + y);
    }
  }
  const double ga = sample_gamma(a, rng);
  const double gb = sample_gamma(b, rng);
  return ga / (ga + gb);
}

}  // namespace fclab
