#pragma once

#include "fclab/rng.hpp"

namespace fclab {

/// Standard normal via Box-Muller (no cached spare, so a sampler's output
/// stream is a pure function of the generator state).
double sample_normal(SplitMix64& rng);

/// Gamma(shape, 1) by Marsaglia-Tsang squeeze; shapes < 1 are boosted through
/// Gamma(shape + 1) * U^(1/shape), which stays exact for arbitrarily small
/// shapes.
double sample_gamma(double shape, SplitMix64& rng);

/// Beta(a, b) as the ratio of two Gammas. Valid for both shapes < 1, the
/// regime every product-weight parameter lives in.
double sample_beta(double a, double b, SplitMix64& rng);

}  // namespace fclab
