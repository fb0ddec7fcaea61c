#pragma once

#include "fclab/combinatorics.hpp"
#include "fclab/power_series.hpp"

namespace fclab {

/// psi(z) = sum_{k>=1} m_k z^k, truncated at `order`. Needs at least
/// order+1 stored moments.
FormalPowerSeries moment_generating_series(const MomentSequence& moments, int order);

/// S(z) = chi(z) (1+z) / z with chi the compositional inverse of psi;
/// coefficients S_0..S_order, exact. Requires m_1 != 0.
FormalPowerSeries s_transform(const MomentSequence& moments, int order);

/// Free cumulant series: coefficient k (k >= 1) is kappa_k, extracted from
/// the moments through M(z) = C(z M(z)). Constant term is zero.
FormalPowerSeries r_transform(const MomentSequence& moments, int order);

/// Inverse direction of r_transform, for round trips: moments m_1..m_order
/// from a cumulant series (constant term ignored).
std::vector<Rational> moments_from_cumulants(const FormalPowerSeries& cumulants, int order);

}  // namespace fclab
