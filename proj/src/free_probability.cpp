#include "fclab/free_probability.hpp"

#include <stdexcept>

namespace fclab {

FormalPowerSeries moment_generating_series(const MomentSequence& moments, int order) {
  if (order < 0) throw std::invalid_argument("moment_generating_series: negative order");
  if (static_cast<int>(moments.values.size()) < order + 1)
    throw std::invalid_argument("moment_generating_series: not enough moments");
  FormalPowerSeries psi(order);
  for (int k = 1; k <= order; ++k) psi[k] = moments.values[static_cast<size_t>(k)];
  return psi;
}

FormalPowerSeries s_transform(const MomentSequence& moments, int order) {
  if (static_cast<int>(moments.values.size()) < order + 2)
    throw std::invalid_argument("s_transform: needs moments up to order+1");
  if (moments.values[1] == 0) throw std::invalid_argument("s_transform: requires m_1 != 0");
  const FormalPowerSeries psi = moment_generating_series(moments, order + 1);
  const FormalPowerSeries chi = series_reversion(psi);
  // chi(z)/z, then multiply by (1+z); both exact at truncation `order`.
  FormalPowerSeries shifted(order);
  for (int k = 0; k <= order; ++k) shifted[k] = chi[k + 1];
  FormalPowerSeries one_plus_z(order);
  one_plus_z[0] = 1;
  if (order >= 1) one_plus_z[1] = 1;
  return shifted * one_plus_z;
}

FormalPowerSeries r_transform(const MomentSequence& moments, int order) {
  if (order < 1) throw std::invalid_argument("r_transform: order must be >= 1");
  if (static_cast<int>(moments.values.size()) < order + 1)
    throw std::invalid_argument("r_transform: not enough moments");
  // M(z) = C(z M(z)): with A(z) = z M(z), C = M o A^{-1}.
  FormalPowerSeries m_series(order);
  m_series[0] = 1;
  for (int k = 1; k <= order; ++k) m_series[k] = moments.values[static_cast<size_t>(k)];
  FormalPowerSeries a(order);
  for (int k = 1; k <= order; ++k) a[k] = m_series[k - 1];
  const FormalPowerSeries c = m_series.compose(series_reversion(a));
  FormalPowerSeries kappa(order);
  for (int k = 1; k <= order; ++k) kappa[k] = c[k];
  return kappa;
}

std::vector<Rational> moments_from_cumulants(const FormalPowerSeries& cumulants, int order) {
  if (order < 0) throw std::invalid_argument("moments_from_cumulants: negative order");
  if (cumulants.order() < order)
    throw std::invalid_argument("moments_from_cumulants: not enough cumulants");
  FormalPowerSeries c(order);
  c[0] = 1;
  for (int k = 1; k <= order; ++k) c[k] = cumulants[k];
  // Fixed point of M = C(z M); each pass settles one more coefficient.
  FormalPowerSeries m(order);
  m[0] = 1;
  for (int pass = 0; pass < order; ++pass) {
    FormalPowerSeries zm(order);
    for (int k = 1; k <= order; ++k) zm[k] = m[k - 1];
    m = c.compose(zm);
  }
  std::vector<Rational> out(static_cast<size_t>(order) + 1);
  for (int k = 0; k <= order; ++k) out[static_cast<size_t>(k)] = m[k];
  return out;
}

}  // namespace fclab
