#pragma once

#include "fclab/rational.hpp"

#include <vector>

namespace fclab {

/// Parameters (s, t) of the two-parameter moment family. s is the number of
/// matrix factors; t = 1 recovers the plain Fuss-Catalan case.
struct FcParams {
  int s = 1;
  Rational t = 1;
};

struct MomentSequence {
  FcParams params;
  std::vector<Rational> values;  // index k = 0..k_max, values[0] == 1
};

/// Parameters of the exact moment-ratio identity: with beta_k = m_k k!/(2k)!,
/// beta_{k+1}/beta_k = (edge/4) * prod(k+upper[i]) / prod(k+lower[j]),
/// where `upper` has s entries and `lower` has s+1 (last one 1 + 1/s).
struct BetaRatioTerm {
  int s = 1;
  std::vector<Rational> upper;  // i/(s+1), i = 1..s
  std::vector<Rational> lower;  // 1/2, then (i+1)/s, i = 1..s
  Rational edge;                // (s+1)^(s+1)/s^s
};

/// Exact binomial coefficient by the running-product method; every
/// intermediate division is exact.
BigInt binomial(long n, long k);

/// m_k = C(s k + k, k)/(s k + 1), exact. Throws std::invalid_argument on
/// s < 1 or k < 0.
BigInt fuss_catalan(int s, int k);

/// m_k(t) = sum_{j=1..k} (1/j) C(k-1, j-1) C(s k, j-1) t^j, with m_0(t) = 1.
/// Requires t >= 0.
Rational fuss_catalan_polynomial(int s, int k, const Rational& t);

/// Batch of m_0(t)..m_kmax(t).
MomentSequence moment_sequence(const FcParams& params, int k_max);

/// (s+1)^(s+1)/s^s as an exact rational.
Rational support_edge(int s);

BetaRatioTerm beta_ratio_parameters(int s);

/// The exact ratio beta_{k+1}/beta_k evaluated from BetaRatioTerm.
Rational beta_ratio_term(int s, int k);

}  // namespace fclab
