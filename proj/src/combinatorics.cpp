#include "fclab/combinatorics.hpp"

namespace fclab {

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact: r is C(n-k+i, i) at this point
  }
  return r;
}

BigInt fuss_catalan(int s, int k) {
  if (s < 1) throw std::invalid_argument("fuss_catalan: s must be >= 1");
  if (k < 0) throw std::invalid_argument("fuss_catalan: k must be >= 0");
  const long n = static_cast<long>(s) * k + k;
  BigInt c = binomial(n, k);
  const BigInt d = static_cast<long>(s) * k + 1;
  BigInt q, r;
  divide_qr(c, d, q, r);
  if (r != 0) throw std::logic_error("fuss_catalan: divisibility failed");
  return q;
}

Rational fuss_catalan_polynomial(int s, int k, const Rational& t) {
  if (s < 1) throw std::invalid_argument("fuss_catalan_polynomial: s must be >= 1");
  if (k < 0) throw std::invalid_argument("fuss_catalan_polynomial: k must be >= 0");
  if (t < 0) throw std::invalid_argument("fuss_catalan_polynomial: t must be >= 0");
  if (k == 0) return 1;
  Rational sum = 0;
  Rational tpow = 1;
  for (int j = 1; j <= k; ++j) {
    tpow *= t;
    Rational term(binomial(k - 1, j - 1) * binomial(static_cast<long>(s) * k, j - 1), j);
    sum += term * tpow;
  }
  return sum;
}

MomentSequence moment_sequence(const FcParams& params, int k_max) {
  if (k_max < 0) throw std::invalid_argument("moment_sequence: k_max must be >= 0");
  MomentSequence seq;
  seq.params = params;
  seq.values.reserve(static_cast<size_t>(k_max) + 1);
  for (int k = 0; k <= k_max; ++k)
    seq.values.push_back(fuss_catalan_polynomial(params.s, k, params.t));
  return seq;
}

Rational support_edge(int s) {
  if (s < 1) throw std::invalid_argument("support_edge: s must be >= 1");
  return Rational(boost::multiprecision::pow(BigInt(s + 1), static_cast<unsigned>(s + 1)),
                  boost::multiprecision::pow(BigInt(s), static_cast<unsigned>(s)));
}

BetaRatioTerm beta_ratio_parameters(int s) {
  if (s < 1) throw std::invalid_argument("beta_ratio_parameters: s must be >= 1");
  BetaRatioTerm p;
  p.s = s;
  for (int i = 1; i <= s; ++i) p.upper.emplace_back(i, s + 1);
  p.lower.emplace_back(1, 2);
  for (int i = 1; i <= s; ++i) p.lower.emplace_back(i + 1, s);
  p.edge = support_edge(s);
  return p;
}

Rational beta_ratio_term(int s, int k) {
  if (k < 0) throw std::invalid_argument("beta_ratio_term: k must be >= 0");
  const BetaRatioTerm p = beta_ratio_parameters(s);
  Rational r = p.edge / 4;
  for (const auto& a : p.upper) r *= k + a;
  for (const auto& b : p.lower) r /= k + b;
  return r;
}

}  // namespace fclab
