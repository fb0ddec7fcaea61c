#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fclab/free_probability.hpp"
#include "fclab/rng.hpp"

#include <functional>
#include <vector>

using namespace fclab;

namespace {

// --- test-only oracle: moments from cumulants by brute-force enumeration of
// non-crossing set partitions ------------------------------------------------

void enumerate_partitions(int n, std::vector<std::vector<int>>& blocks, int next,
                          const std::function<void(const std::vector<std::vector<int>>&)>& emit) {
  if (next == n) {
    emit(blocks);
    return;
  }
  // index-based: deeper recursion appends to `blocks` and may reallocate
  const size_t count = blocks.size();
  for (size_t i = 0; i < count; ++i) {
    blocks[i].push_back(next);
    enumerate_partitions(n, blocks, next + 1, emit);
    blocks[i].pop_back();
  }
  blocks.push_back({next});
  enumerate_partitions(n, blocks, next + 1, emit);
  blocks.pop_back();
}

bool is_crossing(const std::vector<std::vector<int>>& blocks) {
  // a < b < c < d with {a, c} and {b, d} in different blocks
  std::vector<int> owner;
  int n = 0;
  for (const auto& block : blocks)
    for (int e : block) n = std::max(n, e + 1);
  owner.assign(static_cast<size_t>(n), -1);
  for (size_t i = 0; i < blocks.size(); ++i)
    for (int e : blocks[i]) owner[static_cast<size_t>(e)] = static_cast<int>(i);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d)
          if (owner[a] == owner[c] && owner[b] == owner[d] && owner[a] != owner[b]) return true;
  return false;
}

Rational moment_by_nc_enumeration(const std::vector<Rational>& kappa, int n) {
  // m_n = sum over non-crossing partitions of prod kappa_{|block|}
  if (n == 0) return 1;
  Rational total = 0;
  std::vector<std::vector<int>> blocks;
  enumerate_partitions(n, blocks, 0, [&](const std::vector<std::vector<int>>& partition) {
    if (is_crossing(partition)) return;
    Rational product = 1;
    for (const auto& block : partition) product *= kappa[block.size()];
    total += product;
  });
  return total;
}

int count_nc_partitions(int n) {
  int count = 0;
  std::vector<std::vector<int>> blocks;
  enumerate_partitions(n, blocks, 0, [&](const std::vector<std::vector<int>>& partition) {
    if (!is_crossing(partition)) ++count;
  });
  return count;
}

FormalPowerSeries random_invertible_series(SplitMix64& rng, int order) {
  FormalPowerSeries f(order);
  f[1] = Rational(1 + static_cast<int>(rng.next_u64() % 5), 1 + static_cast<int>(rng.next_u64() % 3));
  if (rng.next_u64() % 2) f[1] = -f[1];
  for (int k = 2; k <= order; ++k)
    f[k] = Rational(static_cast<int>(rng.next_u64() % 7) - 3, 1 + static_cast<int>(rng.next_u64() % 4));
  return f;
}

}  // namespace

TEST_CASE("non-crossing enumeration sanity: Catalan counts") {
  CHECK(count_nc_partitions(3) == 5);
  CHECK(count_nc_partitions(4) == 14);
  CHECK(count_nc_partitions(5) == 42);
}

TEST_CASE("moment_generating_series") {
  const auto catalan = moment_generating_series(moment_sequence({1, 1}, 4), 4);
  const std::vector<Rational> want{0, 1, 2, 5, 14};
  CHECK(catalan.coefficients() == want);

  const auto zero_t = moment_generating_series(moment_sequence({1, 0}, 3), 3);
  for (int k = 0; k <= 3; ++k) CHECK(zero_t[k] == 0);

  const auto s2 = moment_generating_series(moment_sequence({2, 1}, 3), 3);
  const std::vector<Rational> want2{0, 1, 3, 12};
  CHECK(s2.coefficients() == want2);

  CHECK_THROWS_AS(moment_generating_series(moment_sequence({2, 1}, 2), 5), std::invalid_argument);
}

TEST_CASE("series_reversion hand anchors") {
  FormalPowerSeries identity(5);
  identity[1] = 1;
  CHECK(series_reversion(identity) == identity);

  FormalPowerSeries f(5);
  f[1] = 1;
  f[2] = 1;  // z + z^2
  const auto g = series_reversion(f);
  const std::vector<Rational> want{0, 1, -1, 2, -5, 14};  // alternating Catalan
  CHECK(g.coefficients() == want);
}

TEST_CASE("series_reversion rejects bad input") {
  FormalPowerSeries constant(3);
  constant[0] = 1;
  constant[1] = 1;
  CHECK_THROWS_AS(series_reversion(constant), std::invalid_argument);
  FormalPowerSeries no_linear(3);
  no_linear[2] = 1;
  CHECK_THROWS_AS(series_reversion(no_linear), std::invalid_argument);
}

TEST_CASE("reversion round trip on random small rationals") {
  SplitMix64 rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    const auto f = random_invertible_series(rng, 9);
    const auto g = series_reversion(f);
    CHECK(series_reversion(g) == f);
    // composition is the identity to truncation order
    const auto composed = f.compose(g);
    for (int k = 0; k <= composed.order(); ++k)
      CHECK(composed[k] == (k == 1 ? Rational(1) : Rational(0)));
  }
}

TEST_CASE("s_transform closed forms") {
  // pi_1: S(z) = 1/(1+z)
  const auto s1 = s_transform(moment_sequence({1, 1}, 9), 8);
  for (int k = 0; k <= 8; ++k) CHECK(s1[k] == (k % 2 == 0 ? Rational(1) : Rational(-1)));

  // pi_2: S(z) = (1+z)^{-2}
  const auto s2 = s_transform(moment_sequence({2, 1}, 9), 8);
  for (int k = 0; k <= 8; ++k) CHECK(s2[k] == Rational((k % 2 == 0 ? 1 : -1) * (k + 1)));

  // multiplicativity spot check
  CHECK(s2 == s1 * s1);

  CHECK_THROWS_AS(s_transform(moment_sequence({1, 0}, 9), 8), std::invalid_argument);
}

TEST_CASE("free multiplicative semigroup to order 8") {
  const auto base = s_transform(moment_sequence({1, 1}, 9), 8);
  for (int s = 2; s <= 4; ++s) {
    const auto lhs = s_transform(moment_sequence({s, 1}, 9), 8);
    CHECK(lhs == base.pow(s));
  }
}

TEST_CASE("r_transform: free Poisson cumulants are constant") {
  for (const auto& t : {Rational(1), Rational(1, 2), Rational(3)}) {
    const auto kappa = r_transform(moment_sequence({1, t}, 6), 6);
    CHECK(kappa[0] == 0);
    for (int k = 1; k <= 6; ++k) CHECK(kappa[k] == t);
  }
}

TEST_CASE("r_transform against the non-crossing enumeration oracle") {
  for (const auto& t : {Rational(1), Rational(1, 2), Rational(7, 3)}) {
    // Forward: moments of the constant cumulant sequence by enumeration must
    // be the s = 1 moment polynomials.
    const std::vector<Rational> kappa{0, t, t, t, t, t};
    for (int n = 1; n <= 4; ++n)
      CHECK(moment_by_nc_enumeration(kappa, n) == fuss_catalan_polynomial(1, n, t));
  }
  // And a non-constant cumulant sequence round-trips through the recursion.
  const std::vector<Rational> kappa{0, Rational(2), Rational(-1, 3), Rational(5), Rational(1, 7)};
  std::vector<Rational> moments{1};
  for (int n = 1; n <= 4; ++n) moments.push_back(moment_by_nc_enumeration(kappa, n));
  MomentSequence seq;
  seq.params = {1, 1};
  seq.values = moments;
  const auto recovered = r_transform(seq, 4);
  for (int k = 1; k <= 4; ++k) CHECK(recovered[k] == kappa[static_cast<size_t>(k)]);
}

TEST_CASE("free additive semigroup: cumulants scale linearly in t") {
  const int order = 8;
  auto base = r_transform(moment_sequence({1, 1}, order), order);
  for (const auto& t : {Rational(1, 2), Rational(2), Rational(7, 3)}) {
    auto scaled = base;
    scaled *= t;
    CHECK(r_transform(moment_sequence({1, t}, order), order) == scaled);
  }
}

TEST_CASE("moment round trip through the cumulant recursion") {
  for (int s = 1; s <= 3; ++s) {
    const auto moments = moment_sequence({s, 1}, 8);
    const auto kappa = r_transform(moments, 8);
    CHECK(moments_from_cumulants(kappa, 8) == moments.values);
  }
}
