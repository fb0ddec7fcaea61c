#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fclab/combinatorics.hpp"

using namespace fclab;

namespace {

// Independent factorial-based oracle; the production path divides running
// products, so the two routes share nothing but the definition.
BigInt binomial_by_factorials(int n, int k) {
  auto factorial = [](int m) {
    BigInt f = 1;
    for (int i = 2; i <= m; ++i) f *= i;
    return f;
  };
  return factorial(n) / (factorial(k) * factorial(n - k));
}

BigInt factorial(int m) {
  BigInt f = 1;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

}  // namespace

TEST_CASE("fuss_catalan hand anchors") {
  CHECK(fuss_catalan(1, 3) == 5);    // (1/4) C(6,3) = 20/4
  CHECK(fuss_catalan(2, 3) == 12);   // (1/7) C(9,3) = 84/7
  CHECK(fuss_catalan(7, 0) == 1);
  CHECK(fuss_catalan(2, 5) == 273);  // (1/11) C(15,5)
  CHECK(fuss_catalan(3, 2) == 4);    // (1/7) C(8,2)
}

TEST_CASE("fuss_catalan input validation") {
  CHECK_THROWS_AS(fuss_catalan(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(fuss_catalan(-2, 3), std::invalid_argument);
  CHECK_THROWS_AS(fuss_catalan(2, -1), std::invalid_argument);
}

TEST_CASE("binomial matches factorial oracle") {
  for (int n = 0; n <= 24; ++n)
    for (int k = 0; k <= n; ++k) CHECK(binomial(n, k) == binomial_by_factorials(n, k));
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(200, 100) % 7 == binomial_by_factorials(200, 100) % 7);
}

TEST_CASE("integrality: (sk+1) divides C(sk+k, k)") {
  for (int s = 1; s <= 6; ++s)
    for (int k = 0; k <= 20; ++k) {
      const BigInt c = binomial(static_cast<long>(s) * k + k, k);
      CHECK(c % (static_cast<long>(s) * k + 1) == 0);
    }
}

TEST_CASE("values exceed 64-bit words") {
  // s=6, k=20: C(140,20)/121 has ~24 digits
  CHECK(fuss_catalan(6, 20) > BigInt("18446744073709551615"));
}

TEST_CASE("fuss_catalan_polynomial hand anchors") {
  CHECK(fuss_catalan_polynomial(3, 1, Rational(5, 2)) == Rational(5, 2));  // m_1(t) = t
  CHECK(fuss_catalan_polynomial(2, 3, 1) == 12);                           // cross-oracle
  CHECK(fuss_catalan_polynomial(1, 2, 2) == 6);  // j=1 gives 2, j=2 gives 4
  CHECK(fuss_catalan_polynomial(4, 0, Rational(7, 3)) == 1);
}

TEST_CASE("fuss_catalan_polynomial rejects negative t") {
  CHECK_THROWS_AS(fuss_catalan_polynomial(2, 3, Rational(-1, 2)), std::invalid_argument);
}

TEST_CASE("polynomial specialization at t = 1") {
  for (int s = 1; s <= 5; ++s)
    for (int k = 0; k <= 12; ++k)
      CHECK(fuss_catalan_polynomial(s, k, 1) == Rational(fuss_catalan(s, k)));
}

TEST_CASE("moment_sequence batches") {
  const auto s2 = moment_sequence({2, 1}, 4);
  const std::vector<Rational> want2{1, 1, 3, 12, 55};
  CHECK(s2.values == want2);

  const auto s1 = moment_sequence({1, 1}, 4);
  const std::vector<Rational> want1{1, 1, 2, 5, 14};  // Catalan
  CHECK(s1.values == want1);

  const auto degenerate = moment_sequence({1, 0}, 2);
  const std::vector<Rational> want0{1, 0, 0};
  CHECK(degenerate.values == want0);
}

TEST_CASE("monotone growth at t = 1") {
  for (int s = 1; s <= 5; ++s) {
    const auto seq = moment_sequence({s, 1}, 14);
    for (size_t k = 0; k + 1 < seq.values.size(); ++k)
      CHECK(seq.values[k + 1] >= seq.values[k]);
  }
}

TEST_CASE("beta_ratio_parameters shape") {
  const auto p = beta_ratio_parameters(2);
  REQUIRE(p.upper.size() == 2);
  REQUIRE(p.lower.size() == 3);
  CHECK(p.upper[0] == Rational(1, 3));
  CHECK(p.upper[1] == Rational(2, 3));
  CHECK(p.lower[0] == Rational(1, 2));
  CHECK(p.lower[1] == 1);
  CHECK(p.lower[2] == Rational(3, 2));  // 1 + 1/s
  CHECK(p.edge == Rational(27, 4));

  // b_j > a_j > 0 for s > 1; equality b_1 = a_1 at s = 1
  for (int s = 2; s <= 6; ++s) {
    const auto q = beta_ratio_parameters(s);
    for (int j = 0; j < s; ++j) {
      CHECK(q.upper[static_cast<size_t>(j)] > 0);
      CHECK(q.lower[static_cast<size_t>(j)] > q.upper[static_cast<size_t>(j)]);
    }
  }
  const auto one = beta_ratio_parameters(1);
  CHECK(one.upper[0] == one.lower[0]);
}

TEST_CASE("beta_ratio_term anchors") {
  CHECK(beta_ratio_term(1, 0) == Rational(1, 2));
  CHECK(beta_ratio_term(2, 0) == Rational(1, 2));
  // beta_2/beta_1 = (m_2 2!/4!) / (m_1 1!/2!) = (1/4)/(1/2)
  CHECK(beta_ratio_term(2, 1) == Rational(1, 2));
}

TEST_CASE("exact ratio identity beta_{k+1}/beta_k") {
  for (int s = 1; s <= 5; ++s) {
    for (int k = 0; k <= 12; ++k) {
      const Rational beta_k(fuss_catalan(s, k) * factorial(k), factorial(2 * k));
      const Rational beta_k1(fuss_catalan(s, k + 1) * factorial(k + 1), factorial(2 * k + 2));
      CHECK(beta_k1 / beta_k == beta_ratio_term(s, k));
    }
  }
}

TEST_CASE("support_edge values") {
  CHECK(support_edge(1) == 4);
  CHECK(support_edge(2) == Rational(27, 4));
  CHECK(support_edge(3) == Rational(256, 27));
}

TEST_CASE("rational string round trips") {
  CHECK(rational_from_string("1/2") == Rational(1, 2));
  CHECK(rational_from_string("-7/3") == Rational(-7, 3));
  CHECK(rational_from_string("12") == 12);
  CHECK(to_fraction_string(Rational(12)) == "12");
  CHECK(to_fraction_string(Rational(5, 10)) == "1/2");
  CHECK_THROWS_AS(rational_from_string("x/y"), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string("1/0"), std::invalid_argument);
  CHECK(rational_pow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(rational_pow(Rational(2, 3), -2) == Rational(9, 4));
}
