#include "catch_amalgamated.hpp"

#include "semireach/heisenberg.hpp"
#include "support.hpp"

using namespace semireach;
using semireach::testing::Q;
using semireach::testing::T;

namespace {

LieTriple L(const Rational& a, const Rational& b, const Rational& c) { return LieTriple({a}, {b}, c); }

}  // namespace

TEST_CASE("rational parsing round-trips") {
  CHECK(parse_rational("3/6") == Q(1, 2));
  CHECK(parse_rational("-4") == Q(-4));
  CHECK(parse_rational(" 7 / -14 ") == Q(-1, 2));
  CHECK(to_string(parse_rational("10/4")) == "5/2");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  std::mt19937 rng(3);
  for (int i = 0; i < 200; ++i) {
    const Rational r = testing::random_rational(rng, 50, 9);
    CHECK(parse_rational(to_string(r)) == r);
  }
}

TEST_CASE("heis_mul examples") {
  CHECK(heis_mul(T(1, 0, 0), T(0, 1, 0)) == T(1, 1, 1));
  CHECK(heis_mul(T(0, 1, 0), T(1, 0, 0)) == T(1, 1, 0));
  CHECK(heis_mul(T(1, 1, 1), T(1, 1, 0)) == T(2, 2, 2));
}

TEST_CASE("heis_inv examples") {
  CHECK(heis_inv(T(1, 1, 1)) == T(-1, -1, 0));
  CHECK(heis_mul(T(1, 1, 1), heis_inv(T(1, 1, 1))).is_identity());
  CHECK(heis_inv(T(0, 0, 7)) == T(0, 0, -7));
  CHECK(heis_inv(HeisTriple(4)).is_identity());
}

TEST_CASE("heis_log and heis_exp examples") {
  CHECK(heis_log(T(1, 1, 1)) == L(1, 1, Q(1, 2)));
  CHECK(heis_log(T(0, 0, 5)) == L(0, 0, 5));
  CHECK(heis_log(HeisTriple(3)).is_zero());
  CHECK(heis_exp(L(1, 1, Q(1, 2))) == T(1, 1, 1));
  CHECK(heis_exp(LieTriple(3)).is_identity());
  CHECK(heis_exp(L(2, 2, 0)) == T(2, 2, 2));
}

TEST_CASE("lie_bracket examples") {
  const LieTriple x = heis_log(T(1, 0, 0));
  const LieTriple y = heis_log(T(0, 1, 0));
  CHECK(lie_bracket(x, y) == L(0, 0, 1));
  CHECK(lie_bracket(x, x).is_zero());
  std::mt19937 rng(11);
  for (int i = 0; i < 50; ++i) {
    const LieTriple a = heis_log(testing::random_triple(rng, 4, 3, 4));
    const LieTriple b = heis_log(testing::random_triple(rng, 4, 3, 4));
    const LieTriple c = heis_log(testing::random_triple(rng, 4, 3, 4));
    CHECK(lie_bracket(lie_bracket(a, b), c).is_zero());
    CHECK(lie_bracket(a, b) == lie_bracket(b, a) * Rational(-1));
    CHECK(lie_bracket(a + b, c) == lie_bracket(a, c) + lie_bracket(b, c));
  }
}

TEST_CASE("bch_log_product examples") {
  const std::vector<HeisTriple> two{T(1, 0, 0), T(0, 1, 0)};
  CHECK(bch_log_product(two) == L(1, 1, Q(1, 2)));
  CHECK(bch_log_product(two) == heis_log(T(1, 1, 1)));
  const std::vector<HeisTriple> three{T(1, 0, 0), T(0, 1, 0), T(1, 1, 0)};
  CHECK(bch_log_product(three) == L(2, 2, 0));
  const std::vector<HeisTriple> one{T(3, -2, 5)};
  CHECK(bch_log_product(one) == heis_log(T(3, -2, 5)));
}

TEST_CASE("dimension mismatches are rejected") {
  CHECK_THROWS_AS(heis_mul(HeisTriple(3), HeisTriple(4)), std::invalid_argument);
  CHECK_THROWS_AS(HeisTriple(2), std::invalid_argument);
  CHECK_THROWS_AS(HeisTriple({Q(1)}, {Q(1), Q(2)}, Q(0)), std::invalid_argument);
}

TEST_CASE("group laws and agreement with full matrices") {
  std::mt19937 rng(17);
  for (int it = 0; it < 200; ++it) {
    const std::size_t n = 3 + it % 3;
    const HeisTriple x = testing::random_triple(rng, n, 4, 4);
    const HeisTriple y = testing::random_triple(rng, n, 4, 4);
    const HeisTriple z = testing::random_triple(rng, n, 4, 4);
    CHECK(heis_mul(heis_mul(x, y), z) == heis_mul(x, heis_mul(y, z)));
    CHECK(heis_exp(heis_log(x)) == x);
    CHECK(heis_log(heis_exp(heis_log(y))) == heis_log(y));
    CHECK(testing::to_matrix(heis_mul(x, y)) == testing::mat_mul(testing::to_matrix(x), testing::to_matrix(y)));
    CHECK(testing::to_matrix(heis_log(x)) == testing::mat_log(testing::to_matrix(x)));
    CHECK(heis_mul(x, heis_inv(x)).is_identity());
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 1; j <= n; ++j) CHECK(heis_entry(x, i, j) == testing::to_matrix(x)[i - 1][j - 1]);
  }
}

TEST_CASE("heis_pow matches repeated multiplication") {
  std::mt19937 rng(23);
  for (int it = 0; it < 50; ++it) {
    const HeisTriple x = testing::random_triple(rng, 3 + it % 2, 3, 3);
    HeisTriple acc(x.dim());
    for (std::size_t e = 0; e <= 6; ++e) {
      CHECK(heis_pow(x, e) == acc);
      acc = heis_mul(acc, x);
    }
  }
}

TEST_CASE("BCH formula is exact on random sequences") {
  std::mt19937 rng(29);
  for (int it = 0; it < 300; ++it) {
    const std::size_t n = 3 + it % 3;
    const std::size_t m = 1 + rng() % 8;
    std::vector<HeisTriple> seq;
    for (std::size_t i = 0; i < m; ++i) seq.push_back(testing::random_triple(rng, n, 3, 4));
    REQUIRE(bch_log_product(seq) == heis_log(heis_product(seq)));
    CHECK(testing::to_matrix(heis_product(seq)) == testing::mat_product(seq));
  }
}
