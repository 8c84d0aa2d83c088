#include "catch_amalgamated.hpp"

#include "semireach/halfspace_heis.hpp"
#include "support.hpp"

#include <algorithm>

using namespace semireach;
using namespace semireach::heis;
using semireach::testing::Q;
using semireach::testing::T;

namespace {

const RationalVec e1{Q(1), Q(0), Q(0)};
const RationalVec e3{Q(0), Q(0), Q(1)};
const HeisTriple A = T(1, 0, 0);
const HeisTriple B = T(0, 1, 0);
const HeisTriple C = T(1, 1, 0);

IntegerVec ints(std::initializer_list<long> xs) {
  IntegerVec out;
  for (long x : xs) out.push_back(Integer(x));
  return out;
}

// Every point of [0, box]^k except the origin, in lexicographic order.
template <class F>
void each_point(std::size_t k, long box, F f) {
  IntegerVec x(k, Integer(0));
  while (true) {
    std::size_t i = 0;
    while (i < k && x[i] == box) x[i++] = 0;
    if (i == k) return;
    x[i] += 1;
    f(x);
  }
}

}  // namespace

TEST_CASE("delta_of_sequence examples") {
  CHECK(delta_of_sequence({A, B}) == 1);
  CHECK(delta_of_sequence({B, A}) == -1);
  CHECK(delta_of_sequence({A, B, A}) == 0);
  CHECK(delta_of_sequence({}) == 0);
}

TEST_CASE("purify_sequence examples") {
  const auto p = purify_sequence({A, B, A});
  CHECK(p == std::vector<HeisTriple>{A, A, B});
  CHECK(delta_of_sequence(p) == 2);
  const std::vector<HeisTriple> pure{A, A, C, B};
  CHECK(purify_sequence(pure) == pure);
  const std::vector<HeisTriple> same{C, C, C};
  CHECK(purify_sequence(same) == same);
  CHECK(delta_of_sequence(same) == 0);
  CHECK_THROWS_AS(purify_sequence({}), std::invalid_argument);
  CHECK(is_pure({A, A, B}));
  CHECK_FALSE(is_pure({A, B, A}));
}

TEST_CASE("purification never lowers delta") {
  const std::vector<HeisTriple> letters{A, B, C};
  for (std::size_t len = 1; len <= 5; ++len) {
    std::vector<std::size_t> idx(len, 0);
    while (true) {
      std::vector<HeisTriple> seq;
      for (std::size_t i : idx) seq.push_back(letters[i]);
      const std::vector<std::size_t> order = purify_order(seq);
      std::vector<std::size_t> sorted = order;
      std::sort(sorted.begin(), sorted.end());
      for (std::size_t i = 0; i < len; ++i) REQUIRE(sorted[i] == i);
      const auto out = purify_sequence(seq);
      REQUIRE(is_pure(out));
      REQUIRE(delta_of_sequence(out) >= delta_of_sequence(seq));
      std::size_t i = 0;
      while (i < len && idx[i] == 2) idx[i++] = 0;
      if (i == len) break;
      ++idx[i];
    }
  }
}

TEST_CASE("quadratic_for_permutation examples") {
  const QuadPoly q = quadratic_for_permutation({C}, {0}, e1, e3);
  for (long n = 0; n <= 8; ++n) CHECK(q.eval(ints({n})) == Q(n * (n - 1), 2));

  const QuadPoly ab = quadratic_for_permutation({A, B}, {0, 1}, e1, e3);
  const QuadPoly ba = quadratic_for_permutation({A, B}, {1, 0}, e1, e3);
  for (long x = 0; x <= 5; ++x)
    for (long y = 0; y <= 5; ++y) {
      CHECK(ab.eval(ints({x, y})) == x * y);
      CHECK(ba.eval(ints({x, y})) == 0);
    }
}

TEST_CASE("quadratic_for_permutation matches direct products") {
  std::mt19937 rng(79);
  for (int it = 0; it < 60; ++it) {
    const std::size_t n = 3 + it % 2;
    const std::size_t k = 1 + rng() % 3;
    std::vector<HeisTriple> gens;
    for (std::size_t i = 0; i < k; ++i) gens.push_back(testing::random_triple(rng, n, 3, 2));
    RationalVec u, v;
    for (std::size_t i = 0; i < n; ++i) {
      u.push_back(testing::random_rational(rng, 3, 2));
      v.push_back(testing::random_rational(rng, 3, 2));
    }
    std::vector<std::size_t> sigma(k);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::shuffle(sigma.begin(), sigma.end(), rng);
    const QuadPoly q = quadratic_for_permutation(gens, sigma, u, v);
    for (int s = 0; s < 10; ++s) {
      IntegerVec x;
      std::vector<HeisTriple> seq;
      for (std::size_t i = 0; i < k; ++i) {
        const long e = static_cast<long>(rng() % 7);
        x.push_back(Integer(e));
        for (long r = 0; r < e; ++r) seq.push_back(gens[sigma[i]]);
      }
      const testing::Matrix m =
          seq.empty() ? testing::to_matrix(HeisTriple(n)) : testing::mat_product(seq);
      REQUIRE(q.eval(x) == testing::bilinear(u, m, v));
    }
  }
}

TEST_CASE("decide_quadratic_geq examples") {
  QuadPoly tri(1);
  tri.h[0][0] = Q(1, 2);
  tri.g[0] = Q(-1, 2);
  const QuadOutcome a = decide_quadratic_geq(tri, 10);
  CHECK(a.kind == VerdictKind::Yes);
  CHECK(a.point == ints({5}));

  QuadPoly neg(1);
  neg.h[0][0] = -1;
  CHECK(decide_quadratic_geq(neg, 1).kind == VerdictKind::No);

  QuadPoly prod(2);
  prod.h[0][1] = prod.h[1][0] = Q(1, 2);
  const QuadOutcome c = decide_quadratic_geq(prod, 4);
  CHECK(c.kind == VerdictKind::Yes);
  CHECK(c.point == ints({2, 2}));
}

TEST_CASE("decide_quadratic_geq certificates") {
  // Concave with a positive mixed term: only the concavity certificate applies.
  QuadPoly q(2);
  q.h[0][0] = -2;
  q.h[1][1] = -2;
  q.h[0][1] = q.h[1][0] = 1;
  q.g = {Q(3), Q(3)};
  const QuadOutcome no = decide_quadratic_geq(q, 10);
  CHECK(no.kind == VerdictKind::No);
  CHECK(std::string(no.reason) == "concave");

  // Unbounded along a ray beyond the box.
  QuadPoly r(1);
  r.g[0] = 1;
  const QuadOutcome ray = decide_quadratic_geq(r, 1000, {.bound = 8});
  CHECK(ray.kind == VerdictKind::Yes);
  CHECK(r.eval(*ray.point) >= 1000);

  // Indefinite with no reachable value in the box: open.
  QuadPoly open(2);
  open.h[0][0] = -1;
  open.h[0][1] = open.h[1][0] = 1;
  open.h[1][1] = -1;
  const QuadOutcome u = decide_quadratic_geq(open, 1, {.bound = 8});
  CHECK(u.kind == VerdictKind::Unknown);
}

TEST_CASE("decide_quadratic_geq never contradicts enumeration") {
  std::mt19937 rng(83);
  std::uniform_int_distribution<long> d(-3, 3);
  int decided = 0;
  for (int it = 0; it < 150; ++it) {
    const std::size_t k = 1 + rng() % 3;
    QuadPoly q(k);
    for (std::size_t i = 0; i < k; ++i) {
      q.g[i] = Q(d(rng), 2);
      for (std::size_t j = i; j < k; ++j) q.h[i][j] = q.h[j][i] = Q(d(rng), 2);
    }
    q.constant = d(rng);
    const Rational lambda = d(rng) * 4;
    const QuadOutcome out = decide_quadratic_geq(q, lambda);
    if (out.kind == VerdictKind::Yes) {
      ++decided;
      REQUIRE(out.point);
      REQUIRE(q.eval(*out.point) >= lambda);
    } else if (out.kind == VerdictKind::No) {
      ++decided;
      bool hit = false;
      each_point(k, 12, [&](const IntegerVec& x) { hit = hit || q.eval(x) >= lambda; });
      REQUIRE_FALSE(hit);
    }
  }
  CHECK(decided > 100);
}

TEST_CASE("decide_halfspace_heis examples") {
  const Verdict a = decide_halfspace_heis({A, B}, e1, e3, 4);
  REQUIRE(a.is_yes());
  REQUIRE(a.witness);
  CHECK(*a.witness == std::vector<std::size_t>{0, 0, 1, 1});
  const HeisTriple neg = T(1, -1, 0);
  CHECK(decide_halfspace_heis({neg}, e1, e3, 1).is_no());
  const Verdict z = decide_halfspace_heis({neg}, e1, e3, 0);
  REQUIRE(z.is_yes());
  CHECK(*z.witness == std::vector<std::size_t>{0});
  CHECK_THROWS_AS(decide_halfspace_heis({A}, {Q(1), Q(0)}, e3, 0), std::invalid_argument);
}

TEST_CASE("decide_halfspace_heis witnesses satisfy the inequality") {
  std::mt19937 rng(89);
  std::uniform_int_distribution<long> d(-3, 3);
  for (int it = 0; it < 80; ++it) {
    const std::size_t k = 1 + rng() % 3;
    std::vector<HeisTriple> gens;
    for (std::size_t i = 0; i < k; ++i) gens.push_back(testing::random_int_triple(rng, -3, 3));
    const RationalVec u{Q(d(rng)), Q(d(rng)), Q(d(rng))};
    const RationalVec v{Q(d(rng)), Q(d(rng)), Q(d(rng))};
    const Rational lambda = d(rng) * 3;
    const HalfspaceReport rep = decide_halfspace_heis_report(gens, u, v, lambda);
    if (rep.verdict.is_yes() && rep.verdict.witness) {
      REQUIRE(heis_bilinear(u, heis_product(gens, *rep.verdict.witness, 3), v) >= lambda);
    }
  }
}
