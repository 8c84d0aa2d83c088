#include "catch_amalgamated.hpp"

#include "semireach/gl2z_sets.hpp"
#include "semireach/oracle.hpp"
#include "support.hpp"

using namespace semireach;
using namespace semireach::gl2z;
using semireach::testing::Q;

namespace {

int sign(const Integer& x) { return sgn(x); }

Rational pair(const HalfSpaceQuery2& q, const Mat2& m) {
  return q.u[0] * (m.a11 * q.v[0] + m.a12 * q.v[1]) + q.u[1] * (m.a21 * q.v[0] + m.a22 * q.v[1]);
}

const Mat2 kR = Mat2::of(0, -1, 1, 1);

}  // namespace

TEST_CASE("sign pattern examples") {
  const auto sr = canonical_shape(parse_word("SR"));
  REQUIRE(sr);
  CHECK(sr->beta == 1);
  CHECK(sr->n == 1);
  const SignPattern all_neg{{{-1, -1}, {-1, -1}}};
  CHECK(canonical_sign_pattern(0, 0, 1, 1, 0) == all_neg);
  CHECK(sign_compatible(canonical_sign_pattern(0, 0, 1, 1, 0), sign_pattern_of(phi_eval(parse_word("SR")))));

  CHECK(phi_eval(parse_word("SRSRR")) == Mat2::of(2, 1, 1, 1));
  const SignPattern all_pos{{{1, 1}, {1, 1}}};
  CHECK(canonical_sign_pattern(0, 0, 1, 2, 0) == all_pos);

  const SignPattern a = canonical_sign_pattern(0, 0, 1, 2, 0);
  const SignPattern b = canonical_sign_pattern(0, 0, 1, 2, 1);
  for (int i = 0; i < 2; ++i) {
    CHECK(b[i][0] == a[i][1]);
    CHECK(b[i][1] == -a[i][0]);
  }
  CHECK_THROWS_AS(canonical_sign_pattern(0, 0, 1, 0, 0), std::invalid_argument);
}

TEST_CASE("sign patterns hold for every canonical word up to length 10") {
  for (const Word& w : enumerate_canonical(10)) {
    const auto shape = canonical_shape(w);
    REQUIRE(shape);
    if (shape->n == 0) continue;
    const SignPattern p =
        canonical_sign_pattern(shape->delta, shape->gamma, shape->beta, shape->n, shape->epsilon);
    const Mat2 m = phi_eval(w);
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j)
        if (m.at(i, j) != 0) REQUIRE(sign(m.at(i, j)) == p[i - 1][j - 1]);
  }
}

TEST_CASE("pos_set examples") {
  const Word sr = parse_word("SR");
  CHECK(pos_set(2, 1).contains(sr));
  CHECK_FALSE(pos_set(1, 1).contains(sr));
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) CHECK(pos_set(i, j).contains(Word{}));
  CHECK_THROWS_AS(pos_set(3, 1), std::out_of_range);
}

TEST_CASE("entry_value_set examples") {
  CHECK(entry_value_set(2, 1, 0).contains(Word{}));
  CHECK(entry_value_set(2, 1, 0).contains(parse_word("XSR")));
  CHECK_FALSE(entry_value_set(2, 1, 0).contains(parse_word("R")));
  CHECK(entry_value_set(1, 1, 1).contains(Word{}));
  CHECK(entry_value_set(1, 1, 1).contains(parse_word("XSR")));
}

TEST_CASE("pos_set and entry_value_set match evaluation up to length 10") {
  const auto words = enumerate_canonical(10);
  for (int i = 1; i <= 2; ++i) {
    for (int j = 1; j <= 2; ++j) {
      const RegularSubset pos = pos_set(i, j);
      for (const Word& w : words) REQUIRE(pos.contains(w) == (phi_eval(w).at(i, j) >= 0));
      for (long k = -3; k <= 3; ++k) {
        const RegularSubset eq = entry_value_set(i, j, k);
        for (const Word& w : words) REQUIRE(eq.contains(w) == (phi_eval(w).at(i, j) == k));
      }
    }
  }
}

TEST_CASE("entry_bound_set examples and evaluation") {
  CHECK(entry_bound_set(1, 1, 1, BoundDir::Geq).contains(Word{}));
  CHECK_FALSE(entry_bound_set(1, 1, 1, BoundDir::Geq).contains(parse_word("X")));
  CHECK(entry_bound_set(1, 1, 2, BoundDir::Geq).contains(parse_word("SRSRR")));
  const auto words = enumerate_canonical(8);
  const RegularSubset ge = entry_bound_set(1, 1, -1, BoundDir::Geq);
  const RegularSubset alt = regular_union(pos_set(1, 1), entry_value_set(1, 1, -1));
  for (const Word& w : words) REQUIRE(ge.contains(w) == alt.contains(w));
  for (long k = -3; k <= 3; ++k) {
    const RegularSubset g = entry_bound_set(2, 2, k, BoundDir::Geq);
    const RegularSubset l = entry_bound_set(1, 2, k, BoundDir::Leq);
    for (const Word& w : words) {
      REQUIRE(g.contains(w) == (phi_eval(w).at(2, 2) >= k));
      REQUIRE(l.contains(w) == (phi_eval(w).at(1, 2) <= k));
    }
  }
}

TEST_CASE("normalize_query examples") {
  const auto a = normalize_query({{Q(2), Q(0)}, {Q(0), Q(3)}, Q(5)});
  CHECK(a.u == std::array<Rational, 2>{Q(1), Q(0)});
  CHECK(a.v == std::array<Rational, 2>{Q(0), Q(1)});
  CHECK(a.lambda == 1);
  const auto b = normalize_query({{Q(1, 2), Q(1, 3)}, {Q(1), Q(0)}, Q(0)});
  CHECK(b.u == std::array<Rational, 2>{Q(3), Q(2)});
  const auto c = normalize_query({{Q(1), Q(0)}, {Q(1), Q(0)}, Q(-1, 2)});
  CHECK(c.lambda == 0);
}

TEST_CASE("halfspace_set examples") {
  const RegularSubset h = halfspace_set({{Q(0), Q(1)}, {Q(1), Q(0)}, Q(1)});
  CHECK(h.contains(kR));
  const RegularSubset g = halfspace_set({{Q(1), Q(0)}, {Q(1), Q(0)}, Q(-1)});
  CHECK(g.contains(Mat2::identity()));
  CHECK(g.contains(-Mat2::identity()));
  const auto words = enumerate_canonical(6);
  const RegularSubset zero_le = halfspace_set({{Q(0), Q(0)}, {Q(1), Q(2)}, Q(0)});
  const RegularSubset zero_gt = halfspace_set({{Q(0), Q(0)}, {Q(1), Q(2)}, Q(1)});
  for (const Word& w : words) {
    CHECK(zero_le.contains(w));
    CHECK_FALSE(zero_gt.contains(w));
  }
}

TEST_CASE("halfspace_set matches evaluation on random queries") {
  std::mt19937 rng(53);
  std::uniform_int_distribution<long> d(-3, 3);
  const auto words = enumerate_canonical(8);
  for (int it = 0; it < 12; ++it) {
    const HalfSpaceQuery2 q{{Q(d(rng)), Q(d(rng))}, {Q(d(rng)), Q(d(rng))}, Q(d(rng) * 2, 1 + rng() % 3)};
    const RegularSubset h = halfspace_set(q);
    for (const Word& w : words) REQUIRE(h.contains(w) == (pair(q, phi_eval(w)) >= q.lambda));
  }
}

TEST_CASE("semigroup_set examples") {
  auto images = [](const RegularSubset& l) {
    std::set<std::string> out;
    for (const Word& w : automata::accepted_words(l.nfa(), 10)) out.insert(to_string(phi_eval(w)));
    return out;
  };
  CHECK(images(semigroup_set({kR})).size() == 6);
  CHECK(images(semigroup_set({-Mat2::identity()})) ==
        std::set<std::string>{to_string(Mat2::identity()), to_string(-Mat2::identity())});
  CHECK(images(semigroup_set({Mat2::identity()})) == std::set<std::string>{to_string(Mat2::identity())});
  CHECK_THROWS_AS(semigroup_set({Mat2::of(2, 0, 0, 1)}), std::invalid_argument);
}

TEST_CASE("decide_halfspace_gl2z examples") {
  const HalfSpaceQuery2 q1{{Q(0), Q(1)}, {Q(1), Q(0)}, Q(1)};
  const Verdict yes = decide_halfspace_gl2z({kR}, q1);
  CHECK(yes.is_yes());
  REQUIRE(yes.witness);
  Mat2 m = Mat2::identity();
  for (std::size_t i : *yes.witness) m = m * kR;
  CHECK(pair(q1, m) >= 1);
  CHECK(decide_halfspace_gl2z({kR}, {{Q(0), Q(1)}, {Q(1), Q(0)}, Q(2)}).is_no());
  CHECK(decide_halfspace_gl2z({Mat2::identity()}, {{Q(2), Q(1)}, {Q(1), Q(1)}, Q(3)}).is_yes());
  CHECK(decide_halfspace_gl2z({Mat2::identity()}, {{Q(2), Q(1)}, {Q(1), Q(1)}, Q(4)}).is_no());
}

TEST_CASE("decide_membership_gl2z examples") {
  CHECK(decide_membership_gl2z({kR}, kR * kR).is_yes());
  const Verdict id = decide_membership_gl2z({kR}, Mat2::identity());
  REQUIRE(id.is_yes());
  REQUIRE(id.witness);
  CHECK(id.witness->size() == 6);
  CHECK(decide_membership_gl2z({kR}, letter_matrix(Letter::S)).is_no());
}
