#pragma once

// Regular subsets of GL(2,Z) defined by entry conditions, half-spaces and
// finitely generated semigroups, and the decision procedures built on them.

#include "semireach/regular.hpp"
#include "semireach/verdict.hpp"

#include <array>
#include <optional>
#include <vector>

namespace semireach::gl2z {

/// Entry signs: +1, -1, or 0 for "*" (a zero entry, matching anything).
using SignPattern = std::array<std::array<int, 2>, 2>;

/// a ~ b: every entry agrees or one of the two is *.
bool sign_compatible(const SignPattern& a, const SignPattern& b);

SignPattern sign_pattern_of(const Mat2& m);

/// Parameters of a canonical word N^d X^g S^b R^a1 S ... S R^an S^e.
struct CanonicalShape {
  int delta = 0, gamma = 0, beta = 0;
  std::size_t n = 0;
  int epsilon = 0;
};

/// Shape of a canonical word; std::nullopt if w is not canonical.
std::optional<CanonicalShape> canonical_shape(const Word& w);

/// Sign pattern of phi(w) for canonical w with n >= 1 R-blocks. Throws
/// std::invalid_argument for n = 0, where entries must be evaluated directly.
SignPattern canonical_sign_pattern(int delta, int gamma, int beta, std::size_t n, int epsilon);

/// {M : M_ij >= 0}.
RegularSubset pos_set(int i, int j);

/// {M : M_ij = k}.
RegularSubset entry_value_set(int i, int j, long k);

enum class BoundDir { Geq, Leq };

/// {M : M_ij >= k} or {M : M_ij <= k}.
RegularSubset entry_bound_set(int i, int j, long k, BoundDir dir);

struct HalfSpaceQuery2 {
  std::array<Rational, 2> u, v;
  Rational lambda;
};

/// Integer coprime u and v and integer lambda with the same solution set.
/// Zero vectors are left as they are.
HalfSpaceQuery2 normalize_query(const HalfSpaceQuery2& q);

/// {M : u^T M v >= lambda}.
RegularSubset halfspace_set(const HalfSpaceQuery2& q);

/// The semigroup generated by G (nonempty products). Throws
/// std::invalid_argument if some generator is not in GL(2,Z).
RegularSubset semigroup_set(const std::vector<Mat2>& gens);

struct Gl2zOptions {
  /// Depth of the witness search run after a positive emptiness check.
  std::size_t witness_depth = 16;
  bool want_witness = true;
};

/// Is there M in <G> with u^T M v >= lambda?
Verdict decide_halfspace_gl2z(const std::vector<Mat2>& gens, const HalfSpaceQuery2& q,
                              const Gl2zOptions& opt = {});

/// Is target in <G>?
Verdict decide_membership_gl2z(const std::vector<Mat2>& gens, const Mat2& target,
                               const Gl2zOptions& opt = {});

}  // namespace semireach::gl2z
