#pragma once

// Half-space reachability in H(n,Q): is u^T M v >= lambda for some M in the
// semigroup generated by G? Only products of the form A_s(1)^n1 ... A_s(k)^nk
// need to be considered, and each ordering s gives a quadratic polynomial in
// the exponents.

#include "semireach/heisenberg.hpp"
#include "semireach/verdict.hpp"

#include <optional>
#include <vector>

namespace semireach::heis {

/// delta(S): corner of the sum of [log S_i, log S_j] over i < j.
Rational delta_of_sequence(const std::vector<HeisTriple>& seq);

/// At most one block of consecutive equal elements per distinct element.
bool is_pure(const std::vector<HeisTriple>& seq);

/// A pure rearrangement of seq with delta not smaller. Throws
/// std::invalid_argument on an empty sequence.
std::vector<HeisTriple> purify_sequence(const std::vector<HeisTriple>& seq);

/// Same as purify_sequence, acting on positions: returns the permutation
/// (indices into seq) instead of the elements.
std::vector<std::size_t> purify_order(const std::vector<HeisTriple>& seq);

/// Q(x) = x^T H x + g^T x + constant with H symmetric.
struct QuadPoly {
  std::size_t k = 0;
  std::vector<RationalVec> h;
  RationalVec g;
  Rational constant;

  explicit QuadPoly(std::size_t vars = 0);
  Rational eval(const IntegerVec& x) const;
};

/// Q(n) = u^T A_sigma(1)^n1 ... A_sigma(k)^nk v. Variable i is the exponent of
/// gens[sigma[i]].
QuadPoly quadratic_for_permutation(const std::vector<HeisTriple>& gens,
                                   const std::vector<std::size_t>& sigma, const RationalVec& u,
                                   const RationalVec& v);

struct QuadOptions {
  /// Box enumeration covers max-norm up to this bound.
  std::size_t bound = 64;
  /// Largest finite box that is enumerated exhaustively for a NO certificate.
  std::size_t exhaustive_limit = 2000000;
};

struct QuadOutcome {
  VerdictKind kind = VerdictKind::Unknown;
  /// A point with Q >= lambda, for Yes.
  std::optional<IntegerVec> point;
  /// How the answer was obtained: "box", "ray", "finite", "concave" or "open".
  const char* reason = "open";
};

/// Is Q(n) >= lambda for some nonzero n in N^k? Yes and No are always correct;
/// Unknown means neither a point nor a certificate was found.
QuadOutcome decide_quadratic_geq(const QuadPoly& q, const Rational& lambda,
                                 const QuadOptions& opt = {});

struct HalfspaceReport {
  Verdict verdict;
  /// Yes: the ordering and exponents that were found.
  std::vector<std::size_t> sigma;
  IntegerVec exponents;
  std::size_t permutations = 0;
  std::size_t unknown_permutations = 0;
};

HalfspaceReport decide_halfspace_heis_report(const std::vector<HeisTriple>& gens,
                                             const RationalVec& u, const RationalVec& v,
                                             const Rational& lambda, const QuadOptions& opt = {});

Verdict decide_halfspace_heis(const std::vector<HeisTriple>& gens, const RationalVec& u,
                              const RationalVec& v, const Rational& lambda,
                              const QuadOptions& opt = {});

}  // namespace semireach::heis
