#pragma once

// The Heisenberg group H(n,Q) and its Lie algebra h(n,Q).
//
// An element of H(n,Q) is the unitriangular n x n matrix
//
//     [ 1  a^T  c ]
//     [ 0  I    b ]        a, b in Q^(n-2), c in Q,
//     [ 0  0    1 ]
//
// stored as the triple (a, b, c). Lie algebra elements use the same shape with
// zero diagonal; their c is the (1,n)-entry. Triples are the only
// representation used by the decision procedures.

#include "semireach/rational.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace semireach {

class HeisTriple {
 public:
  /// Identity of H(dim, Q). Requires dim >= 3.
  explicit HeisTriple(std::size_t dim);
  HeisTriple(RationalVec a, RationalVec b, Rational c);

  static HeisTriple identity(std::size_t dim) { return HeisTriple(dim); }

  std::size_t dim() const { return a_.size() + 2; }
  const RationalVec& a() const { return a_; }
  const RationalVec& b() const { return b_; }
  const Rational& c() const { return c_; }

  /// psi(a, b, c) = (a, b), a vector of length 2n-4.
  RationalVec psi() const;

  bool is_identity() const;
  bool is_integral() const;

  friend bool operator==(const HeisTriple&, const HeisTriple&) = default;

 private:
  RationalVec a_;
  RationalVec b_;
  Rational c_;
};

class LieTriple {
 public:
  explicit LieTriple(std::size_t dim);
  LieTriple(RationalVec a, RationalVec b, Rational c);

  std::size_t dim() const { return a_.size() + 2; }
  const RationalVec& a() const { return a_; }
  const RationalVec& b() const { return b_; }
  const Rational& c() const { return c_; }

  bool is_zero() const;

  LieTriple operator+(const LieTriple& other) const;
  LieTriple operator*(const Rational& s) const;

  friend bool operator==(const LieTriple&, const LieTriple&) = default;

 private:
  RationalVec a_;
  RationalVec b_;
  Rational c_;
};

/// (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a^T b'). Throws on dimension mismatch.
HeisTriple heis_mul(const HeisTriple& x, const HeisTriple& y);
HeisTriple heis_inv(const HeisTriple& x);
HeisTriple heis_pow(const HeisTriple& x, std::size_t exponent);

/// Left-to-right product of a nonempty sequence.
HeisTriple heis_product(std::span<const HeisTriple> seq);

/// Product of generators selected by (zero-based) indices; identity if empty.
HeisTriple heis_product(std::span<const HeisTriple> generators,
                        std::span<const std::size_t> word, std::size_t dim);

/// log(A) = (A - I) - (A - I)^2 / 2 = (a, b, c - a^T b / 2).
LieTriple heis_log(const HeisTriple& x);
/// exp(B) = I + B + B^2 / 2 = (a, b, c + a^T b / 2).
HeisTriple heis_exp(const LieTriple& l);

/// [x, y] = xy - yx; only the corner survives: x.a^T y.b - y.a^T x.b.
LieTriple lie_bracket(const LieTriple& x, const LieTriple& y);

/// Corner entry of [x, y].
Rational bracket_corner(const LieTriple& x, const LieTriple& y);

/// Baker-Campbell-Hausdorff in h(n): sum log B_i + 1/2 sum_{i<j} [log B_i, log B_j].
/// The expansion is exact because every nested bracket vanishes.
LieTriple bch_log_product(std::span<const HeisTriple> seq);

/// Entry (i, j), 1-based, of the n x n matrix the triple encodes.
Rational heis_entry(const HeisTriple& x, std::size_t row, std::size_t col);

/// u^T A v for vectors of length n.
Rational heis_bilinear(const RationalVec& u, const HeisTriple& x, const RationalVec& v);

std::string to_string(const HeisTriple& x);
std::string to_string(const LieTriple& x);

struct HeisTripleHash {
  std::size_t operator()(const HeisTriple& x) const;
};

}  // namespace semireach
