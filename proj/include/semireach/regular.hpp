#pragma once

// Regular subsets of GL(2,Z), represented by automata that accept canonical
// words only. Because each matrix has exactly one canonical word, Boolean
// operations on the matrix sets are plain language operations on these
// automata.

#include "semireach/nfa.hpp"

namespace semireach::gl2z {

class RegularSubset {
 public:
  /// The empty subset.
  RegularSubset();

  const automata::Nfa& nfa() const { return nfa_; }

  bool contains(const Word& canonical) const { return nfa_.accepts(canonical); }
  bool contains(const Mat2& m) const { return nfa_.accepts(canonical_word(m)); }

  /// Wraps an automaton after checking that it accepts only canonical words.
  /// Throws std::invalid_argument otherwise.
  static RegularSubset from_canonical_nfa(automata::Nfa a);

  /// All of GL(2,Z): the language of canonical words.
  static RegularSubset all();

  friend RegularSubset canonicalize_nfa(const automata::Nfa& a);

 private:
  explicit RegularSubset(automata::Nfa a) : nfa_(std::move(a)) {}

  automata::Nfa nfa_;
};

/// The deterministic automaton of all canonical words.
automata::Nfa canonical_words_dfa();

/// Can(A): an automaton accepting only canonical words whose phi-image equals
/// phi(L(A)).
///
/// Construction:
///  1. N and X are moved into the state. A state (q, r, x) records the parity r
///     of N's still to be read and the parity x of X's still to be produced;
///     both are guessed at the start. Since N w = c(w) N with c(S) = SX and
///     c(R) = SRRS, a letter read while r = 1 is emitted conjugated. What is
///     left is an automaton over {S, R} with epsilon moves.
///  2. Saturation: whenever a path spells SS or RRR, an epsilon shortcut to the
///     same target with x flipped is added, until nothing changes. X is central,
///     so flipping x at any point of the path is equivalent.
///  3. The result is intersected with the canonical {S, R}-shape and prefixed
///     with N^r0 X^x0 for the guessed initial parities.
RegularSubset canonicalize_nfa(const automata::Nfa& a);

enum class BoolOp { Union, Intersection, Complement };

/// Complement takes only `lhs` and is relative to all canonical words.
RegularSubset regular_bool_op(BoolOp op, const RegularSubset& lhs,
                              const RegularSubset* rhs = nullptr);

RegularSubset regular_union(const RegularSubset& a, const RegularSubset& b);
RegularSubset regular_intersection(const RegularSubset& a, const RegularSubset& b);
RegularSubset regular_complement(const RegularSubset& a);
RegularSubset regular_difference(const RegularSubset& a, const RegularSubset& b);

bool regular_is_empty(const RegularSubset& l);

}  // namespace semireach::gl2z
