#pragma once

// GL(2,Z) and its word encoding over the alphabet {X, N, S, R}:
//
//   X = -I,  N = [[1,0],[0,-1]],  S = [[0,-1],[1,0]],  R = [[0,-1],[1,1]].
//
// Every matrix has exactly one canonical word
//
//   N^d X^g S^b R^a1 S R^a2 ... S R^an S^e,   d,g,b,e in {0,1}, a_i in {1,2},
//
// i.e. no factor SS or RRR, N only first, X only first or right after N.

#include "semireach/rational.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace semireach::gl2z {

enum class Letter : std::uint8_t { X = 0, N = 1, S = 2, R = 3 };

inline constexpr std::array<Letter, 4> kAlphabet = {Letter::X, Letter::N, Letter::S, Letter::R};

using Word = std::vector<Letter>;

char to_char(Letter l);
std::optional<Letter> letter_from_char(char c);

/// Parses a word such as "NXSRR". Throws std::invalid_argument on other characters.
Word parse_word(std::string_view text);
std::string to_string(const Word& w);

struct Mat2 {
  Integer a11 = 1, a12 = 0, a21 = 0, a22 = 1;

  static Mat2 identity() { return {}; }
  static Mat2 of(long a11, long a12, long a21, long a22) {
    return Mat2{Integer(a11), Integer(a12), Integer(a21), Integer(a22)};
  }

  Integer det() const { return a11 * a22 - a12 * a21; }
  bool in_gl2z() const {
    Integer d = det();
    return d == 1 || d == -1;
  }

  /// 1-based entry access.
  const Integer& at(int i, int j) const;

  Mat2 transpose() const { return Mat2{a11, a21, a12, a22}; }

  friend bool operator==(const Mat2&, const Mat2&) = default;
};

Mat2 operator*(const Mat2& x, const Mat2& y);
Mat2 operator-(const Mat2& x);

/// Inverse of a GL(2,Z) matrix. Throws std::invalid_argument if det is not +-1.
Mat2 inverse(const Mat2& m);

std::string to_string(const Mat2& m);

struct Mat2Hash {
  std::size_t operator()(const Mat2& m) const;
};

Mat2 letter_matrix(Letter l);

/// phi: Sigma* -> GL(2,Z), product of the letter images left to right.
Mat2 phi_eval(const Word& w);

/// States of the deterministic recognizer for canonical words. Every state is
/// accepting; a missing transition means the word is not canonical.
enum class CanonState : std::uint8_t {
  Start,    // nothing read
  AfterN,   // N
  AfterX,   // N^d X
  LeadS,    // N^d X^g S, before the first R-block
  R1,       // inside an R-block, one R read
  R2,       // inside an R-block, two R read
  TailS,    // S read after an R-block
};

inline constexpr int kCanonStateCount = 7;

std::optional<CanonState> canon_step(CanonState q, Letter l);

bool is_canonical(const Word& w);

/// The unique canonical word w with phi(w) = m. Throws std::invalid_argument
/// when det(m) is not +-1.
Word canonical_word(const Mat2& m);

/// Canonical form of an arbitrary word; equals canonical_word(phi_eval(w)).
Word canonicalize_word(const Word& w);

/// Row vector e_i^T m, i in {1, 2}.
std::array<Integer, 2> row(const Mat2& m, int i);

}  // namespace semireach::gl2z
