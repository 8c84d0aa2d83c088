#include "semireach/gl2z.hpp"

#include <sstream>
#include <stdexcept>

namespace semireach::gl2z {

char to_char(Letter l) {
  switch (l) {
    case Letter::X: return 'X';
    case Letter::N: return 'N';
    case Letter::S: return 'S';
    case Letter::R: return 'R';
  }
  return '?';
}

std::optional<Letter> letter_from_char(char c) {
  switch (c) {
    case 'X': return Letter::X;
    case 'N': return Letter::N;
    case 'S': return Letter::S;
    case 'R': return Letter::R;
    default: return std::nullopt;
  }
}

Word parse_word(std::string_view text) {
  Word w;
  w.reserve(text.size());
  for (char c : text) {
    auto l = letter_from_char(c);
    if (!l) {
      throw std::invalid_argument(std::string("invalid letter '") + c +
                                  "' (alphabet is X, N, S, R)");
    }
    w.push_back(*l);
  }
  return w;
}

std::string to_string(const Word& w) {
  std::string s;
  s.reserve(w.size());
  for (Letter l : w) {
    s.push_back(to_char(l));
  }
  return s;
}

const Integer& Mat2::at(int i, int j) const {
  if (i == 1 && j == 1) return a11;
  if (i == 1 && j == 2) return a12;
  if (i == 2 && j == 1) return a21;
  if (i == 2 && j == 2) return a22;
  throw std::out_of_range("Mat2::at: indices must be 1 or 2");
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return Mat2{x.a11 * y.a11 + x.a12 * y.a21, x.a11 * y.a12 + x.a12 * y.a22,
              x.a21 * y.a11 + x.a22 * y.a21, x.a21 * y.a12 + x.a22 * y.a22};
}

Mat2 operator-(const Mat2& x) { return Mat2{-x.a11, -x.a12, -x.a21, -x.a22}; }

Mat2 inverse(const Mat2& m) {
  Integer d = m.det();
  if (d != 1 && d != -1) {
    throw std::invalid_argument("matrix " + to_string(m) + " is not in GL(2,Z) (det " +
                                d.get_str() + ")");
  }
  // d^{-1} = d for d = +-1.
  return Mat2{d * m.a22, -d * m.a12, -d * m.a21, d * m.a11};
}

std::string to_string(const Mat2& m) {
  std::ostringstream os;
  os << "[[" << m.a11 << ',' << m.a12 << "],[" << m.a21 << ',' << m.a22 << "]]";
  return os.str();
}

std::size_t Mat2Hash::operator()(const Mat2& m) const {
  std::size_t h = hash_value(m.a11);
  hash_combine(h, hash_value(m.a12));
  hash_combine(h, hash_value(m.a21));
  hash_combine(h, hash_value(m.a22));
  return h;
}

Mat2 letter_matrix(Letter l) {
  switch (l) {
    case Letter::X: return Mat2::of(-1, 0, 0, -1);
    case Letter::N: return Mat2::of(1, 0, 0, -1);
    case Letter::S: return Mat2::of(0, -1, 1, 0);
    case Letter::R: return Mat2::of(0, -1, 1, 1);
  }
  return Mat2::identity();
}

Mat2 phi_eval(const Word& w) {
  Mat2 acc = Mat2::identity();
  for (Letter l : w) {
    acc = acc * letter_matrix(l);
  }
  return acc;
}

std::optional<CanonState> canon_step(CanonState q, Letter l) {
  using enum CanonState;
  switch (l) {
    case Letter::N:
      if (q == Start) return AfterN;
      return std::nullopt;
    case Letter::X:
      if (q == Start || q == AfterN) return AfterX;
      return std::nullopt;
    case Letter::S:
      if (q == Start || q == AfterN || q == AfterX) return LeadS;
      if (q == R1 || q == R2) return TailS;
      return std::nullopt;
    case Letter::R:
      if (q == Start || q == AfterN || q == AfterX || q == LeadS || q == TailS) return R1;
      if (q == R1) return R2;
      return std::nullopt;
  }
  return std::nullopt;
}

bool is_canonical(const Word& w) {
  CanonState q = CanonState::Start;
  for (Letter l : w) {
    auto next = canon_step(q, l);
    if (!next) {
      return false;
    }
    q = *next;
  }
  return true;
}

namespace {

// Free reduction over {S, R} with X central: SS -> X, RRR -> X.
// The stack never contains SS or RRR, so its content is the canonical core.
struct CoreReducer {
  Word stack;
  bool x_parity = false;

  void push(Letter l) {
    if (l == Letter::X) {
      x_parity = !x_parity;
      return;
    }
    stack.push_back(l);
    const std::size_t n = stack.size();
    if (l == Letter::S && n >= 2 && stack[n - 2] == Letter::S) {
      stack.resize(n - 2);
      x_parity = !x_parity;
    } else if (l == Letter::R && n >= 3 && stack[n - 2] == Letter::R &&
               stack[n - 3] == Letter::R) {
      stack.resize(n - 3);
      x_parity = !x_parity;
    }
  }

  void push_all(std::initializer_list<Letter> letters) {
    for (Letter l : letters) {
      push(l);
    }
  }
};

// T = [[1,1],[0,1]] = phi(XSR) and T^{-1} = phi(XRRS).
void push_t_power(CoreReducer& red, const Integer& q) {
  using enum Letter;
  if (q > 0) {
    for (Integer i = 0; i < q; ++i) {
      red.push_all({X, S, R});
    }
  } else {
    for (Integer i = 0; i > q; --i) {
      red.push_all({X, R, R, S});
    }
  }
}

}  // namespace

Word canonical_word(const Mat2& m) {
  const Integer d = m.det();
  if (d != 1 && d != -1) {
    throw std::invalid_argument("matrix " + to_string(m) + " is not in GL(2,Z) (det " +
                                d.get_str() + ")");
  }
  const bool has_n = d == -1;
  // m = N * p with p in SL(2,Z).
  Mat2 p = has_n ? letter_matrix(Letter::N) * m : m;

  // Euclid on the first column: p = T^q S p', shrinking |p.a21| each round.
  CoreReducer red;
  while (p.a21 != 0) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), p.a11.get_mpz_t(), p.a21.get_mpz_t());
    push_t_power(red, q);
    Mat2 shifted{p.a11 - q * p.a21, p.a12 - q * p.a22, p.a21, p.a22};
    red.push(Letter::S);
    // S^{-1} [[a,b],[c,d]] = [[c,d],[-a,-b]]
    p = Mat2{shifted.a21, shifted.a22, -shifted.a11, -shifted.a12};
  }
  // p = [[s, b], [0, s]] with s = +-1, i.e. p = X^[s<0] T^(s*b).
  if (p.a11 == -1) {
    red.push(Letter::X);
  }
  push_t_power(red, p.a11 * p.a12);

  Word out;
  out.reserve(red.stack.size() + 2);
  if (has_n) {
    out.push_back(Letter::N);
  }
  if (red.x_parity) {
    out.push_back(Letter::X);
  }
  out.insert(out.end(), red.stack.begin(), red.stack.end());
  return out;
}

Word canonicalize_word(const Word& w) { return canonical_word(phi_eval(w)); }

std::array<Integer, 2> row(const Mat2& m, int i) {
  if (i == 1) {
    return {m.a11, m.a12};
  }
  if (i == 2) {
    return {m.a21, m.a22};
  }
  throw std::out_of_range("row index must be 1 or 2");
}

}  // namespace semireach::gl2z
