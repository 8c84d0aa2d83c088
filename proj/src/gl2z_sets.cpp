#include "semireach/gl2z_sets.hpp"

#include "semireach/oracle.hpp"

#include <map>
#include <stdexcept>
#include <tuple>

namespace semireach::gl2z {

using automata::Nfa;
using automata::State;

namespace {

void check_entry(int i, int j) {
  if (i < 1 || i > 2 || j < 1 || j > 2) {
    throw std::out_of_range("entry indices must be 1 or 2");
  }
}

void check_generators(const std::vector<Mat2>& gens) {
  for (const Mat2& g : gens) {
    if (!g.in_gl2z()) {
      throw std::invalid_argument("generator " + to_string(g) + " is not in GL(2,Z)");
    }
  }
}

int sign_of(const Integer& x) { return sgn(x); }

int parity_sign(long e) { return e % 2 == 0 ? 1 : -1; }

// Explores a deterministic automaton over canonical words whose states are
// keys of type K; `step` returns the successor key or nullopt.
template <class K, class Step, class Accept>
Nfa explore(const K& init, Step step, Accept accept) {
  Nfa d;
  std::map<K, State> index;
  std::vector<K> keys;
  index.emplace(init, d.initial());
  keys.push_back(init);
  d.set_accepting(d.initial(), accept(init));
  for (std::size_t s = 0; s < keys.size(); ++s) {
    const K cur = keys[s];
    for (Letter l : kAlphabet) {
      std::optional<K> next = step(cur, l);
      if (!next) {
        continue;
      }
      auto it = index.find(*next);
      State t;
      if (it == index.end()) {
        t = d.add_state(accept(*next));
        index.emplace(*next, t);
        keys.push_back(*next);
      } else {
        t = it->second;
      }
      d.add_transition(static_cast<State>(s), l, t);
    }
  }
  return d;
}

// Row-tracking abstraction for entry_value_set. Values with |v| <= bound are
// exact; larger magnitudes collapse to +-(bound + 1).
class Abstract {
 public:
  explicit Abstract(long bound) : bound_(bound) {}

  long big() const { return bound_ + 1; }
  bool exact(long v) const { return v >= -bound_ && v <= bound_; }
  long clamp(long v) const { return v > bound_ ? big() : v < -bound_ ? -big() : v; }

  long add(long a, long b) const {
    if (exact(a) && exact(b)) {
      return clamp(a + b);
    }
    const long s = exact(a) ? b : a;
    const long other = exact(a) ? a : b;
    if (other == 0 || (other > 0) == (s > 0)) {
      return s;
    }
    throw std::logic_error("entry tracking: unbounded value combined with opposite sign");
  }

 private:
  long bound_;
};

// Position of the current letter relative to the anchor row: the row at the
// end of the last completed R-block (or of the N/X prefix).
enum class Suffix : std::uint8_t { None, S, SR, SRR, R, RR };

struct RowKey {
  CanonState cs;
  long x, y;
  Suffix suffix;
  auto operator<=>(const RowKey&) const = default;
};

std::pair<long, long> current_row(const Abstract& ab, const RowKey& k) {
  const long x = k.x, y = k.y;
  switch (k.suffix) {
    case Suffix::None: return {x, y};
    case Suffix::S: return {y, -x};
    case Suffix::SR: return {-x, -ab.add(x, y)};
    case Suffix::SRR: return {-ab.add(x, y), -y};
    case Suffix::R: return {y, ab.add(-x, y)};
    case Suffix::RR: return {ab.add(-x, y), -x};
  }
  return {x, y};
}

std::optional<RowKey> row_step(const Abstract& ab, const RowKey& k, Letter l) {
  auto cs = canon_step(k.cs, l);
  if (!cs) {
    return std::nullopt;
  }
  RowKey n = k;
  n.cs = *cs;
  switch (l) {
    case Letter::N:
      n.y = -k.y;
      return n;
    case Letter::X:
      n.x = -k.x;
      n.y = -k.y;
      return n;
    case Letter::S:
      if (k.suffix != Suffix::None) {
        auto [x, y] = current_row(ab, k);
        n.x = x;
        n.y = y;
      }
      n.suffix = Suffix::S;
      return n;
    case Letter::R:
      switch (k.suffix) {
        case Suffix::None: n.suffix = Suffix::R; break;
        case Suffix::R: n.suffix = Suffix::RR; break;
        case Suffix::S: n.suffix = Suffix::SR; break;
        case Suffix::SR: n.suffix = Suffix::SRR; break;
        default: return std::nullopt;
      }
      return n;
  }
  return std::nullopt;
}

struct ShapeKey {
  CanonState cs;
  int delta, gamma, beta, n_parity, has_block;
  auto operator<=>(const ShapeKey&) const = default;
};

// Words of the form N^d X^g S^b with no R-block.
Mat2 degenerate_matrix(int delta, int gamma, int beta) {
  Word w;
  if (delta) w.push_back(Letter::N);
  if (gamma) w.push_back(Letter::X);
  if (beta) w.push_back(Letter::S);
  return phi_eval(w);
}

Word matrix_word(const Mat2& m) { return canonical_word(m); }

}  // namespace

bool sign_compatible(const SignPattern& a, const SignPattern& b) {
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      if (a[i][j] != 0 && b[i][j] != 0 && a[i][j] != b[i][j]) {
        return false;
      }
    }
  }
  return true;
}

SignPattern sign_pattern_of(const Mat2& m) {
  return {{{sign_of(m.a11), sign_of(m.a12)}, {sign_of(m.a21), sign_of(m.a22)}}};
}

std::optional<CanonicalShape> canonical_shape(const Word& w) {
  CanonicalShape sh;
  CanonState q = CanonState::Start;
  for (Letter l : w) {
    auto next = canon_step(q, l);
    if (!next) {
      return std::nullopt;
    }
    if (l == Letter::N) sh.delta = 1;
    if (l == Letter::X) sh.gamma = 1;
    if (*next == CanonState::LeadS) sh.beta = 1;
    if (*next == CanonState::R1) ++sh.n;
    q = *next;
  }
  sh.epsilon = q == CanonState::TailS ? 1 : 0;
  return sh;
}

SignPattern canonical_sign_pattern(int delta, int gamma, int beta, std::size_t n, int epsilon) {
  if (n == 0) {
    throw std::invalid_argument("canonical_sign_pattern: needs at least one R-block");
  }
  const long nn = static_cast<long>(n % 2);
  const long top = nn + gamma;
  const long bottom = nn - 1 + beta + gamma + delta;
  return {{{parity_sign(top), parity_sign(top + epsilon)},
           {parity_sign(bottom), parity_sign(bottom + epsilon)}}};
}

RegularSubset entry_value_set(int i, int j, long k) {
  check_entry(i, j);
  const Abstract ab(std::max(k < 0 ? -k : k, 2L));
  const RowKey init{CanonState::Start, i == 1 ? 1L : 0L, i == 1 ? 0L : 1L, Suffix::None};
  Nfa d = explore(
      init, [&](const RowKey& key, Letter l) { return row_step(ab, key, l); },
      [&](const RowKey& key) {
        auto [x, y] = current_row(ab, key);
        return (j == 1 ? x : y) == k;
      });
  return RegularSubset::from_canonical_nfa(automata::minimize(d));
}

RegularSubset pos_set(int i, int j) {
  check_entry(i, j);
  const ShapeKey init{CanonState::Start, 0, 0, 0, 0, 0};
  auto step = [](const ShapeKey& key, Letter l) -> std::optional<ShapeKey> {
    auto cs = canon_step(key.cs, l);
    if (!cs) {
      return std::nullopt;
    }
    ShapeKey n = key;
    n.cs = *cs;
    if (l == Letter::N) n.delta = 1;
    if (l == Letter::X) n.gamma = 1;
    if (*cs == CanonState::LeadS) n.beta = 1;
    if (*cs == CanonState::R1) {
      n.n_parity ^= 1;
      n.has_block = 1;
    }
    return n;
  };
  auto accept = [&](const ShapeKey& key) {
    if (!key.has_block) {
      return degenerate_matrix(key.delta, key.gamma, key.beta).at(i, j) >= 0;
    }
    const int eps = key.cs == CanonState::TailS ? 1 : 0;
    // n only matters through its parity; n_parity = 0 is represented by n = 2.
    const std::size_t n = key.n_parity ? 1 : 2;
    return canonical_sign_pattern(key.delta, key.gamma, key.beta, n, eps)[i - 1][j - 1] > 0;
  };
  RegularSubset parity = RegularSubset::from_canonical_nfa(automata::minimize(explore(init, step, accept)));
  return regular_union(parity, entry_value_set(i, j, 0));
}

RegularSubset entry_bound_set(int i, int j, long k, BoundDir dir) {
  check_entry(i, j);
  if (dir == BoundDir::Leq) {
    return regular_complement(entry_bound_set(i, j, k + 1, BoundDir::Geq));
  }
  RegularSubset result = pos_set(i, j);
  if (k > 0) {
    for (long n = 0; n < k; ++n) {
      result = regular_difference(result, entry_value_set(i, j, n));
    }
  } else {
    for (long n = k; n < 0; ++n) {
      result = regular_union(result, entry_value_set(i, j, n));
    }
  }
  return result;
}

HalfSpaceQuery2 normalize_query(const HalfSpaceQuery2& q) {
  auto scale_of = [](const std::array<Rational, 2>& x) {
    Integer den = lcm(x[0].get_den(), x[1].get_den());
    Integer g = gcd(Integer(x[0] * den), Integer(x[1] * den));
    if (g == 0) {
      return Rational(1);
    }
    return Rational(den, g);
  };
  const Rational su = scale_of(q.u);
  const Rational sv = scale_of(q.v);
  HalfSpaceQuery2 out;
  for (int i = 0; i < 2; ++i) {
    out.u[i] = q.u[i] * su;
    out.v[i] = q.v[i] * sv;
  }
  out.lambda = Rational(ceil_of(q.lambda * su * sv));
  return out;
}

RegularSubset halfspace_set(const HalfSpaceQuery2& query) {
  const HalfSpaceQuery2 q = normalize_query(query);
  const bool u_zero = q.u[0] == 0 && q.u[1] == 0;
  const bool v_zero = q.v[0] == 0 && q.v[1] == 0;
  if (u_zero || v_zero) {
    return q.lambda <= 0 ? RegularSubset::all() : RegularSubset();
  }
  const Integer u1 = q.u[0].get_num(), u2 = q.u[1].get_num();
  const Integer v1 = q.v[0].get_num(), v2 = q.v[1].get_num();
  Integer s1, s2, t1, t2;
  ext_gcd(u1, u2, s1, s2);
  ext_gcd(v1, v2, t1, t2);
  // A e1 = u and B e1 = v, so u^T M v = (A^T M B)_11.
  const Mat2 a{u1, -s2, u2, s1};
  const Mat2 b{v1, -t2, v2, t1};
  const Integer lambda = q.lambda.get_num();
  if (!lambda.fits_slong_p()) {
    throw std::out_of_range("half-space threshold is too large");
  }
  const RegularSubset core = entry_bound_set(1, 1, lambda.get_si(), BoundDir::Geq);
  Nfa product = automata::concat(
      Nfa::singleton(matrix_word(inverse(a.transpose()))),
      automata::concat(core.nfa(), Nfa::singleton(matrix_word(inverse(b)))));
  return canonicalize_nfa(product);
}

RegularSubset semigroup_set(const std::vector<Mat2>& gens) {
  check_generators(gens);
  if (gens.empty()) {
    return RegularSubset();
  }
  std::vector<Word> words;
  for (const Mat2& g : gens) {
    words.push_back(canonical_word(g));
  }
  return canonicalize_nfa(automata::plus(Nfa::of_words(words)));
}

namespace {

Integer bilinear(const std::array<Rational, 2>& u, const Mat2& m, const std::array<Rational, 2>& v) {
  // Normalized queries have integer u and v.
  const Integer x1 = u[0].get_num() * m.a11 + u[1].get_num() * m.a21;
  const Integer x2 = u[0].get_num() * m.a12 + u[1].get_num() * m.a22;
  return x1 * v[0].get_num() + x2 * v[1].get_num();
}

}  // namespace

Verdict decide_halfspace_gl2z(const std::vector<Mat2>& gens, const HalfSpaceQuery2& query,
                              const Gl2zOptions& opt) {
  check_generators(gens);
  if (gens.empty()) {
    return Verdict::no();
  }
  const HalfSpaceQuery2 q = normalize_query(query);
  const bool u_zero = q.u[0] == 0 && q.u[1] == 0;
  const bool v_zero = q.v[0] == 0 && q.v[1] == 0;
  if (u_zero || v_zero) {
    if (q.lambda <= 0) {
      return Verdict::yes(std::vector<std::size_t>{0});
    }
    return Verdict::no();
  }
  const Integer u1 = q.u[0].get_num(), u2 = q.u[1].get_num();
  const Integer v1 = q.v[0].get_num(), v2 = q.v[1].get_num();
  Integer s1, s2, t1, t2;
  ext_gcd(u1, u2, s1, s2);
  ext_gcd(v1, v2, t1, t2);
  const Mat2 a{u1, -s2, u2, s1};
  const Mat2 b{v1, -t2, v2, t1};
  const Integer lambda = q.lambda.get_num();
  if (!lambda.fits_slong_p()) {
    throw std::out_of_range("half-space threshold is too large");
  }

  // M in <G> with (A^T M B)_11 >= lambda: move A^T and B onto the semigroup
  // language, which is usually far smaller than the half-space language.
  std::vector<Word> words;
  for (const Mat2& g : gens) {
    words.push_back(canonical_word(g));
  }
  Nfa moved = automata::concat(
      Nfa::singleton(matrix_word(a.transpose())),
      automata::concat(automata::plus(Nfa::of_words(words)), Nfa::singleton(matrix_word(b))));
  const RegularSubset moved_set = canonicalize_nfa(moved);
  const RegularSubset bound = entry_bound_set(1, 1, lambda.get_si(), BoundDir::Geq);
  if (regular_is_empty(regular_intersection(moved_set, bound))) {
    return Verdict::no();
  }
  if (!opt.want_witness) {
    return Verdict::yes();
  }
  auto witness = find_product<Mat2, Mat2Hash>(
      gens, opt.witness_depth, [](const Mat2& x, const Mat2& y) { return x * y; },
      [&](const Mat2& m) { return bilinear(q.u, m, q.v) >= lambda; });
  return Verdict::yes(witness);
}

Verdict decide_membership_gl2z(const std::vector<Mat2>& gens, const Mat2& target,
                               const Gl2zOptions& opt) {
  check_generators(gens);
  if (!target.in_gl2z()) {
    return Verdict::no();
  }
  if (!semigroup_set(gens).contains(target)) {
    return Verdict::no();
  }
  if (!opt.want_witness) {
    return Verdict::yes();
  }
  auto witness = find_product<Mat2, Mat2Hash>(
      gens, opt.witness_depth, [](const Mat2& x, const Mat2& y) { return x * y; },
      [&](const Mat2& m) { return m == target; });
  return Verdict::yes(witness);
}

}  // namespace semireach::gl2z
