#pragma once

// Independent reference implementations shared by the unit tests and the
// acceptance runner. Nothing here calls the procedures under test.

#include "semireach/flow.hpp"
#include "semireach/gl2z.hpp"
#include "semireach/heisenberg.hpp"
#include "semireach/ilp.hpp"
#include "semireach/nfa.hpp"

#include <deque>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace semireach::testing {

inline HeisTriple T(long a, long b, long c) {
  return HeisTriple({Rational(a)}, {Rational(b)}, Rational(c));
}

inline Rational Q(long p, long q = 1) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------------------
// Full n x n rational matrices.

using Matrix = std::vector<RationalVec>;

inline Matrix to_matrix(const HeisTriple& x) {
  const std::size_t n = x.dim();
  Matrix m(n, RationalVec(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  for (std::size_t i = 0; i + 2 < n; ++i) {
    m[0][i + 1] = x.a()[i];
    m[i + 1][n - 1] = x.b()[i];
  }
  m[0][n - 1] = x.c();
  return m;
}

inline Matrix mat_mul(const Matrix& x, const Matrix& y) {
  const std::size_t n = x.size();
  Matrix z(n, RationalVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (x[i][k] != 0)
        for (std::size_t j = 0; j < n; ++j) z[i][j] += x[i][k] * y[k][j];
  return z;
}

inline Matrix mat_product(const std::vector<HeisTriple>& seq) {
  Matrix m = to_matrix(HeisTriple(seq.front().dim()));
  for (const HeisTriple& x : seq) m = mat_mul(m, to_matrix(x));
  return m;
}

// log(A) = (A - I) - (A - I)^2 / 2, computed on full matrices.
inline Matrix mat_log(const Matrix& a) {
  const std::size_t n = a.size();
  Matrix d = a;
  for (std::size_t i = 0; i < n; ++i) d[i][i] -= 1;
  Matrix d2 = mat_mul(d, d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d[i][j] -= d2[i][j] / 2;
  return d;
}

inline Matrix to_matrix(const LieTriple& l) {
  const std::size_t n = l.dim();
  Matrix m(n, RationalVec(n));
  for (std::size_t i = 0; i + 2 < n; ++i) {
    m[0][i + 1] = l.a()[i];
    m[i + 1][n - 1] = l.b()[i];
  }
  m[0][n - 1] = l.c();
  return m;
}

inline Rational bilinear(const RationalVec& u, const Matrix& m, const RationalVec& v) {
  Rational s = 0;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) s += u[i] * m[i][j] * v[j];
  return s;
}

// ---------------------------------------------------------------------------
// Random data.

inline Rational random_rational(std::mt19937& rng, long range, long max_den) {
  std::uniform_int_distribution<long> num(-range * max_den, range * max_den);
  std::uniform_int_distribution<long> den(1, max_den);
  return Q(num(rng), den(rng));
}

inline HeisTriple random_triple(std::mt19937& rng, std::size_t n, long range, long max_den) {
  RationalVec a, b;
  for (std::size_t i = 0; i + 2 < n; ++i) {
    a.push_back(random_rational(rng, range, max_den));
    b.push_back(random_rational(rng, range, max_den));
  }
  return HeisTriple(a, b, random_rational(rng, range, max_den));
}

inline HeisTriple random_int_triple(std::mt19937& rng, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  const long a = d(rng), b = d(rng), c = d(rng);
  return T(a, b, c);
}

inline gl2z::Word random_word(std::mt19937& rng, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> letter(0, 3);
  gl2z::Word w(len(rng));
  for (auto& l : w) l = static_cast<gl2z::Letter>(letter(rng));
  return w;
}

// ---------------------------------------------------------------------------
// Matrices reachable in an NFA, by BFS over (state, matrix) pairs with bounded
// entries. Returns the matrices at accepting states.

inline std::map<std::string, gl2z::Mat2> nfa_matrices(const automata::Nfa& a, long bound,
                                                      std::size_t depth) {
  using gl2z::Mat2;
  std::set<std::pair<automata::State, std::string>> seen;
  std::deque<std::tuple<automata::State, Mat2, std::size_t>> queue;
  std::map<std::string, gl2z::Mat2> out;
  queue.emplace_back(a.initial(), Mat2::identity(), 0);
  seen.insert({a.initial(), gl2z::to_string(Mat2::identity())});
  while (!queue.empty()) {
    auto [s, m, d] = queue.front();
    queue.pop_front();
    if (a.is_accepting(s)) out.emplace(gl2z::to_string(m), m);
    if (d >= depth) continue;
    for (const automata::Edge& e : a.edges(s)) {
      const Mat2 next =
          e.label == automata::kEpsilon ? m : m * gl2z::letter_matrix(static_cast<gl2z::Letter>(e.label));
      if (abs(next.a11) > bound || abs(next.a12) > bound || abs(next.a21) > bound ||
          abs(next.a22) > bound)
        continue;
      if (seen.insert({e.to, gl2z::to_string(next)}).second) queue.emplace_back(e.to, next, d + 1);
    }
  }
  return out;
}

inline automata::Nfa random_nfa(std::mt19937& rng, std::size_t max_states, std::size_t max_edges) {
  automata::Nfa a;
  const std::size_t q = 1 + rng() % max_states;
  for (std::size_t i = 1; i < q; ++i) a.add_state(rng() % 2 == 0);
  a.set_accepting(static_cast<automata::State>(rng() % q));
  const std::size_t e = rng() % (max_edges + 1);
  for (std::size_t i = 0; i < e; ++i) {
    a.add_edge(static_cast<automata::State>(rng() % q), static_cast<std::uint8_t>(rng() % 5),
               static_cast<automata::State>(rng() % q));
  }
  return a;
}

// ---------------------------------------------------------------------------
// Brute-force nonnegative integer solutions in [0, box]^n.

inline bool brute_ilp(const solvers::IlpSystem& sys, long box) {
  const std::size_t n = sys.num_vars;
  IntegerVec x(n, Integer(0));
  while (true) {
    if (sys.satisfied_by(x)) return true;
    std::size_t i = 0;
    while (i < n && x[i] == box) x[i++] = 0;
    if (i == n) return false;
    x[i] += 1;
  }
}

// Nonempty walks source -> target with total weight goal, by BFS over
// (node, partial sum) with partial sums bounded by `window`.
inline bool brute_flow(const solvers::FlowInstance& f, long window) {
  const std::size_t dim = f.goal.size();
  std::set<std::vector<long>> seen;
  std::deque<std::vector<long>> queue;
  auto push = [&](std::vector<long> s) {
    if (seen.insert(s).second) queue.push_back(std::move(s));
  };
  auto step = [&](const std::vector<long>& s, const solvers::FlowEdge& e) {
    std::vector<long> t = s;
    t[0] = static_cast<long>(e.to);
    for (std::size_t k = 0; k < dim; ++k) {
      t[k + 1] += e.weight[k].get_si();
      if (std::abs(t[k + 1]) > window) return;
    }
    push(std::move(t));
  };
  std::vector<long> start(dim + 1, 0);
  start[0] = static_cast<long>(f.source);
  for (const auto& e : f.edges)
    if (e.from == f.source) step(start, e);
  while (!queue.empty()) {
    std::vector<long> s = queue.front();
    queue.pop_front();
    bool done = static_cast<std::size_t>(s[0]) == f.target;
    for (std::size_t k = 0; k < dim && done; ++k) done = s[k + 1] == f.goal[k].get_si();
    if (done) return true;
    for (const auto& e : f.edges)
      if (static_cast<long>(e.from) == s[0]) step(s, e);
  }
  return false;
}

inline solvers::FlowInstance random_flow(std::mt19937& rng) {
  solvers::FlowInstance f;
  f.num_nodes = 1 + rng() % 4;
  const std::size_t dim = 1 + rng() % 2;
  const std::size_t ne = 1 + rng() % 6;
  for (std::size_t e = 0; e < ne; ++e) {
    solvers::FlowEdge edge;
    edge.from = rng() % f.num_nodes;
    edge.to = rng() % f.num_nodes;
    edge.label = e;
    for (std::size_t k = 0; k < dim; ++k) edge.weight.push_back(Integer(static_cast<long>(rng() % 5) - 2));
    f.edges.push_back(edge);
  }
  f.source = rng() % f.num_nodes;
  f.target = rng() % f.num_nodes;
  for (std::size_t k = 0; k < dim; ++k) f.goal.push_back(Integer(static_cast<long>(rng() % 13) - 6));
  return f;
}

// Follows a walk; true iff it is a nonempty source -> target walk with total goal.
inline bool walk_is_valid(const solvers::FlowInstance& f, const std::vector<std::size_t>& walk) {
  if (walk.empty()) return false;
  std::size_t cur = f.source;
  IntegerVec sum(f.goal.size(), Integer(0));
  for (std::size_t e : walk) {
    if (f.edges[e].from != cur) return false;
    cur = f.edges[e].to;
    for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += f.edges[e].weight[k];
  }
  return cur == f.target && sum == f.goal;
}

inline solvers::IlpSystem random_ilp(std::mt19937& rng) {
  const std::size_t n = 1 + rng() % 4;
  solvers::IlpSystem sys(n);
  const std::size_t rows = 1 + rng() % 3;
  for (std::size_t r = 0; r < rows; ++r) {
    IntegerVec c;
    for (std::size_t i = 0; i < n; ++i) c.push_back(Integer(static_cast<long>(rng() % 7) - 3));
    const auto rel = static_cast<solvers::Relation>(rng() % 3);
    sys.add(std::move(c), rel, Integer(static_cast<long>(rng() % 13) - 6));
  }
  for (std::size_t i = 0; i < n; ++i) sys.upper[i] = Integer(15);
  return sys;
}

}  // namespace semireach::testing
