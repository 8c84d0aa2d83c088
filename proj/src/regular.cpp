#include "semireach/regular.hpp"

#include <cstdint>
#include <deque>
#include <map>
#include <stdexcept>

namespace semireach::gl2z {

using automata::Edge;
using automata::kEpsilon;
using automata::Nfa;
using automata::State;

namespace {

constexpr std::uint8_t kS = static_cast<std::uint8_t>(Letter::S);
constexpr std::uint8_t kR = static_cast<std::uint8_t>(Letter::R);

// Determinizes and minimizes when the subset construction stays small;
// otherwise returns the epsilon-free trimmed automaton.
Nfa compact(const Nfa& a) {
  Nfa plain = automata::remove_epsilon(a);
  if (plain.is_deterministic()) {
    return automata::minimize(plain);
  }
  return automata::minimize(automata::determinize(plain));
}

class Bitset {
 public:
  explicit Bitset(std::size_t n = 0) : words_((n + 63) / 64, 0) {}

  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void merge(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      words_[i] |= o.words_[i];
    }
  }
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const int b = __builtin_ctzll(bits);
        f(w * 64 + static_cast<std::size_t>(b));
        bits &= bits - 1;
      }
    }
  }

 private:
  std::vector<std::uint64_t> words_;
};

// The {S, R}-automaton with epsilon moves produced by step 1 of Can(A).
struct CoreAutomaton {
  std::size_t main_count = 0;  // 4 * |Q|, index q*4 + r*2 + x
  std::size_t size = 0;
  std::vector<std::vector<State>> succ_s, succ_r, eps;

  static std::size_t main_index(State q, int r, int x) { return q * 4U + r * 2U + x; }

  // Flipping x is the lowest bit for main states; intermediate states come in
  // x-pairs of three consecutive states.
  std::size_t toggle(std::size_t id) const {
    if (id < main_count) {
      return id ^ 1U;
    }
    const std::size_t rel = id - main_count;
    const std::size_t group = rel / 3;
    const std::size_t k = rel % 3;
    return main_count + (group ^ 1U) * 3 + k;
  }

  void add(std::uint8_t label, std::size_t from, std::size_t to) {
    auto& list = label == kS ? succ_s[from] : label == kR ? succ_r[from] : eps[from];
    list.push_back(static_cast<State>(to));
  }
};

CoreAutomaton eliminate_n_and_x(const Nfa& a) {
  CoreAutomaton k;
  k.main_count = a.state_count() * 4;
  std::size_t r_edges = 0;
  for (State q = 0; q < a.state_count(); ++q) {
    for (const Edge& e : a.edges(q)) {
      if (e.label == kR) {
        ++r_edges;
      }
    }
  }
  k.size = k.main_count + r_edges * 2 * 3;
  k.succ_s.resize(k.size);
  k.succ_r.resize(k.size);
  k.eps.resize(k.size);

  std::size_t r_edge = 0;
  for (State q = 0; q < a.state_count(); ++q) {
    for (const Edge& e : a.edges(q)) {
      const State t = e.to;
      const std::size_t r_group = e.label == kR ? r_edge++ : 0;
      for (int r = 0; r < 2; ++r) {
        for (int x = 0; x < 2; ++x) {
          const std::size_t from = CoreAutomaton::main_index(q, r, x);
          switch (e.label) {
            case kEpsilon:
              k.add(kEpsilon, from, CoreAutomaton::main_index(t, r, x));
              break;
            case static_cast<std::uint8_t>(Letter::N):
              k.add(kEpsilon, from, CoreAutomaton::main_index(t, r ^ 1, x));
              break;
            case static_cast<std::uint8_t>(Letter::X):
              k.add(kEpsilon, from, CoreAutomaton::main_index(t, r, x ^ 1));
              break;
            case kS:
              // N S N = S X.
              k.add(kS, from, CoreAutomaton::main_index(t, r, x ^ r));
              break;
            case kR:
              if (r == 0) {
                k.add(kR, from, CoreAutomaton::main_index(t, r, x));
              } else {
                // N R N = S R R S.
                const std::size_t base = k.main_count + (r_group * 2 + x) * 3;
                k.add(kS, from, base);
                k.add(kR, base, base + 1);
                k.add(kR, base + 1, base + 2);
                k.add(kS, base + 2, CoreAutomaton::main_index(t, r, x));
              }
              break;
            default:
              break;
          }
        }
      }
    }
  }
  return k;
}

void saturate(CoreAutomaton& k) {
  const std::size_t n = k.size;
  for (;;) {
    std::vector<Bitset> closure(n, Bitset(n));
    for (std::size_t s = 0; s < n; ++s) {
      std::vector<std::size_t> stack{s};
      closure[s].set(s);
      while (!stack.empty()) {
        std::size_t p = stack.back();
        stack.pop_back();
        for (State t : k.eps[p]) {
          if (!closure[s].test(t)) {
            closure[s].set(t);
            stack.push_back(t);
          }
        }
      }
    }
    auto step = [&](const Bitset& from, const std::vector<std::vector<State>>& succ) {
      Bitset out(n);
      from.for_each([&](std::size_t p) {
        for (State t : succ[p]) {
          if (!out.test(t)) {
            out.merge(closure[t]);
          }
        }
      });
      return out;
    };
    bool changed = false;
    for (std::size_t s = 0; s < n; ++s) {
      Bitset ss = step(step(closure[s], k.succ_s), k.succ_s);
      Bitset rrr = step(step(step(closure[s], k.succ_r), k.succ_r), k.succ_r);
      ss.merge(rrr);
      ss.for_each([&](std::size_t t) {
        const std::size_t target = k.toggle(t);
        if (!closure[s].test(target)) {
          k.eps[s].push_back(static_cast<State>(target));
          closure[s].merge(closure[target]);
          changed = true;
        }
      });
    }
    if (!changed) {
      return;
    }
  }
}

}  // namespace

Nfa canonical_words_dfa() {
  Nfa d;
  for (int i = 1; i < kCanonStateCount; ++i) {
    d.add_state();
  }
  for (int i = 0; i < kCanonStateCount; ++i) {
    const auto q = static_cast<CanonState>(i);
    d.set_accepting(static_cast<State>(i));
    for (Letter l : kAlphabet) {
      if (auto next = canon_step(q, l)) {
        d.add_transition(static_cast<State>(i), l, static_cast<State>(*next));
      }
    }
  }
  return d;
}

RegularSubset::RegularSubset() : nfa_(Nfa::empty()) {}

RegularSubset RegularSubset::from_canonical_nfa(Nfa a) {
  if (!automata::is_empty(automata::difference(a, canonical_words_dfa()))) {
    throw std::invalid_argument("automaton accepts a non-canonical word");
  }
  return RegularSubset(compact(a));
}

RegularSubset RegularSubset::all() { return RegularSubset(canonical_words_dfa()); }

RegularSubset canonicalize_nfa(const Nfa& input) {
  const Nfa a = automata::trim(input);
  CoreAutomaton k = eliminate_n_and_x(a);
  saturate(k);

  // Product of the saturated core with the canonical {S, R}-shape.
  Nfa out;
  std::map<std::pair<std::size_t, CanonState>, State> index;
  std::deque<std::pair<std::size_t, CanonState>> queue;
  auto node = [&](std::size_t core, CanonState shape) {
    auto key = std::make_pair(core, shape);
    auto it = index.find(key);
    if (it != index.end()) {
      return it->second;
    }
    bool accepting = false;
    if (core < k.main_count && core % 4 == 0) {  // r = 0 and x = 0
      accepting = a.is_accepting(static_cast<State>(core / 4));
    }
    State s = out.add_state(accepting);
    index.emplace(key, s);
    queue.push_back(key);
    return s;
  };

  const State after_n = out.add_state();
  out.add_transition(out.initial(), Letter::N, after_n);
  for (int r0 = 0; r0 < 2; ++r0) {
    for (int x0 = 0; x0 < 2; ++x0) {
      State pre = r0 ? after_n : out.initial();
      if (x0) {
        State after_x = out.add_state();
        out.add_transition(pre, Letter::X, after_x);
        pre = after_x;
      }
      out.add_epsilon(pre, node(CoreAutomaton::main_index(a.initial(), r0, x0), CanonState::Start));
    }
  }
  while (!queue.empty()) {
    auto [core, shape] = queue.front();
    queue.pop_front();
    const State from = index.at({core, shape});
    for (State t : k.eps[core]) {
      out.add_epsilon(from, node(t, shape));
    }
    if (auto next = canon_step(shape, Letter::S)) {
      for (State t : k.succ_s[core]) {
        out.add_transition(from, Letter::S, node(t, *next));
      }
    }
    if (auto next = canon_step(shape, Letter::R)) {
      for (State t : k.succ_r[core]) {
        out.add_transition(from, Letter::R, node(t, *next));
      }
    }
  }
  return RegularSubset(compact(out));
}

RegularSubset regular_union(const RegularSubset& a, const RegularSubset& b) {
  return RegularSubset::from_canonical_nfa(automata::union_of(a.nfa(), b.nfa()));
}

RegularSubset regular_intersection(const RegularSubset& a, const RegularSubset& b) {
  return RegularSubset::from_canonical_nfa(automata::intersection(a.nfa(), b.nfa()));
}

RegularSubset regular_complement(const RegularSubset& a) {
  return RegularSubset::from_canonical_nfa(automata::difference(canonical_words_dfa(), a.nfa()));
}

RegularSubset regular_difference(const RegularSubset& a, const RegularSubset& b) {
  return RegularSubset::from_canonical_nfa(automata::difference(a.nfa(), b.nfa()));
}

RegularSubset regular_bool_op(BoolOp op, const RegularSubset& lhs, const RegularSubset* rhs) {
  switch (op) {
    case BoolOp::Union:
    case BoolOp::Intersection:
      if (rhs == nullptr) {
        throw std::invalid_argument("regular_bool_op: binary operation needs two operands");
      }
      return op == BoolOp::Union ? regular_union(lhs, *rhs) : regular_intersection(lhs, *rhs);
    case BoolOp::Complement:
      return regular_complement(lhs);
  }
  throw std::invalid_argument("regular_bool_op: unknown operation");
}

bool regular_is_empty(const RegularSubset& l) { return automata::is_empty(l.nfa()); }

}  // namespace semireach::gl2z
