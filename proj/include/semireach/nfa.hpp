#pragma once

// Nondeterministic finite automata over {X, N, S, R} with epsilon moves.
// One initial state, any number of accepting states. States are dense
// indices; automata are built by mutation and then passed around by value.

#include "semireach/gl2z.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

namespace semireach::automata {

using gl2z::Letter;
using gl2z::Word;
using State = std::uint32_t;

/// Edge label: 0..3 are the letters (as Letter values), kEpsilon an epsilon move.
inline constexpr std::uint8_t kEpsilon = 4;

struct Edge {
  std::uint8_t label;
  State to;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class Nfa {
 public:
  /// A single non-accepting initial state.
  Nfa();

  State add_state(bool accepting = false);
  void add_transition(State from, Letter l, State to);
  void add_epsilon(State from, State to);
  void add_edge(State from, std::uint8_t label, State to);
  void set_accepting(State s, bool accepting = true);

  std::size_t state_count() const { return accepting_.size(); }
  State initial() const { return 0; }
  bool is_accepting(State s) const { return accepting_[s]; }
  const std::vector<Edge>& edges(State s) const { return out_[s]; }
  std::size_t edge_count() const;
  bool has_epsilon() const;

  /// Whether every state has at most one successor per letter and no epsilon moves.
  bool is_deterministic() const;

  bool accepts(const Word& w) const;

  /// Empty language.
  static Nfa empty();
  /// {w}.
  static Nfa singleton(const Word& w);
  /// Finite union of words.
  static Nfa of_words(const std::vector<Word>& words);

 private:
  std::vector<std::vector<Edge>> out_;
  std::vector<bool> accepting_;
};

/// States reachable from `seeds` through epsilon moves (including the seeds).
std::vector<bool> epsilon_closure(const Nfa& a, const std::vector<State>& seeds);

Nfa remove_epsilon(const Nfa& a);

/// Keeps states that are reachable and co-reachable; the initial state always stays.
Nfa trim(const Nfa& a);

bool is_empty(const Nfa& a);

/// A shortest accepted word, if any.
std::optional<Word> shortest_word(const Nfa& a);

Nfa union_of(const Nfa& a, const Nfa& b);
Nfa concat(const Nfa& a, const Nfa& b);
/// L^+.
Nfa plus(const Nfa& a);
/// L(a) intersected with L(b).
Nfa intersection(const Nfa& a, const Nfa& b);

/// Subset construction; the result is deterministic (partial, no sink state).
Nfa determinize(const Nfa& a);

/// L(a) \ L(b).
Nfa difference(const Nfa& a, const Nfa& b);

/// Moore partition refinement on a deterministic automaton.
Nfa minimize(const Nfa& dfa);

/// All accepted words of length <= max_len.
std::set<Word> accepted_words(const Nfa& a, std::size_t max_len);

}  // namespace semireach::automata
