#include "semireach/nfa.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace semireach::automata {

namespace {

constexpr std::uint8_t letter_label(Letter l) { return static_cast<std::uint8_t>(l); }

void check_state(const Nfa& a, State s) {
  if (s >= a.state_count()) {
    throw std::out_of_range("Nfa: invalid state " + std::to_string(s));
  }
}

// Copies the states of `src` into `dst` (shifted by the returned offset).
State append_copy(Nfa& dst, const Nfa& src) {
  const State offset = static_cast<State>(dst.state_count());
  for (State s = 0; s < src.state_count(); ++s) {
    dst.add_state(src.is_accepting(s));
  }
  for (State s = 0; s < src.state_count(); ++s) {
    for (const Edge& e : src.edges(s)) {
      dst.add_edge(offset + s, e.label, offset + e.to);
    }
  }
  return offset;
}

}  // namespace

Nfa::Nfa() { add_state(false); }

State Nfa::add_state(bool accepting) {
  out_.emplace_back();
  accepting_.push_back(accepting);
  return static_cast<State>(accepting_.size() - 1);
}

void Nfa::add_edge(State from, std::uint8_t label, State to) {
  check_state(*this, from);
  check_state(*this, to);
  if (label > kEpsilon) {
    throw std::invalid_argument("Nfa: invalid edge label");
  }
  auto& edges = out_[from];
  Edge e{label, to};
  if (std::find(edges.begin(), edges.end(), e) == edges.end()) {
    edges.push_back(e);
  }
}

void Nfa::add_transition(State from, Letter l, State to) { add_edge(from, letter_label(l), to); }

void Nfa::add_epsilon(State from, State to) { add_edge(from, kEpsilon, to); }

void Nfa::set_accepting(State s, bool accepting) {
  check_state(*this, s);
  accepting_[s] = accepting;
}

std::size_t Nfa::edge_count() const {
  std::size_t n = 0;
  for (const auto& edges : out_) {
    n += edges.size();
  }
  return n;
}

bool Nfa::has_epsilon() const {
  for (const auto& edges : out_) {
    for (const Edge& e : edges) {
      if (e.label == kEpsilon) {
        return true;
      }
    }
  }
  return false;
}

bool Nfa::is_deterministic() const {
  for (const auto& edges : out_) {
    bool seen[4] = {false, false, false, false};
    for (const Edge& e : edges) {
      if (e.label == kEpsilon || seen[e.label]) {
        return false;
      }
      seen[e.label] = true;
    }
  }
  return true;
}

bool Nfa::accepts(const Word& w) const {
  std::vector<bool> current = epsilon_closure(*this, {initial()});
  for (Letter l : w) {
    std::vector<State> next;
    for (State s = 0; s < state_count(); ++s) {
      if (!current[s]) {
        continue;
      }
      for (const Edge& e : out_[s]) {
        if (e.label == letter_label(l)) {
          next.push_back(e.to);
        }
      }
    }
    if (next.empty()) {
      return false;
    }
    current = epsilon_closure(*this, next);
  }
  for (State s = 0; s < state_count(); ++s) {
    if (current[s] && accepting_[s]) {
      return true;
    }
  }
  return false;
}

Nfa Nfa::empty() { return Nfa(); }

Nfa Nfa::singleton(const Word& w) {
  Nfa a;
  State cur = a.initial();
  for (Letter l : w) {
    State next = a.add_state();
    a.add_transition(cur, l, next);
    cur = next;
  }
  a.set_accepting(cur);
  return a;
}

Nfa Nfa::of_words(const std::vector<Word>& words) {
  Nfa a;
  for (const Word& w : words) {
    State cur = a.initial();
    for (Letter l : w) {
      State next = a.add_state();
      a.add_transition(cur, l, next);
      cur = next;
    }
    a.set_accepting(cur);
  }
  return a;
}

std::vector<bool> epsilon_closure(const Nfa& a, const std::vector<State>& seeds) {
  std::vector<bool> seen(a.state_count(), false);
  std::vector<State> stack;
  for (State s : seeds) {
    if (!seen[s]) {
      seen[s] = true;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    State s = stack.back();
    stack.pop_back();
    for (const Edge& e : a.edges(s)) {
      if (e.label == kEpsilon && !seen[e.to]) {
        seen[e.to] = true;
        stack.push_back(e.to);
      }
    }
  }
  return seen;
}

Nfa remove_epsilon(const Nfa& a) {
  if (!a.has_epsilon()) {
    return trim(a);
  }
  Nfa out;
  for (State s = 1; s < a.state_count(); ++s) {
    out.add_state();
  }
  for (State s = 0; s < a.state_count(); ++s) {
    std::vector<bool> closure = epsilon_closure(a, {s});
    for (State p = 0; p < a.state_count(); ++p) {
      if (!closure[p]) {
        continue;
      }
      if (a.is_accepting(p)) {
        out.set_accepting(s);
      }
      for (const Edge& e : a.edges(p)) {
        if (e.label != kEpsilon) {
          out.add_edge(s, e.label, e.to);
        }
      }
    }
  }
  return trim(out);
}

Nfa trim(const Nfa& a) {
  const std::size_t n = a.state_count();
  std::vector<bool> fwd(n, false);
  std::vector<State> stack{a.initial()};
  fwd[a.initial()] = true;
  std::vector<std::vector<State>> rev(n);
  while (!stack.empty()) {
    State s = stack.back();
    stack.pop_back();
    for (const Edge& e : a.edges(s)) {
      if (!fwd[e.to]) {
        fwd[e.to] = true;
        stack.push_back(e.to);
      }
    }
  }
  for (State s = 0; s < n; ++s) {
    for (const Edge& e : a.edges(s)) {
      rev[e.to].push_back(s);
    }
  }
  std::vector<bool> bwd(n, false);
  for (State s = 0; s < n; ++s) {
    if (a.is_accepting(s)) {
      bwd[s] = true;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    State s = stack.back();
    stack.pop_back();
    for (State p : rev[s]) {
      if (!bwd[p]) {
        bwd[p] = true;
        stack.push_back(p);
      }
    }
  }
  constexpr State kDropped = ~State{0};
  std::vector<State> remap(n, kDropped);
  Nfa out;
  remap[a.initial()] = out.initial();
  out.set_accepting(out.initial(), a.is_accepting(a.initial()));
  for (State s = 0; s < n; ++s) {
    if (s != a.initial() && fwd[s] && bwd[s]) {
      remap[s] = out.add_state(a.is_accepting(s));
    }
  }
  for (State s = 0; s < n; ++s) {
    if (remap[s] == kDropped || !bwd[s]) {
      continue;
    }
    for (const Edge& e : a.edges(s)) {
      if (remap[e.to] != kDropped && bwd[e.to]) {
        out.add_edge(remap[s], e.label, remap[e.to]);
      }
    }
  }
  return out;
}

bool is_empty(const Nfa& a) {
  std::vector<bool> seen(a.state_count(), false);
  std::vector<State> stack{a.initial()};
  seen[a.initial()] = true;
  while (!stack.empty()) {
    State s = stack.back();
    stack.pop_back();
    if (a.is_accepting(s)) {
      return false;
    }
    for (const Edge& e : a.edges(s)) {
      if (!seen[e.to]) {
        seen[e.to] = true;
        stack.push_back(e.to);
      }
    }
  }
  return true;
}

std::optional<Word> shortest_word(const Nfa& input) {
  Nfa a = remove_epsilon(input);
  constexpr State kNone = ~State{0};
  std::vector<State> parent(a.state_count(), kNone);
  std::vector<std::uint8_t> via(a.state_count(), 0);
  std::vector<bool> seen(a.state_count(), false);
  std::deque<State> queue{a.initial()};
  seen[a.initial()] = true;
  while (!queue.empty()) {
    State s = queue.front();
    queue.pop_front();
    if (a.is_accepting(s)) {
      Word w;
      for (State cur = s; cur != a.initial(); cur = parent[cur]) {
        w.push_back(static_cast<Letter>(via[cur]));
      }
      std::reverse(w.begin(), w.end());
      return w;
    }
    for (const Edge& e : a.edges(s)) {
      if (!seen[e.to]) {
        seen[e.to] = true;
        parent[e.to] = s;
        via[e.to] = e.label;
        queue.push_back(e.to);
      }
    }
  }
  return std::nullopt;
}

Nfa union_of(const Nfa& a, const Nfa& b) {
  Nfa out;
  State oa = append_copy(out, a);
  State ob = append_copy(out, b);
  out.add_epsilon(out.initial(), oa + a.initial());
  out.add_epsilon(out.initial(), ob + b.initial());
  return out;
}

Nfa concat(const Nfa& a, const Nfa& b) {
  Nfa out;
  State oa = append_copy(out, a);
  State ob = append_copy(out, b);
  out.add_epsilon(out.initial(), oa + a.initial());
  for (State s = 0; s < a.state_count(); ++s) {
    if (a.is_accepting(s)) {
      out.set_accepting(oa + s, false);
      out.add_epsilon(oa + s, ob + b.initial());
    }
  }
  return out;
}

Nfa plus(const Nfa& a) {
  Nfa out;
  State oa = append_copy(out, a);
  out.add_epsilon(out.initial(), oa + a.initial());
  for (State s = 0; s < a.state_count(); ++s) {
    if (a.is_accepting(s)) {
      out.add_epsilon(oa + s, oa + a.initial());
    }
  }
  return out;
}

Nfa intersection(const Nfa& a_in, const Nfa& b_in) {
  Nfa a = remove_epsilon(a_in);
  Nfa b = remove_epsilon(b_in);
  Nfa out;
  std::map<std::pair<State, State>, State> index;
  std::deque<std::pair<State, State>> queue;
  index[{a.initial(), b.initial()}] = out.initial();
  out.set_accepting(out.initial(), a.is_accepting(a.initial()) && b.is_accepting(b.initial()));
  queue.emplace_back(a.initial(), b.initial());
  while (!queue.empty()) {
    auto [p, q] = queue.front();
    queue.pop_front();
    State from = index.at({p, q});
    for (const Edge& ea : a.edges(p)) {
      for (const Edge& eb : b.edges(q)) {
        if (ea.label != eb.label) {
          continue;
        }
        auto key = std::make_pair(ea.to, eb.to);
        auto it = index.find(key);
        State to;
        if (it == index.end()) {
          to = out.add_state(a.is_accepting(ea.to) && b.is_accepting(eb.to));
          index.emplace(key, to);
          queue.push_back(key);
        } else {
          to = it->second;
        }
        out.add_edge(from, ea.label, to);
      }
    }
  }
  return trim(out);
}

Nfa determinize(const Nfa& input) {
  Nfa a = remove_epsilon(input);
  Nfa out;
  std::map<std::vector<State>, State> index;
  std::deque<std::vector<State>> queue;
  std::vector<State> start{a.initial()};
  index[start] = out.initial();
  out.set_accepting(out.initial(), a.is_accepting(a.initial()));
  queue.push_back(start);
  while (!queue.empty()) {
    std::vector<State> subset = std::move(queue.front());
    queue.pop_front();
    State from = index.at(subset);
    for (std::uint8_t label = 0; label < kEpsilon; ++label) {
      std::vector<State> next;
      for (State s : subset) {
        for (const Edge& e : a.edges(s)) {
          if (e.label == label) {
            next.push_back(e.to);
          }
        }
      }
      if (next.empty()) {
        continue;
      }
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      auto it = index.find(next);
      State to;
      if (it == index.end()) {
        bool acc = std::any_of(next.begin(), next.end(),
                               [&](State s) { return a.is_accepting(s); });
        to = out.add_state(acc);
        index.emplace(next, to);
        queue.push_back(std::move(next));
      } else {
        to = it->second;
      }
      out.add_edge(from, label, to);
    }
  }
  return out;
}

Nfa difference(const Nfa& a_in, const Nfa& b_in) {
  Nfa a = remove_epsilon(a_in);
  Nfa d = determinize(b_in);
  constexpr State kSink = ~State{0};
  auto d_step = [&](State q, std::uint8_t label) -> State {
    if (q == kSink) {
      return kSink;
    }
    for (const Edge& e : d.edges(q)) {
      if (e.label == label) {
        return e.to;
      }
    }
    return kSink;
  };
  auto accepting = [&](State p, State q) {
    return a.is_accepting(p) && !(q != kSink && d.is_accepting(q));
  };
  Nfa out;
  std::map<std::pair<State, State>, State> index;
  std::deque<std::pair<State, State>> queue;
  index[{a.initial(), d.initial()}] = out.initial();
  out.set_accepting(out.initial(), accepting(a.initial(), d.initial()));
  queue.emplace_back(a.initial(), d.initial());
  while (!queue.empty()) {
    auto [p, q] = queue.front();
    queue.pop_front();
    State from = index.at({p, q});
    for (const Edge& e : a.edges(p)) {
      auto key = std::make_pair(e.to, d_step(q, e.label));
      auto it = index.find(key);
      State to;
      if (it == index.end()) {
        to = out.add_state(accepting(key.first, key.second));
        index.emplace(key, to);
        queue.push_back(key);
      } else {
        to = it->second;
      }
      out.add_edge(from, e.label, to);
    }
  }
  return trim(out);
}

Nfa minimize(const Nfa& dfa) {
  if (!dfa.is_deterministic()) {
    throw std::invalid_argument("minimize: automaton is not deterministic");
  }
  const std::size_t n = dfa.state_count();
  const std::size_t sink = n;
  // Completed transition table.
  std::vector<std::array<std::size_t, 4>> delta(n + 1);
  for (auto& row : delta) {
    row.fill(sink);
  }
  for (State s = 0; s < n; ++s) {
    for (const Edge& e : dfa.edges(s)) {
      delta[s][e.label] = e.to;
    }
  }
  std::vector<std::size_t> cls(n + 1);
  for (std::size_t s = 0; s <= n; ++s) {
    cls[s] = (s < n && dfa.is_accepting(static_cast<State>(s))) ? 1 : 0;
  }
  std::size_t class_count = 0;
  for (;;) {
    std::map<std::array<std::size_t, 5>, std::size_t> signature_ids;
    std::vector<std::size_t> next(n + 1);
    for (std::size_t s = 0; s <= n; ++s) {
      std::array<std::size_t, 5> sig{cls[s], cls[delta[s][0]], cls[delta[s][1]],
                                     cls[delta[s][2]], cls[delta[s][3]]};
      auto [it, inserted] = signature_ids.emplace(sig, signature_ids.size());
      next[s] = it->second;
    }
    const std::size_t new_count = signature_ids.size();
    cls = std::move(next);
    if (new_count == class_count) {
      break;
    }
    class_count = new_count;
  }
  // Build the quotient, dropping the sink class.
  constexpr State kNone = ~State{0};
  std::vector<State> class_state(class_count, kNone);
  Nfa out;
  class_state[cls[dfa.initial()]] = out.initial();
  std::vector<std::size_t> representative(class_count, sink);
  for (std::size_t s = 0; s < n; ++s) {
    if (representative[cls[s]] == sink) {
      representative[cls[s]] = s;
    }
  }
  for (std::size_t c = 0; c < class_count; ++c) {
    if (c == cls[sink] || representative[c] == sink) {
      continue;
    }
    if (class_state[c] == kNone) {
      class_state[c] = out.add_state();
    }
    out.set_accepting(class_state[c], dfa.is_accepting(static_cast<State>(representative[c])));
  }
  for (std::size_t c = 0; c < class_count; ++c) {
    if (c == cls[sink] || representative[c] == sink) {
      continue;
    }
    for (std::uint8_t label = 0; label < kEpsilon; ++label) {
      std::size_t t = delta[representative[c]][label];
      if (cls[t] == cls[sink]) {
        continue;
      }
      out.add_edge(class_state[c], label, class_state[cls[t]]);
    }
  }
  return trim(out);
}

std::set<Word> accepted_words(const Nfa& input, std::size_t max_len) {
  Nfa d = trim(determinize(input));
  std::set<Word> words;
  Word cur;
  // Depth-first over the deterministic automaton.
  auto visit = [&](auto&& self, State s) -> void {
    if (d.is_accepting(s)) {
      words.insert(cur);
    }
    if (cur.size() == max_len) {
      return;
    }
    for (const Edge& e : d.edges(s)) {
      cur.push_back(static_cast<Letter>(e.label));
      self(self, e.to);
      cur.pop_back();
    }
  };
  if (d.state_count() > 0) {
    visit(visit, d.initial());
  }
  return words;
}

}  // namespace semireach::automata
