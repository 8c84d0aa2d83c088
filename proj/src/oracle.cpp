#include "semireach/oracle.hpp"

#include <algorithm>

namespace semireach {

using gl2z::CanonState;
using gl2z::Letter;
using gl2z::Word;

namespace {

void extend(Word& w, CanonState q, std::size_t max_len,
            const std::function<void(const Word&)>& f) {
  f(w);
  if (w.size() == max_len) {
    return;
  }
  for (Letter l : gl2z::kAlphabet) {
    if (auto next = gl2z::canon_step(q, l)) {
      w.push_back(l);
      extend(w, *next, max_len, f);
      w.pop_back();
    }
  }
}

}  // namespace

void for_each_canonical(std::size_t max_len, const std::function<void(const Word&)>& f) {
  Word w;
  extend(w, CanonState::Start, max_len, f);
}

std::vector<Word> enumerate_canonical(std::size_t max_len) {
  std::vector<Word> out;
  for_each_canonical(max_len, [&](const Word& w) { out.push_back(w); });
  std::stable_sort(out.begin(), out.end(),
                   [](const Word& a, const Word& b) { return a.size() < b.size(); });
  return out;
}

}  // namespace semireach
