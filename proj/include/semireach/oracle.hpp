#pragma once

// Brute-force search over products of generators. Used for witnesses and as a
// reference in tests.

#include "semireach/gl2z.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

namespace semireach {

template <class T, class Hash>
struct OracleResult {
  /// Every nonempty product of length <= depth, with a shortest witness
  /// (0-based generator indices).
  std::unordered_map<T, std::vector<std::size_t>, Hash> reached;
  /// True if some round added no new element: the semigroup is finite and complete.
  bool closed = false;
  /// Number of rounds performed (<= depth).
  std::size_t rounds = 0;
};

/// Breadth-first enumeration of products g_{i1} ... g_{il}, l <= depth.
/// Elements are deduplicated, so each round only extends the new frontier.
template <class T, class Hash, class Mul>
OracleResult<T, Hash> bfs_oracle(const std::vector<T>& gens, std::size_t depth, Mul mul) {
  OracleResult<T, Hash> out;
  std::vector<T> frontier;
  for (std::size_t i = 0; i < gens.size() && depth > 0; ++i) {
    if (out.reached.emplace(gens[i], std::vector<std::size_t>{i}).second) {
      frontier.push_back(gens[i]);
    }
  }
  if (depth > 0) {
    out.rounds = 1;
  }
  while (out.rounds < depth && !frontier.empty()) {
    std::vector<T> next;
    for (const T& x : frontier) {
      const std::vector<std::size_t> base = out.reached.at(x);
      for (std::size_t i = 0; i < gens.size(); ++i) {
        T y = mul(x, gens[i]);
        if (!out.reached.count(y)) {
          std::vector<std::size_t> w = base;
          w.push_back(i);
          out.reached.emplace(y, std::move(w));
          next.push_back(std::move(y));
        }
      }
    }
    ++out.rounds;
    frontier = std::move(next);
  }
  out.closed = frontier.empty() && depth > 0;
  return out;
}

/// Shortest product (up to `depth` factors, at most `max_elements` distinct
/// elements visited) satisfying `pred`.
template <class T, class Hash, class Mul, class Pred>
std::optional<std::vector<std::size_t>> find_product(const std::vector<T>& gens, std::size_t depth,
                                                     Mul mul, Pred pred,
                                                     std::size_t max_elements = 200000) {
  std::unordered_map<T, std::vector<std::size_t>, Hash> seen;
  std::vector<T> frontier;
  for (std::size_t i = 0; i < gens.size() && depth > 0; ++i) {
    if (pred(gens[i])) {
      return std::vector<std::size_t>{i};
    }
    if (seen.emplace(gens[i], std::vector<std::size_t>{i}).second) {
      frontier.push_back(gens[i]);
    }
  }
  for (std::size_t round = 1; round < depth && !frontier.empty(); ++round) {
    std::vector<T> next;
    for (const T& x : frontier) {
      const std::vector<std::size_t> base = seen.at(x);
      for (std::size_t i = 0; i < gens.size(); ++i) {
        T y = mul(x, gens[i]);
        if (seen.count(y)) {
          continue;
        }
        std::vector<std::size_t> w = base;
        w.push_back(i);
        if (pred(y)) {
          return w;
        }
        if (seen.size() >= max_elements) {
          return std::nullopt;
        }
        seen.emplace(y, std::move(w));
        next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

/// All canonical words of length <= max_len, each once, shortest first.
std::vector<gl2z::Word> enumerate_canonical(std::size_t max_len);

/// Calls f on every canonical word of length <= max_len (depth-first).
void for_each_canonical(std::size_t max_len, const std::function<void(const gl2z::Word&)>& f);

}  // namespace semireach
