#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace semireach {

enum class VerdictKind { Yes, No, Unknown };

/// Outcome of a decision procedure. A witness is a sequence of 0-based
/// generator indices whose product is the target (or satisfies the inequality).
struct Verdict {
  VerdictKind kind = VerdictKind::No;
  std::optional<std::vector<std::size_t>> witness;
  /// Search bound that was exhausted, for Unknown.
  std::optional<std::size_t> bound;

  static Verdict yes(std::optional<std::vector<std::size_t>> w = std::nullopt) {
    return Verdict{VerdictKind::Yes, std::move(w), std::nullopt};
  }
  static Verdict no() { return Verdict{}; }
  static Verdict unknown(std::size_t b) { return Verdict{VerdictKind::Unknown, std::nullopt, b}; }

  bool is_yes() const { return kind == VerdictKind::Yes; }
  bool is_no() const { return kind == VerdictKind::No; }
  bool is_unknown() const { return kind == VerdictKind::Unknown; }
};

inline std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Yes: return "yes";
    case VerdictKind::No: return "no";
    case VerdictKind::Unknown: return "unknown";
  }
  return "?";
}

}  // namespace semireach
