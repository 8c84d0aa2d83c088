#pragma once

// Request documents (JSON) and their dispatch to the decision procedures.
//
//   {"kind": "heisenberg-membership", "n": 3,
//    "generators": [["1","0","0"], ...], "target": ["0","1","2"]}
//
// Heisenberg elements are given as {"a": [...], "b": [...], "c": "..."}, as a
// flat list a..., b..., c, or as a full n x n matrix. GL(2,Z) elements are 2x2
// integer matrices or words over X, N, S, R. Rationals are strings "p/q" or
// JSON integers.

#include "semireach/verdict.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace semireach::cli {

using Json = nlohmann::json;

/// Malformed request: bad field, bad number, wrong shape or dimension.
class RequestError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitUnknown = 2;
inline constexpr int kExitInputError = 3;
inline constexpr int kExitInternalError = 4;

int exit_code(VerdictKind k);

struct RunOptions {
  bool witness = true;
  /// Overrides the quadratic search bound of heisenberg-halfspace.
  std::optional<std::size_t> bound;
  bool diagnostics = false;
};

struct RunResult {
  Json doc;
  int exit_code = kExitYes;
};

/// Decides the request. Yes results carrying a witness have been checked by
/// re-multiplication. Throws RequestError on malformed input.
RunResult run_request(const Json& request, const RunOptions& opt = {});

/// Brute-force products of length <= depth, compared against the request's
/// target or inequality.
RunResult run_oracle(const Json& request, std::size_t depth);

/// Canonical word of a GL(2,Z) matrix given as JSON text, e.g. "[[1,1],[0,1]]".
std::string canonical_of(const std::string& matrix_text);

}  // namespace semireach::cli
