#include "catch_amalgamated.hpp"

#include "semireach/cli.hpp"
#include "semireach/oracle.hpp"
#include "support.hpp"

using namespace semireach;
using namespace semireach::cli;
using semireach::testing::T;

namespace {

std::string error_of(const Json& req) {
  try {
    run_request(req);
  } catch (const RequestError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("run_request examples") {
  const Json m = Json::parse(R"({"kind": "heisenberg-membership", "n": 3,
      "generators": [["1","0","0"], ["-1","0","0"], ["0","1","0"]], "target": ["0","1","2"]})");
  const RunResult a = run_request(m);
  CHECK(a.exit_code == kExitYes);
  CHECK(a.doc["verdict"] == "yes");
  CHECK(a.doc["witness"] == Json::array({1, 1, 3, 2, 2}));

  const Json h = Json::parse(R"({"kind": "gl2z-halfspace", "generators": [[[0,-1],[1,1]]],
      "u": [0, 1], "v": [1, 0], "lambda": 2})");
  const RunResult b = run_request(h);
  CHECK(b.doc["verdict"] == "no");
  CHECK(b.exit_code == kExitNo);

  const RunResult c = run_request(Json::parse(R"({"kind": "gl2z-canonical", "matrix": [[1,1],[0,1]]})"));
  CHECK(c.doc["word"] == "XSR");
  CHECK(canonical_of("[[1,1],[0,1]]") == "XSR");
  CHECK(canonical_of("SS") == "X");
}

TEST_CASE("run_request element formats") {
  const Json triples = Json::parse(R"({"kind": "heisenberg-membership",
      "generators": [{"a": ["1/2"], "b": ["1/2"], "c": "0"}], "target": ["1", "1", "1/4"]})");
  CHECK(run_request(triples).doc["verdict"] == "yes");
  const Json matrices = Json::parse(R"({"kind": "heisenberg-membership",
      "generators": [[[1,1,0],[0,1,0],[0,0,1]], [[1,0,0],[0,1,1],[0,0,1]], [-1,-1,0]],
      "target": [0, 0, 7]})");
  const RunResult r = run_request(matrices, {.witness = true, .bound = std::nullopt, .diagnostics = true});
  CHECK(r.doc["verdict"] == "yes");
  CHECK(r.doc["diagnostics"]["case"] == "noncommutative");
  CHECK(r.doc["diagnostics"]["p"] == "1");
  CHECK(r.doc["diagnostics"]["q"] == "-3");
  const Json words = Json::parse(R"({"kind": "gl2z-membership", "generators": ["R"], "target": "RR"})");
  CHECK(run_request(words).doc["verdict"] == "yes");
}

TEST_CASE("run_request heisenberg-halfspace") {
  const Json req = Json::parse(R"({"kind": "heisenberg-halfspace",
      "generators": [[1,0,0],[0,1,0]], "u": [1,0,0], "v": [0,0,1], "lambda": 4})");
  const RunResult r = run_request(req, {.witness = true, .bound = std::nullopt, .diagnostics = true});
  CHECK(r.doc["verdict"] == "yes");
  CHECK(r.doc["witness"] == Json::array({1, 1, 2, 2}));
  const Json open = Json::parse(R"({"kind": "heisenberg-halfspace",
      "generators": [[1,0,0],[0,1,0],[-1,-1,0]], "u": [0,1,0], "v": [0,-1,1], "lambda": 1})");
  const RunResult u = run_request(open);
  const std::string verdict = u.doc["verdict"];
  CHECK(u.exit_code == (verdict == "yes" ? kExitYes : verdict == "no" ? kExitNo : kExitUnknown));
}

TEST_CASE("run_request input errors are distinct") {
  const std::string det = error_of(Json::parse(
      R"({"kind": "gl2z-membership", "generators": [[[1,1],[0,2]]], "target": [[1,0],[0,1]]})"));
  CHECK(det.find("determinant") != std::string::npos);
  const std::string dim = error_of(Json::parse(
      R"({"kind": "heisenberg-membership", "n": 4, "generators": [[1,0,0]], "target": [0,0,0,0,0]})"));
  CHECK(dim.find("dimension mismatch") != std::string::npos);
  const std::string shape = error_of(Json::parse(
      R"({"kind": "heisenberg-membership", "generators": [[[1,1,0],[1,1,0],[0,0,1]]], "target": [0,0,0]})"));
  CHECK(shape.find("not a Heisenberg matrix") != std::string::npos);
  CHECK(error_of(Json::parse(R"({"kind": "other"})")).find("unknown kind") != std::string::npos);
  CHECK(error_of(Json::parse(R"({"kind": "gl2z-membership", "generators": ["R"]})")).find("missing field") !=
        std::string::npos);
  CHECK(error_of(Json::parse(R"({"kind": "heisenberg-membership", "generators": [["1/0","0","0"]],
      "target": [0,0,0]})")).find("zero denominator") != std::string::npos);
  CHECK(det != dim);
}

TEST_CASE("bfs_oracle examples") {
  const auto a = bfs_oracle<HeisTriple, HeisTripleHash>({T(1, 0, 0)}, 3, heis_mul);
  CHECK(a.reached.size() == 3);
  CHECK(a.reached.count(T(3, 0, 0)) == 1);
  CHECK(a.reached.at(T(2, 0, 0)) == std::vector<std::size_t>{0, 0});

  const gl2z::Mat2 r = gl2z::Mat2::of(0, -1, 1, 1);
  const auto b = bfs_oracle<gl2z::Mat2, gl2z::Mat2Hash>(
      {r}, 10, [](const gl2z::Mat2& x, const gl2z::Mat2& y) { return x * y; });
  CHECK(b.reached.size() == 6);
  CHECK(b.closed);

  const auto c = bfs_oracle<HeisTriple, HeisTripleHash>({T(1, 0, 0), T(0, 1, 0), T(-1, -1, 0)}, 3, heis_mul);
  CHECK(c.reached.count(HeisTriple(3)) == 1);
}

TEST_CASE("run_oracle") {
  const Json m = Json::parse(R"({"kind": "heisenberg-membership",
      "generators": [[1,0,0],[-1,0,0],[0,1,0]], "target": [0,1,2]})");
  const RunResult r = run_oracle(m, 5);
  CHECK(r.doc["found"] == true);
  CHECK(r.doc["witness"] == Json::array({1, 1, 3, 2, 2}));
  const Json n = Json::parse(R"({"kind": "gl2z-halfspace", "generators": ["R"], "u": [0,1], "v": [1,0],
      "lambda": 2})");
  CHECK(run_oracle(n, 8).doc["found"] == false);
  CHECK(run_oracle(n, 8).doc["closed"] == true);
}
