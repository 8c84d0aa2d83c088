// semireach: decide reachability requests from JSON files.
//
//   semireach decide request.json [--witness] [--bound B] [--diagnostics]
//   semireach canonical "[[1,1],[0,1]]"
//   semireach oracle request.json --depth D
//
// Exit codes: 0 yes, 1 no, 2 unknown, 3 input error, 4 internal error.

#include "semireach/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using semireach::cli::Json;

Json read_request(const std::string& path) {
  std::stringstream text;
  if (path == "-") {
    text << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw semireach::cli::RequestError("cannot open '" + path + "'");
    text << in.rdbuf();
  }
  try {
    return Json::parse(text.str());
  } catch (const Json::parse_error& e) {
    throw semireach::cli::RequestError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semigroup reachability in the Heisenberg group and GL(2,Z)"};
  app.require_subcommand(1);

  std::string request_path;
  bool witness = false;
  bool diagnostics = false;
  std::size_t bound = 0;
  auto* decide = app.add_subcommand("decide", "Decide a request file ('-' for stdin)");
  decide->add_option("request", request_path, "Request file")->required();
  decide->add_flag("--witness", witness, "Print a witness when one is known");
  auto* bound_opt = decide->add_option("--bound", bound, "Quadratic search bound");
  decide->add_flag("--diagnostics", diagnostics, "Print intermediate objects");

  std::string matrix;
  auto* canonical = app.add_subcommand("canonical", "Canonical word of a GL(2,Z) matrix");
  canonical->add_option("matrix", matrix, "Matrix as [[a,b],[c,d]] or a word")->required();

  std::string oracle_path;
  std::size_t depth = 0;
  auto* oracle = app.add_subcommand("oracle", "Brute-force products up to a length");
  oracle->add_option("request", oracle_path, "Request file")->required();
  oracle->add_option("--depth", depth, "Maximum product length")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : semireach::cli::kExitInputError;
  }

  try {
    if (*canonical) {
      std::cout << semireach::cli::canonical_of(matrix) << "\n";
      return 0;
    }
    if (*oracle) {
      const auto res = semireach::cli::run_oracle(read_request(oracle_path), depth);
      std::cout << res.doc.dump(2) << "\n";
      return res.exit_code;
    }
    const Json req = read_request(request_path);
    semireach::cli::RunOptions opt;
    opt.witness = witness;
    if (req.contains("options") && req["options"].is_object() && req["options"].contains("witness")) {
      opt.witness = opt.witness || req["options"]["witness"].get<bool>();
    }
    opt.diagnostics = diagnostics;
    if (*bound_opt) opt.bound = bound;
    const auto res = semireach::cli::run_request(req, opt);
    std::cout << res.doc.dump(2) << "\n";
    return res.exit_code;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return semireach::cli::kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return semireach::cli::kExitInternalError;
  }
}
