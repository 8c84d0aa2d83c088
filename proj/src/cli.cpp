#include "semireach/cli.hpp"

#include "semireach/gl2z.hpp"
#include "semireach/gl2z_sets.hpp"
#include "semireach/halfspace_heis.hpp"
#include "semireach/membership.hpp"
#include "semireach/oracle.hpp"

#include <algorithm>

namespace semireach::cli {

namespace {

using gl2z::Mat2;
using semireach::HeisTriple;

[[noreturn]] void fail(const std::string& msg) { throw RequestError(msg); }

const Json& field(const Json& doc, const char* name) {
  if (!doc.is_object() || !doc.contains(name)) {
    fail(std::string("missing field '") + name + "'");
  }
  return doc.at(name);
}

Rational rational_of(const Json& x, const std::string& where) {
  try {
    if (x.is_string()) return parse_rational(x.get<std::string>());
    if (x.is_number_integer()) return Rational(parse_rational(x.dump()));
  } catch (const std::invalid_argument& e) {
    fail(where + ": " + e.what());
  }
  fail(where + ": expected a rational as a string \"p/q\" or an integer");
}

Integer integer_of(const Json& x, const std::string& where) {
  const Rational r = rational_of(x, where);
  if (!is_integer(r)) fail(where + ": expected an integer, got " + to_string(r));
  return r.get_num();
}

RationalVec rational_vec(const Json& x, const std::string& where) {
  if (!x.is_array()) fail(where + ": expected an array");
  RationalVec out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    out.push_back(rational_of(x[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::size_t dimension_of(const Json& req) {
  if (!req.contains("n")) return 3;
  const Json& n = req.at("n");
  if (!n.is_number_integer() || n.get<long>() < 3) fail("field 'n' must be an integer >= 3");
  return n.get<std::size_t>();
}

HeisTriple heis_from_matrix(const Json& x, std::size_t n, const std::string& where) {
  if (x.size() != n) {
    fail("dimension mismatch: " + where + " is " + std::to_string(x.size()) + "x" +
         std::to_string(x.size()) + ", expected " + std::to_string(n) + "x" + std::to_string(n));
  }
  std::vector<RationalVec> m;
  for (std::size_t i = 0; i < n; ++i) {
    RationalVec row = rational_vec(x[i], where + " row " + std::to_string(i + 1));
    if (row.size() != n) {
      fail("dimension mismatch: " + where + " row " + std::to_string(i + 1) + " has " +
           std::to_string(row.size()) + " entries, expected " + std::to_string(n));
    }
    m.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const bool free = (i == 0 && j > 0) || (j == n - 1 && i < n - 1);
      const Rational want = i == j ? 1 : 0;
      if (!free && m[i][j] != want) {
        fail("not a Heisenberg matrix: " + where + " entry (" + std::to_string(i + 1) + "," +
             std::to_string(j + 1) + ") must be " + to_string(want));
      }
    }
  }
  RationalVec a(m[0].begin() + 1, m[0].end() - 1);
  RationalVec b;
  for (std::size_t i = 1; i + 1 < n; ++i) b.push_back(m[i][n - 1]);
  return HeisTriple(std::move(a), std::move(b), m[0][n - 1]);
}

HeisTriple heis_of(const Json& x, std::size_t n, const std::string& where) {
  const std::size_t d = n - 2;
  if (x.is_object()) {
    RationalVec a = rational_vec(field(x, "a"), where + ".a");
    RationalVec b = rational_vec(field(x, "b"), where + ".b");
    if (a.size() != d || b.size() != d) {
      fail("dimension mismatch: " + where + " has vectors of length " + std::to_string(a.size()) +
           " and " + std::to_string(b.size()) + ", expected " + std::to_string(d));
    }
    return HeisTriple(std::move(a), std::move(b), rational_of(field(x, "c"), where + ".c"));
  }
  if (!x.is_array()) fail(where + ": expected a triple or a matrix");
  if (!x.empty() && x[0].is_array()) return heis_from_matrix(x, n, where);
  RationalVec flat = rational_vec(x, where);
  if (flat.size() != 2 * d + 1) {
    fail("dimension mismatch: " + where + " has " + std::to_string(flat.size()) +
         " entries, expected " + std::to_string(2 * d + 1) + " for n = " + std::to_string(n));
  }
  RationalVec a(flat.begin(), flat.begin() + static_cast<std::ptrdiff_t>(d));
  RationalVec b(flat.begin() + static_cast<std::ptrdiff_t>(d), flat.end() - 1);
  return HeisTriple(std::move(a), std::move(b), flat.back());
}

std::vector<HeisTriple> heis_generators(const Json& req, std::size_t n) {
  const Json& g = field(req, "generators");
  if (!g.is_array() || g.empty()) fail("'generators' must be a nonempty array");
  std::vector<HeisTriple> out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    out.push_back(heis_of(g[i], n, "generator " + std::to_string(i + 1)));
  }
  return out;
}

Mat2 mat2_of(const Json& x, const std::string& where) {
  Mat2 m;
  if (x.is_string()) {
    try {
      m = gl2z::phi_eval(gl2z::parse_word(x.get<std::string>()));
    } catch (const std::invalid_argument& e) {
      fail(where + ": " + e.what());
    }
    return m;
  }
  if (!x.is_array() || x.size() != 2 || !x[0].is_array() || !x[1].is_array() || x[0].size() != 2 ||
      x[1].size() != 2) {
    fail(where + ": expected a 2x2 matrix or a word over X, N, S, R");
  }
  m.a11 = integer_of(x[0][0], where);
  m.a12 = integer_of(x[0][1], where);
  m.a21 = integer_of(x[1][0], where);
  m.a22 = integer_of(x[1][1], where);
  if (!m.in_gl2z()) {
    fail("not in GL(2,Z): " + where + " has determinant " + to_string(m.det()) + ", expected 1 or -1");
  }
  return m;
}

std::vector<Mat2> gl2z_generators(const Json& req) {
  const Json& g = field(req, "generators");
  if (!g.is_array() || g.empty()) fail("'generators' must be a nonempty array");
  std::vector<Mat2> out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    out.push_back(mat2_of(g[i], "generator " + std::to_string(i + 1)));
  }
  return out;
}

std::array<Rational, 2> pair_of(const Json& x, const char* name) {
  RationalVec v = rational_vec(field(x, name), name);
  if (v.size() != 2) fail(std::string("dimension mismatch: '") + name + "' must have 2 entries");
  return {v[0], v[1]};
}

RationalVec heis_vector(const Json& req, const char* name, std::size_t n) {
  RationalVec v = rational_vec(field(req, name), name);
  if (v.size() != n) {
    fail(std::string("dimension mismatch: '") + name + "' has " + std::to_string(v.size()) +
         " entries, expected " + std::to_string(n));
  }
  return v;
}

const Json& options_of(const Json& req) {
  static const Json empty = Json::object();
  if (req.contains("options")) {
    if (!req.at("options").is_object()) fail("'options' must be an object");
    return req.at("options");
  }
  return empty;
}

Json one_based(const std::vector<std::size_t>& w) {
  Json out = Json::array();
  for (std::size_t i : w) out.push_back(i + 1);
  return out;
}

Json rational_json(const RationalVec& v) {
  Json out = Json::array();
  for (const Rational& x : v) out.push_back(to_string(x));
  return out;
}

Json integer_json(const IntegerVec& v) {
  Json out = Json::array();
  for (const Integer& x : v) out.push_back(to_string(x));
  return out;
}

Json triple_json(const HeisTriple& x) {
  return Json{{"a", rational_json(x.a())}, {"b", rational_json(x.b())}, {"c", to_string(x.c())}};
}

Json index_json(const std::vector<std::size_t>& idx) { return one_based(idx); }

void check(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("witness check failed: ") + what);
}

RunResult finish(Json doc, const Verdict& v, const RunOptions& opt) {
  doc["verdict"] = to_string(v.kind);
  if (v.witness && opt.witness) doc["witness"] = one_based(*v.witness);
  if (v.is_unknown() && v.bound) doc["bound"] = *v.bound;
  return RunResult{std::move(doc), exit_code(v.kind)};
}

RunResult heis_membership(const Json& req, const RunOptions& opt) {
  const std::size_t n = dimension_of(req);
  heis::MembershipInstance inst{heis_generators(req, n), heis_of(field(req, "target"), n, "target")};
  const heis::MembershipReport rep = heis::decide_membership_report(inst);
  if (rep.verdict.witness) {
    check(!rep.verdict.witness->empty() &&
              heis_product(inst.generators, *rep.verdict.witness, n) == inst.target,
          "product differs from the target");
  }
  Json doc{{"kind", "heisenberg-membership"}};
  if (opt.diagnostics) {
    Json d{{"scale", to_string(rep.scale)}, {"case", rep.case_name}};
    if (rep.partition) {
      d["g0"] = index_json(rep.partition->g0);
      d["gplus"] = index_json(rep.partition->gplus);
      Json u = Json::array();
      for (const RationalVec& w : rep.partition->witness) u.push_back(rational_json(w));
      d["u"] = u;
    }
    if (rep.bounds) {
      d["beta"] = integer_json(rep.bounds->beta);
      d["beta_total"] = to_string(rep.bounds->total);
    }
    if (rep.central) {
      const heis::CentralPair& cp = *rep.central;
      d["plus"] = triple_json(cp.plus);
      d["minus"] = triple_json(cp.minus);
      d["p"] = to_string(cp.p);
      d["q"] = to_string(cp.q);
      d["m"] = to_string(cp.m);
      d["t"] = cp.t;
      d["delta"] = to_string(cp.delta);
      d["r"] = integer_json(cp.r);
      d["plus_word"] = one_based(cp.plus_word);
      d["minus_word"] = one_based(cp.minus_word);
    }
    if (rep.case_name == "commutative") {
      d["multisets"] = rep.case1.multisets;
      d["arrangements"] = rep.case1.arrangements;
      d["ilp_calls"] = rep.case1.ilp_calls;
    }
    doc["diagnostics"] = d;
  }
  return finish(std::move(doc), rep.verdict, opt);
}

RunResult heis_halfspace(const Json& req, const RunOptions& opt) {
  const std::size_t n = dimension_of(req);
  const std::vector<HeisTriple> gens = heis_generators(req, n);
  const RationalVec u = heis_vector(req, "u", n);
  const RationalVec v = heis_vector(req, "v", n);
  const Rational lambda = rational_of(field(req, "lambda"), "lambda");
  heis::QuadOptions q;
  const Json& o = options_of(req);
  if (o.contains("bound")) q.bound = o.at("bound").get<std::size_t>();
  if (opt.bound) q.bound = *opt.bound;
  const heis::HalfspaceReport rep = heis::decide_halfspace_heis_report(gens, u, v, lambda, q);
  if (rep.verdict.witness) {
    check(!rep.verdict.witness->empty() &&
              heis_bilinear(u, heis_product(gens, *rep.verdict.witness, n), v) >= lambda,
          "product does not satisfy the inequality");
  }
  Json doc{{"kind", "heisenberg-halfspace"}};
  if (opt.diagnostics) {
    Json d{{"permutations", rep.permutations},
           {"unknown_permutations", rep.unknown_permutations},
           {"bound", q.bound}};
    if (rep.verdict.is_yes()) {
      d["sigma"] = one_based(rep.sigma);
      d["exponents"] = integer_json(rep.exponents);
      std::vector<HeisTriple> seq;
      for (std::size_t i : rep.sigma) seq.push_back(gens[i]);
      d["delta"] = to_string(heis::delta_of_sequence(seq));
    }
    doc["diagnostics"] = d;
  }
  return finish(std::move(doc), rep.verdict, opt);
}

gl2z::Gl2zOptions gl2z_options(const Json& req, const RunOptions& opt) {
  gl2z::Gl2zOptions g;
  const Json& o = options_of(req);
  if (o.contains("witness_depth")) g.witness_depth = o.at("witness_depth").get<std::size_t>();
  g.want_witness = opt.witness;
  return g;
}

Mat2 gl2z_product(const std::vector<Mat2>& gens, const std::vector<std::size_t>& w) {
  Mat2 m = Mat2::identity();
  for (std::size_t i : w) m = m * gens[i];
  return m;
}

RunResult gl2z_membership(const Json& req, const RunOptions& opt) {
  const std::vector<Mat2> gens = gl2z_generators(req);
  const Mat2 target = mat2_of(field(req, "target"), "target");
  const Verdict v = gl2z::decide_membership_gl2z(gens, target, gl2z_options(req, opt));
  if (v.witness) {
    check(!v.witness->empty() && gl2z_product(gens, *v.witness) == target,
          "product differs from the target");
  }
  Json doc{{"kind", "gl2z-membership"}};
  if (opt.diagnostics) {
    doc["diagnostics"] = Json{{"target_word", gl2z::to_string(gl2z::canonical_word(target))}};
  }
  return finish(std::move(doc), v, opt);
}

RunResult gl2z_halfspace(const Json& req, const RunOptions& opt) {
  const std::vector<Mat2> gens = gl2z_generators(req);
  gl2z::HalfSpaceQuery2 q{pair_of(req, "u"), pair_of(req, "v"),
                          rational_of(field(req, "lambda"), "lambda")};
  const Verdict v = gl2z::decide_halfspace_gl2z(gens, q, gl2z_options(req, opt));
  if (v.witness) {
    const Mat2 m = gl2z_product(gens, *v.witness);
    const Rational val = q.u[0] * (m.a11 * q.v[0] + m.a12 * q.v[1]) +
                         q.u[1] * (m.a21 * q.v[0] + m.a22 * q.v[1]);
    check(!v.witness->empty() && val >= q.lambda, "product does not satisfy the inequality");
  }
  Json doc{{"kind", "gl2z-halfspace"}};
  if (opt.diagnostics) {
    const gl2z::HalfSpaceQuery2 nq = gl2z::normalize_query(q);
    doc["diagnostics"] = Json{{"u", rational_json({nq.u[0], nq.u[1]})},
                              {"v", rational_json({nq.v[0], nq.v[1]})},
                              {"lambda", to_string(nq.lambda)}};
  }
  return finish(std::move(doc), v, opt);
}

RunResult gl2z_canonical(const Json& req) {
  const Mat2 m = mat2_of(field(req, "matrix"), "matrix");
  return RunResult{Json{{"kind", "gl2z-canonical"}, {"word", gl2z::to_string(gl2z::canonical_word(m))}},
                   kExitYes};
}

std::string kind_of(const Json& req) {
  const Json& k = field(req, "kind");
  if (!k.is_string()) fail("'kind' must be a string");
  return k.get<std::string>();
}

}  // namespace

int exit_code(VerdictKind k) {
  switch (k) {
    case VerdictKind::Yes: return kExitYes;
    case VerdictKind::No: return kExitNo;
    case VerdictKind::Unknown: return kExitUnknown;
  }
  return kExitInternalError;
}

RunResult run_request(const Json& request, const RunOptions& opt) {
  const std::string kind = kind_of(request);
  try {
    if (kind == "heisenberg-membership") return heis_membership(request, opt);
    if (kind == "heisenberg-halfspace") return heis_halfspace(request, opt);
    if (kind == "gl2z-membership") return gl2z_membership(request, opt);
    if (kind == "gl2z-halfspace") return gl2z_halfspace(request, opt);
    if (kind == "gl2z-canonical") return gl2z_canonical(request);
  } catch (const Json::exception& e) {
    fail(std::string("malformed request: ") + e.what());
  }
  fail("unknown kind '" + kind + "'");
}

RunResult run_oracle(const Json& request, std::size_t depth) {
  if (depth == 0) fail("oracle depth must be at least 1");
  const std::string kind = kind_of(request);
  Json doc{{"kind", kind}, {"depth", depth}};
  std::optional<std::vector<std::size_t>> best;
  auto consider = [&](const std::vector<std::size_t>& w) {
    if (!best || w.size() < best->size() || (w.size() == best->size() && w < *best)) best = w;
  };
  if (kind == "heisenberg-membership" || kind == "heisenberg-halfspace") {
    const std::size_t n = dimension_of(request);
    const std::vector<HeisTriple> gens = heis_generators(request, n);
    const auto res = bfs_oracle<HeisTriple, HeisTripleHash>(gens, depth, heis_mul);
    doc["reachable"] = res.reached.size();
    doc["closed"] = res.closed;
    if (kind == "heisenberg-membership") {
      const HeisTriple target = heis_of(field(request, "target"), n, "target");
      if (auto it = res.reached.find(target); it != res.reached.end()) consider(it->second);
    } else {
      const RationalVec u = heis_vector(request, "u", n);
      const RationalVec v = heis_vector(request, "v", n);
      const Rational lambda = rational_of(field(request, "lambda"), "lambda");
      for (const auto& [x, w] : res.reached) {
        if (heis_bilinear(u, x, v) >= lambda) consider(w);
      }
    }
  } else if (kind == "gl2z-membership" || kind == "gl2z-halfspace") {
    const std::vector<Mat2> gens = gl2z_generators(request);
    const auto res = bfs_oracle<Mat2, gl2z::Mat2Hash>(
        gens, depth, [](const Mat2& x, const Mat2& y) { return x * y; });
    doc["reachable"] = res.reached.size();
    doc["closed"] = res.closed;
    if (kind == "gl2z-membership") {
      const Mat2 target = mat2_of(field(request, "target"), "target");
      if (auto it = res.reached.find(target); it != res.reached.end()) consider(it->second);
    } else {
      const auto u = pair_of(request, "u");
      const auto v = pair_of(request, "v");
      const Rational lambda = rational_of(field(request, "lambda"), "lambda");
      for (const auto& [m, w] : res.reached) {
        const Rational val =
            u[0] * (m.a11 * v[0] + m.a12 * v[1]) + u[1] * (m.a21 * v[0] + m.a22 * v[1]);
        if (val >= lambda) consider(w);
      }
    }
  } else {
    fail("oracle does not support kind '" + kind + "'");
  }
  doc["found"] = best.has_value();
  if (best) doc["witness"] = one_based(*best);
  return RunResult{std::move(doc), best ? kExitYes : kExitNo};
}

std::string canonical_of(const std::string& matrix_text) {
  Json m;
  try {
    m = Json::parse(matrix_text);
  } catch (const Json::exception&) {
    m = matrix_text;  // a word such as "SRS"
  }
  return gl2z::to_string(gl2z::canonical_word(mat2_of(m, "matrix")));
}

}  // namespace semireach::cli
