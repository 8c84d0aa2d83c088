#include "semireach/membership.hpp"

#include "semireach/ilp.hpp"
#include "semireach/lp.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace semireach::heis {

using solvers::IlpOptions;
using solvers::IlpSystem;
using solvers::LinSystem;
using solvers::Relation;

namespace {

// Smallest s with x | s^2, by trial division; falls back to x itself when a
// large prime factor may remain.
Integer square_root_cover(Integer x) {
  Integer s = 1;
  for (unsigned long p = 2; p <= 1000000 && Integer(p) * p <= x; ++p) {
    unsigned e = 0;
    while (x % p == 0) {
      x /= p;
      ++e;
    }
    for (unsigned i = 0; i < (e + 1) / 2; ++i) {
      s *= p;
    }
  }
  return s * x;
}

HeisTriple scale_triple(const HeisTriple& x, const Integer& n) {
  RationalVec a = x.a(), b = x.b();
  for (Rational& e : a) e *= n;
  for (Rational& e : b) e *= n;
  return HeisTriple(std::move(a), std::move(b), x.c() * n * n);
}

Integer as_integer(const Rational& x) {
  if (!is_integer(x)) {
    throw std::logic_error("expected an integer instance");
  }
  return x.get_num();
}

// Twice the corner of log(x): 2c - a^T b.
Integer twice_log_corner(const HeisTriple& x) {
  Rational v = 2 * x.c() - dot(x.a(), x.b());
  return as_integer(v);
}

// Corner of [log x, log y] = x.a^T y.b - y.a^T x.b.
Integer bracket(const HeisTriple& x, const HeisTriple& y) {
  return as_integer(dot(x.a(), y.b()) - dot(y.a(), x.b()));
}

bool verify_word(const MembershipInstance& inst, const std::vector<std::size_t>& word) {
  if (word.empty()) {
    return false;
  }
  return heis_product(inst.generators, word, inst.target.dim()) == inst.target;
}

}  // namespace

void validate(const MembershipInstance& inst) {
  if (inst.generators.empty()) {
    throw std::invalid_argument("membership: at least one generator is required");
  }
  const std::size_t n = inst.target.dim();
  for (std::size_t i = 0; i < inst.generators.size(); ++i) {
    if (inst.generators[i].dim() != n) {
      throw std::invalid_argument("membership: generator " + std::to_string(i + 1) +
                                  " has dimension " + std::to_string(inst.generators[i].dim()) +
                                  ", target has " + std::to_string(n));
    }
  }
}

ScaledInstance scale_to_integer(const MembershipInstance& inst) {
  Integer n = 1;
  auto absorb = [&](const HeisTriple& x) {
    for (const Rational& e : x.a()) n = lcm(n, e.get_den());
    for (const Rational& e : x.b()) n = lcm(n, e.get_den());
    n = lcm(n, square_root_cover(x.c().get_den()));
  };
  for (const HeisTriple& g : inst.generators) absorb(g);
  absorb(inst.target);
  ScaledInstance out{inst, n};
  if (n != 1) {
    for (HeisTriple& g : out.instance.generators) g = scale_triple(g, n);
    out.instance.target = scale_triple(inst.target, n);
  }
  return out;
}

Partition partition_generators(const std::vector<HeisTriple>& gens) {
  Partition p;
  if (gens.empty()) {
    return p;
  }
  const std::size_t dim = gens[0].psi().size();
  std::vector<RationalVec> v;
  for (const HeisTriple& g : gens) v.push_back(g.psi());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    LinSystem sys(dim);
    for (std::size_t j = 0; j < gens.size(); ++j) {
      sys.add(v[j], Relation::Geq, 0);
    }
    sys.add(v[i], Relation::Geq, 1);
    if (auto u = solvers::lp_feasible(sys)) {
      p.gplus.push_back(i);
      p.witness.push_back(std::move(*u));
    } else {
      p.g0.push_back(i);
    }
  }
  return p;
}

std::optional<OccurrenceBounds> occurrence_bounds(const std::vector<HeisTriple>& gens,
                                                  const Partition& p, const HeisTriple& target) {
  OccurrenceBounds b;
  b.total = 0;
  const RationalVec v = target.psi();
  for (std::size_t k = 0; k < p.gplus.size(); ++k) {
    const Rational num = dot(v, p.witness[k]);
    if (num < 0) {
      return std::nullopt;
    }
    const Rational den = dot(gens[p.gplus[k]].psi(), p.witness[k]);
    Integer beta = floor_of(num / den);
    b.total += beta;
    b.beta.push_back(std::move(beta));
  }
  return b;
}

bool commute_pairwise(const std::vector<HeisTriple>& gens, const std::vector<std::size_t>& idx) {
  for (std::size_t x = 0; x < idx.size(); ++x) {
    for (std::size_t y = x + 1; y < idx.size(); ++y) {
      if (bracket_corner(heis_log(gens[idx[x]]), heis_log(gens[idx[y]])) != 0) {
        return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Case I

namespace {

class CaseISolver {
 public:
  CaseISolver(const MembershipInstance& inst, const Partition& p, const OccurrenceBounds& b,
              CaseIStats& stats)
      : inst_(inst), p_(p), b_(b), stats_(stats), psi_dim_(inst.target.psi().size()) {
    target_psi_ = inst.target.psi();
    for (std::size_t k = 0; k < p.gplus.size(); ++k) {
      pair_target_.push_back(dot(target_psi_, p.witness[k]));
      RationalVec row;
      for (std::size_t k2 = 0; k2 < p.gplus.size(); ++k2) {
        row.push_back(dot(inst.generators[p.gplus[k2]].psi(), p.witness[k]));
      }
      pairing_.push_back(std::move(row));
    }
  }

  std::optional<std::vector<std::size_t>> run() {
    std::vector<Integer> counts(p_.gplus.size(), Integer(0));
    RationalVec partial(p_.gplus.size(), Rational(0));
    return multisets(0, counts, partial);
  }

 private:
  // Enumerates counts[k] in [0, beta_k] whose pairings with every witness
  // reproduce the target's pairing exactly.
  std::optional<std::vector<std::size_t>> multisets(std::size_t k, std::vector<Integer>& counts,
                                                    RationalVec& partial) {
    if (k == counts.size()) {
      for (std::size_t w = 0; w < partial.size(); ++w) {
        if (partial[w] != pair_target_[w]) return std::nullopt;
      }
      return try_multiset(counts);
    }
    for (Integer c = 0; c <= b_.beta[k]; ++c) {
      bool over = false;
      for (std::size_t w = 0; w < partial.size(); ++w) {
        if (partial[w] + c * pairing_[w][k] > pair_target_[w]) over = true;
      }
      if (over) break;
      counts[k] = c;
      for (std::size_t w = 0; w < partial.size(); ++w) partial[w] += c * pairing_[w][k];
      auto found = multisets(k + 1, counts, partial);
      for (std::size_t w = 0; w < partial.size(); ++w) partial[w] -= c * pairing_[w][k];
      if (found) return found;
    }
    counts[k] = 0;
    return std::nullopt;
  }

  std::optional<std::vector<std::size_t>> try_multiset(const std::vector<Integer>& counts) {
    ++stats_.multisets;
    std::vector<std::size_t> seq;
    for (std::size_t k = 0; k < counts.size(); ++k) {
      for (Integer c = 0; c < counts[k]; ++c) seq.push_back(p_.gplus[k]);
    }
    if (!psi_feasible(seq)) {
      return std::nullopt;
    }
    std::sort(seq.begin(), seq.end());
    do {
      ++stats_.arrangements;
      if (auto w = try_arrangement(seq)) return w;
    } while (std::next_permutation(seq.begin(), seq.end()));
    return std::nullopt;
  }

  // The psi-equations do not depend on the order of the G+ letters.
  bool psi_feasible(const std::vector<std::size_t>& seq) {
    const std::size_t l = p_.g0.size();
    IlpSystem sys(l);
    RationalVec rest = target_psi_;
    for (std::size_t g : seq) {
      const RationalVec v = inst_.generators[g].psi();
      for (std::size_t r = 0; r < psi_dim_; ++r) rest[r] -= v[r];
    }
    for (std::size_t r = 0; r < psi_dim_; ++r) {
      IntegerVec row(l);
      for (std::size_t i = 0; i < l; ++i) row[i] = as_integer(inst_.generators[p_.g0[i]].psi()[r]);
      sys.add(std::move(row), Relation::Eq, as_integer(rest[r]));
    }
    if (seq.empty()) {
      sys.add(IntegerVec(l, Integer(1)), Relation::Geq, 1);
    }
    if (l == 0) {
      for (const Rational& x : rest) {
        if (x != 0) return false;
      }
      return !seq.empty();
    }
    ++stats_.ilp_calls;
    return solvers::ilp_nonneg(sys).has_value();
  }

  std::optional<std::vector<std::size_t>> try_arrangement(const std::vector<std::size_t>& seq) {
    const std::size_t s = seq.size();
    const std::size_t l = p_.g0.size();
    const std::vector<HeisTriple>& g = inst_.generators;
    // Variables n[i][j], gap j in 0..s lies before the (j+1)-th G+ letter.
    const std::size_t nv = l * (s + 1);
    auto var = [&](std::size_t i, std::size_t j) { return i * (s + 1) + j; };
    IlpSystem sys(nv);
    RationalVec rest = target_psi_;
    for (std::size_t x : seq) {
      const RationalVec v = g[x].psi();
      for (std::size_t r = 0; r < psi_dim_; ++r) rest[r] -= v[r];
    }
    for (std::size_t r = 0; r < psi_dim_; ++r) {
      IntegerVec row(nv, Integer(0));
      for (std::size_t i = 0; i < l; ++i) {
        const Integer coeff = as_integer(g[p_.g0[i]].psi()[r]);
        for (std::size_t j = 0; j <= s; ++j) row[var(i, j)] = coeff;
      }
      sys.add(std::move(row), Relation::Eq, as_integer(rest[r]));
    }
    // Corner of the logarithm, doubled.
    Integer constant = 0;
    for (std::size_t x = 0; x < s; ++x) {
      constant += twice_log_corner(g[seq[x]]);
      for (std::size_t y = x + 1; y < s; ++y) constant += bracket(g[seq[x]], g[seq[y]]);
    }
    IntegerVec corner(nv, Integer(0));
    for (std::size_t i = 0; i < l; ++i) {
      const HeisTriple& d = g[p_.g0[i]];
      for (std::size_t j = 0; j <= s; ++j) {
        Integer c = twice_log_corner(d);
        for (std::size_t x = 0; x < s; ++x) {
          c += x >= j ? bracket(d, g[seq[x]]) : bracket(g[seq[x]], d);
        }
        corner[var(i, j)] = c;
      }
    }
    const Integer rhs = twice_log_corner(inst_.target) - constant;
    if (nv == 0) {
      bool ok = s > 0 && rhs == 0;
      for (const Rational& x : rest) ok = ok && x == 0;
      if (!ok) return std::nullopt;
      return seq;
    }
    sys.add(std::move(corner), Relation::Eq, rhs);
    if (s == 0) {
      sys.add(IntegerVec(nv, Integer(1)), Relation::Geq, 1);
    }
    ++stats_.ilp_calls;
    IlpOptions shortest;
    shortest.objective = IntegerVec(nv, Integer(1));
    auto n = solvers::ilp_nonneg(sys, shortest);
    if (!n) {
      return std::nullopt;
    }
    std::vector<std::size_t> word;
    for (std::size_t j = 0; j <= s; ++j) {
      for (std::size_t i = 0; i < l; ++i) {
        for (Integer c = 0; c < (*n)[var(i, j)]; ++c) word.push_back(p_.g0[i]);
      }
      if (j < s) word.push_back(seq[j]);
    }
    return word;
  }

  const MembershipInstance& inst_;
  const Partition& p_;
  const OccurrenceBounds& b_;
  CaseIStats& stats_;
  std::size_t psi_dim_;
  RationalVec target_psi_;
  RationalVec pair_target_;
  std::vector<RationalVec> pairing_;
};

}  // namespace

Verdict decide_case_commutative(const MembershipInstance& inst, const Partition& p,
                                const OccurrenceBounds& b, CaseIStats* stats) {
  CaseIStats local;
  CaseISolver solver(inst, p, b, stats ? *stats : local);
  auto word = solver.run();
  if (!word) {
    return Verdict::no();
  }
  if (!verify_word(inst, *word)) {
    throw std::logic_error("membership: reconstructed product does not match the target");
  }
  return Verdict::yes(std::move(*word));
}

// ---------------------------------------------------------------------------
// Case II

namespace {

// delta of a sequence of generator indices: sum over i < j of bracket corners.
Rational delta_of(const std::vector<HeisTriple>& gens, const std::vector<std::size_t>& seq) {
  Rational total = 0;
  std::vector<LieTriple> logs;
  for (std::size_t x : seq) logs.push_back(heis_log(gens[x]));
  for (std::size_t i = 0; i < logs.size(); ++i) {
    for (std::size_t j = i + 1; j < logs.size(); ++j) total += bracket_corner(logs[i], logs[j]);
  }
  return total;
}

std::vector<std::size_t> powered(const std::vector<std::size_t>& seq, std::size_t t) {
  std::vector<std::size_t> w;
  for (std::size_t x : seq) w.insert(w.end(), t, x);
  return w;
}

}  // namespace

CentralPair find_central_elements(const MembershipInstance& inst, const Partition& p) {
  const std::vector<HeisTriple>& g = inst.generators;
  const std::size_t dim = inst.target.dim();
  std::size_t a1 = 0, a2 = 0;
  bool found = false;
  for (std::size_t x = 0; x < p.g0.size() && !found; ++x) {
    for (std::size_t y = x + 1; y < p.g0.size() && !found; ++y) {
      if (bracket_corner(heis_log(g[p.g0[x]]), heis_log(g[p.g0[y]])) != 0) {
        a1 = p.g0[x];
        a2 = p.g0[y];
        found = true;
      }
    }
  }
  if (!found) {
    throw std::invalid_argument("find_central_elements: G0 is commutative");
  }

  // sum r_i psi(A_i) = 0 with r_a1, r_a2 >= 1, smallest total.
  const std::size_t k = g.size();
  const std::size_t psi_dim = inst.target.psi().size();
  IlpSystem sys(k);
  for (std::size_t r = 0; r < psi_dim; ++r) {
    IntegerVec row(k);
    for (std::size_t i = 0; i < k; ++i) row[i] = as_integer(g[i].psi()[r]);
    sys.add(std::move(row), Relation::Eq, 0);
  }
  IntegerVec e1(k, Integer(0)), e2(k, Integer(0));
  e1[a1] = 1;
  e2[a2] = 1;
  sys.add(e1, Relation::Geq, 1);
  sys.add(e2, Relation::Geq, 1);
  IlpOptions opt;
  opt.objective = IntegerVec(k, Integer(1));
  auto r = solvers::ilp_nonneg(sys, opt);
  if (!r) {
    throw std::logic_error("find_central_elements: no psi-cancelling multiplicities");
  }

  CentralPair cp;
  cp.r = *r;
  std::vector<std::size_t> base{a1, a2};
  for (std::size_t i = 0; i < k; ++i) {
    Integer copies = (*r)[i] - ((i == a1 || i == a2) ? 1 : 0);
    for (Integer c = 0; c < copies; ++c) base.push_back(i);
  }
  Rational delta = delta_of(g, base);
  if (delta == 0) {
    std::swap(base[0], base[1]);
    delta = delta_of(g, base);
  }
  if (delta < 0) {
    std::reverse(base.begin(), base.end());
    delta = -delta;
  }
  if (delta == 0) {
    throw std::logic_error("find_central_elements: both orders have delta 0");
  }
  std::vector<std::size_t> reversed(base.rbegin(), base.rend());
  for (std::size_t t = 1;; t *= 2) {
    std::vector<std::size_t> wp = powered(base, t), wm = powered(reversed, t);
    HeisTriple mp = heis_product(g, wp, dim), mm = heis_product(g, wm, dim);
    if (mp.c() > 0 && mm.c() < 0) {
      cp.plus = mp;
      cp.minus = mm;
      cp.p = as_integer(mp.c());
      cp.q = as_integer(mm.c());
      cp.plus_word = std::move(wp);
      cp.minus_word = std::move(wm);
      cp.t = t;
      break;
    }
    if (t > (std::size_t{1} << 40)) {
      throw std::logic_error("find_central_elements: no sign change found");
    }
  }
  cp.base = base;
  cp.delta = delta;
  cp.m = gcd(cp.p, -cp.q);
  cp.central.push_back({cp.p, cp.plus_word});
  cp.central.push_back({cp.q, cp.minus_word});
  // Further central elements refine the modulus: with both signs available the
  // realizable corners form the subgroup generated by all of them.
  for (std::size_t t = 1; t <= cp.t + 2 && cp.m > 1; ++t) {
    for (const auto* order : {&base, &reversed}) {
      std::vector<std::size_t> w = powered(*order, t);
      HeisTriple x = heis_product(g, w, dim);
      const Integer c = as_integer(x.c());
      if (c != 0 && c % cp.m != 0) {
        cp.m = gcd(cp.m, c);
        cp.central.push_back({c, std::move(w)});
      }
    }
  }
  return cp;
}

std::vector<long> residues_of(const HeisTriple& x, long m) {
  std::vector<long> out;
  auto red = [m](const Rational& v) {
    Integer r = as_integer(v) % m;
    if (r < 0) r += m;
    return r.get_si();
  };
  for (const Rational& e : x.a()) out.push_back(red(e));
  for (const Rational& e : x.b()) out.push_back(red(e));
  out.push_back(red(x.c()));
  return out;
}

std::optional<std::size_t> ResidueAutomaton::find(const std::vector<long>& residues) const {
  auto it = index.find(residues);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

ResidueAutomaton build_residue_automaton(const MembershipInstance& inst, long m) {
  if (m < 1) {
    throw std::invalid_argument("residue automaton: modulus must be positive");
  }
  ResidueAutomaton ra;
  ra.m = m;
  ra.d = inst.target.dim() - 2;
  const std::size_t d = ra.d;
  std::vector<std::vector<long>> letters;
  for (const HeisTriple& g : inst.generators) {
    letters.push_back(residues_of(g, m));
    IntegerVec w;
    for (const Rational& e : g.psi()) w.push_back(as_integer(e));
    ra.weights.push_back(std::move(w));
  }
  std::vector<long> zero(2 * d + 1, 0);
  ra.index.emplace(zero, 0);
  ra.states.push_back(zero);
  for (std::size_t s = 0; s < ra.states.size(); ++s) {
    std::vector<std::size_t> succ;
    for (const std::vector<long>& l : letters) {
      const std::vector<long> cur = ra.states[s];
      std::vector<long> nxt(2 * d + 1);
      long u = cur[2 * d] + l[2 * d];
      for (std::size_t i = 0; i < d; ++i) {
        nxt[i] = (cur[i] + l[i]) % m;
        nxt[d + i] = (cur[d + i] + l[d + i]) % m;
        u += (cur[i] * l[d + i]) % m;
      }
      nxt[2 * d] = u % m;
      auto [it, inserted] = ra.index.emplace(nxt, ra.states.size());
      if (inserted) ra.states.push_back(nxt);
      succ.push_back(it->second);
    }
    ra.next.push_back(std::move(succ));
  }
  return ra;
}

namespace {

// Fewest coins x >= 0 with sum x_i c_i = d, where the coins include both
// signs. Some order of any such multiset keeps every partial sum within
// [min(0, d) - M, max(0, d) + M] for M = max |c_i|, so a BFS over that
// window is exact. Far targets are first brought near with the largest coin.
std::optional<IntegerVec> central_combination(const std::vector<Integer>& coins, Integer d) {
  const std::size_t k = coins.size();
  IntegerVec x(k, Integer(0));
  const long limit = 4000000;
  long mag = 0;
  for (const Integer& c : coins) {
    if (abs(c) > limit) {
      IlpSystem sys(k);
      sys.add(IntegerVec(coins.begin(), coins.end()), Relation::Eq, d);
      return solvers::ilp_nonneg(sys);
    }
    mag = std::max(mag, Integer(abs(c)).get_si());
  }
  if (abs(d) > limit) {
    std::size_t big = k;
    for (std::size_t i = 0; i < k; ++i) {
      if (sgn(coins[i]) == sgn(d) && (big == k || abs(coins[i]) > abs(coins[big]))) big = i;
    }
    if (big == k) return std::nullopt;
    const Integer steps = (abs(d) - limit) / abs(coins[big]) + 1;
    x[big] += steps;
    d -= steps * coins[big];
  }
  const long target = d.get_si();
  const long lo = std::min(0L, target) - mag, hi = std::max(0L, target) + mag;
  const auto at = [lo](long v) { return static_cast<std::size_t>(v - lo); };
  std::vector<std::size_t> via(static_cast<std::size_t>(hi - lo + 1), k);
  std::deque<long> queue{0};
  while (!queue.empty() && via[at(target)] == k) {
    const long v = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < k; ++i) {
      const long w = v + coins[i].get_si();
      if (w < lo || w > hi || w == 0 || via[at(w)] != k) continue;
      via[at(w)] = i;
      queue.push_back(w);
    }
  }
  if (via[at(target)] == k) return std::nullopt;
  for (long v = target; v != 0; v -= coins[via[at(v)]].get_si()) {
    x[via[at(v)]] += 1;
  }
  return x;
}

}  // namespace

Verdict decide_case_noncommutative(const MembershipInstance& inst, const CentralPair& cp) {
  if (!cp.m.fits_slong_p()) {
    throw std::out_of_range("membership: modulus too large");
  }
  const long m = cp.m.get_si();
  ResidueAutomaton ra = build_residue_automaton(inst, m);
  auto final_state = ra.find(residues_of(inst.target, m));
  if (!final_state) {
    return Verdict::no();
  }
  solvers::FlowInstance fi;
  fi.num_nodes = ra.states.size();
  fi.source = 0;
  fi.target = *final_state;
  for (const Rational& e : inst.target.psi()) fi.goal.push_back(as_integer(e));
  for (std::size_t s = 0; s < ra.states.size(); ++s) {
    for (std::size_t l = 0; l < inst.generators.size(); ++l) {
      fi.edges.push_back({s, ra.next[s][l], l, ra.weights[l]});
    }
  }
  auto sol = solvers::flow_reach(fi);
  if (!sol) {
    return Verdict::no();
  }
  if (sol->walk.empty()) {
    return Verdict::yes();
  }
  std::vector<std::size_t> word;
  for (std::size_t e : sol->walk) word.push_back(fi.edges[e].label);
  const HeisTriple b = heis_product(inst.generators, word, inst.target.dim());
  // Correct the corner with central elements: c - c' = sum x_i z_i, x_i >= 0.
  const Integer diff = as_integer(inst.target.c() - b.c());
  if (diff != 0) {
    std::vector<Integer> coins;
    for (const CentralElement& z : cp.central) coins.push_back(z.corner);
    auto x = central_combination(coins, diff);
    if (!x) {
      throw std::logic_error("membership: central correction not representable");
    }
    Integer length = static_cast<unsigned long>(word.size());
    for (std::size_t i = 0; i < x->size(); ++i) {
      length += (*x)[i] * static_cast<unsigned long>(cp.central[i].word.size());
    }
    if (length > 1000000) {
      return Verdict::yes();
    }
    for (std::size_t i = 0; i < x->size(); ++i) {
      for (Integer c = 0; c < (*x)[i]; ++c) {
        word.insert(word.end(), cp.central[i].word.begin(), cp.central[i].word.end());
      }
    }
  }
  if (!verify_word(inst, word)) {
    throw std::logic_error("membership: reconstructed product does not match the target");
  }
  return Verdict::yes(std::move(word));
}

MembershipReport decide_membership_report(const MembershipInstance& input) {
  validate(input);
  MembershipReport rep;
  ScaledInstance scaled = scale_to_integer(input);
  rep.scale = scaled.factor;
  const MembershipInstance& inst = scaled.instance;
  rep.partition = partition_generators(inst.generators);
  rep.bounds = occurrence_bounds(inst.generators, *rep.partition, inst.target);
  if (!rep.bounds) {
    rep.case_name = "reject";
    rep.verdict = Verdict::no();
    return rep;
  }
  if (commute_pairwise(inst.generators, rep.partition->g0)) {
    rep.case_name = "commutative";
    rep.verdict = decide_case_commutative(inst, *rep.partition, *rep.bounds, &rep.case1);
  } else {
    rep.case_name = "noncommutative";
    rep.central = find_central_elements(inst, *rep.partition);
    rep.verdict = decide_case_noncommutative(inst, *rep.central);
  }
  if (rep.verdict.witness && !verify_word(input, *rep.verdict.witness)) {
    throw std::logic_error("membership: witness fails on the original instance");
  }
  return rep;
}

Verdict decide_membership(const MembershipInstance& inst) {
  return decide_membership_report(inst).verdict;
}

}  // namespace semireach::heis
