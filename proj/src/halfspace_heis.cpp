#include "semireach/halfspace_heis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace semireach::heis {

// ---------------------------------------------------------------------------
// Pure sequences

namespace {

std::vector<LieTriple> logs_of(const std::vector<HeisTriple>& seq) {
  std::vector<LieTriple> out;
  out.reserve(seq.size());
  for (const HeisTriple& x : seq) out.push_back(heis_log(x));
  return out;
}

struct Block {
  std::size_t begin, end;  // [begin, end)
};

// First element (by position) that has two blocks, with its first two blocks.
std::optional<std::pair<Block, Block>> two_blocks(const std::vector<HeisTriple>& seq,
                                                  const std::vector<std::size_t>& order) {
  const std::size_t m = order.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (i > 0 && seq[order[i - 1]] == seq[order[i]]) continue;  // not a block start
    const HeisTriple& a = seq[order[i]];
    std::size_t j = i;
    while (j < m && seq[order[j]] == a) ++j;
    for (std::size_t x = j; x < m; ++x) {
      if (seq[order[x]] == a) {
        std::size_t y = x;
        while (y < m && seq[order[y]] == a) ++y;
        return std::make_pair(Block{i, j}, Block{x, y});
      }
    }
  }
  return std::nullopt;
}

}  // namespace

Rational delta_of_sequence(const std::vector<HeisTriple>& seq) {
  const std::vector<LieTriple> logs = logs_of(seq);
  Rational total = 0;
  // sum_{i<j} [C_i, C_j] = sum_j [prefix_{j-1}, C_j] by bilinearity.
  if (logs.empty()) return total;
  LieTriple prefix(logs[0].dim());
  for (const LieTriple& c : logs) {
    total += bracket_corner(prefix, c);
    prefix = prefix + c;
  }
  return total;
}

bool is_pure(const std::vector<HeisTriple>& seq) {
  std::vector<std::size_t> order(seq.size());
  std::iota(order.begin(), order.end(), 0);
  return !two_blocks(seq, order).has_value();
}

std::vector<std::size_t> purify_order(const std::vector<HeisTriple>& seq) {
  if (seq.empty()) {
    throw std::invalid_argument("purify_sequence: empty sequence");
  }
  const std::vector<LieTriple> logs = logs_of(seq);
  std::vector<std::size_t> order(seq.size());
  std::iota(order.begin(), order.end(), 0);
  while (auto blocks = two_blocks(seq, order)) {
    const auto [first, second] = *blocks;
    const LieTriple& c = logs[order[first.begin]];
    Rational s = 0;
    for (std::size_t i = first.end; i < second.begin; ++i) s += bracket_corner(logs[order[i]], c);
    std::vector<std::size_t> next;
    next.reserve(order.size());
    auto append = [&](std::size_t from, std::size_t to) {
      next.insert(next.end(), order.begin() + static_cast<std::ptrdiff_t>(from),
                  order.begin() + static_cast<std::ptrdiff_t>(to));
    };
    append(0, first.begin);
    if (s <= 0) {
      // Pull the second block back next to the first.
      append(first.begin, first.end);
      append(second.begin, second.end);
      append(first.end, second.begin);
    } else {
      // Push the first block forward onto the second.
      append(first.end, second.begin);
      append(first.begin, first.end);
      append(second.begin, second.end);
    }
    append(second.end, order.size());
    order = std::move(next);
  }
  return order;
}

std::vector<HeisTriple> purify_sequence(const std::vector<HeisTriple>& seq) {
  std::vector<HeisTriple> out;
  for (std::size_t i : purify_order(seq)) out.push_back(seq[i]);
  return out;
}

// ---------------------------------------------------------------------------
// Quadratic polynomials

QuadPoly::QuadPoly(std::size_t vars)
    : k(vars), h(vars, RationalVec(vars)), g(vars), constant(0) {}

Rational QuadPoly::eval(const IntegerVec& x) const {
  Rational r = constant;
  for (std::size_t i = 0; i < k; ++i) {
    if (x[i] == 0) continue;
    r += g[i] * x[i];
    for (std::size_t j = 0; j < k; ++j) {
      if (h[i][j] != 0 && x[j] != 0) r += h[i][j] * x[i] * x[j];
    }
  }
  return r;
}

QuadPoly quadratic_for_permutation(const std::vector<HeisTriple>& gens,
                                   const std::vector<std::size_t>& sigma, const RationalVec& u,
                                   const RationalVec& v) {
  if (gens.empty()) {
    throw std::invalid_argument("quadratic_for_permutation: no generators");
  }
  const std::size_t n = gens[0].dim();
  if (u.size() != n || v.size() != n) {
    throw std::invalid_argument("quadratic_for_permutation: u and v must have length n");
  }
  const std::size_t k = sigma.size();
  const std::size_t d = n - 2;
  const Rational& u1 = u[0];
  const Rational& vn = v[n - 1];
  RationalVec umid(u.begin() + 1, u.begin() + 1 + static_cast<std::ptrdiff_t>(d));
  RationalVec vmid(v.begin() + 1, v.begin() + 1 + static_cast<std::ptrdiff_t>(d));
  const Rational uv = u1 * vn;

  QuadPoly q(k);
  // u^T M v = u1 v1 + u1 a.vmid + u1 c vn + umid.vmid + umid.b vn + un vn.
  q.constant = u1 * v[0] + dot(umid, vmid) + u[n - 1] * vn;
  for (std::size_t i = 0; i < k; ++i) {
    const HeisTriple& a = gens[sigma[i]];
    const Rational log_corner = a.c() - dot(a.a(), a.b()) / 2;
    q.g[i] = u1 * dot(a.a(), vmid) + uv * log_corner + vn * dot(umid, a.b());
    // Corner of the product: sum n_i log c_i + 1/2 sum_{i<j} n_i n_j [C_i, C_j]
    // + 1/2 (sum n_i a_i)^T (sum n_j b_j); the mixed terms combine to a_i^T b_j.
    q.h[i][i] = uv * dot(a.a(), a.b()) / 2;
    for (std::size_t j = i + 1; j < k; ++j) {
      const HeisTriple& b = gens[sigma[j]];
      const Rational mixed = uv * dot(a.a(), b.b()) / 2;
      q.h[i][j] = mixed;
      q.h[j][i] = mixed;
    }
  }
  return q;
}

namespace {

// Integer version D*Q of Q for fast repeated evaluation.
struct IntQuad {
  std::size_t k;
  std::vector<IntegerVec> h2;  // off-diagonal pairs counted once, doubled
  IntegerVec g;
  Integer constant;
  Integer scale;

  explicit IntQuad(const QuadPoly& q) : k(q.k), h2(q.k, IntegerVec(q.k)), g(q.k) {
    scale = q.constant.get_den();
    for (std::size_t i = 0; i < k; ++i) {
      scale = lcm(scale, q.g[i].get_den());
      for (std::size_t j = 0; j < k; ++j) scale = lcm(scale, q.h[i][j].get_den());
    }
    constant = Integer(q.constant * scale);
    for (std::size_t i = 0; i < k; ++i) {
      g[i] = Integer(q.g[i] * scale);
      h2[i][i] = Integer(q.h[i][i] * scale);
      for (std::size_t j = i + 1; j < k; ++j) h2[i][j] = Integer(q.h[i][j] * scale * 2);
    }
  }

  Integer eval(const std::vector<long>& x) const {
    Integer r = constant;
    for (std::size_t i = 0; i < k; ++i) {
      if (x[i] == 0) continue;
      Integer row = g[i] + h2[i][i] * x[i];
      for (std::size_t j = i + 1; j < k; ++j) {
        if (x[j] != 0) row += h2[i][j] * x[j];
      }
      r += row * x[i];
    }
    return r;
  }
};

IntegerVec to_integer_vec(const std::vector<long>& x) {
  IntegerVec out;
  for (long e : x) out.push_back(Integer(e));
  return out;
}

// Points of [0, r]^k with max-norm exactly r, depth-first.
template <class F>
bool shell(std::vector<long>& x, std::size_t i, long r, bool hit, F& f) {
  const std::size_t k = x.size();
  if (i == k) {
    return hit && f(x);
  }
  if (i + 1 == k && !hit) {
    x[i] = r;
    return f(x);
  }
  for (long c = 0; c <= r; ++c) {
    x[i] = c;
    if (shell(x, i + 1, r, hit || c == r, f)) return true;
  }
  return false;
}

// Exhaustive search over a box; returns the first point reaching the target.
template <class F>
bool box(std::vector<long>& x, std::size_t i, const std::vector<long>& hi, F& f) {
  if (i == x.size()) return f(x);
  for (long c = 0; c <= hi[i]; ++c) {
    x[i] = c;
    if (box(x, i + 1, hi, f)) return true;
  }
  return false;
}

// Determinant by fraction-free elimination on a rational matrix.
Rational det(std::vector<RationalVec> a) {
  const std::size_t n = a.size();
  Rational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      d = -d;
    }
    d *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return d;
}

// Solves a x = b for square nonsingular a.
RationalVec solve(std::vector<RationalVec> a, RationalVec b) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (a[p][c] == 0) ++p;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
      b[r] -= f * b[c];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

// H negative definite: leading principal minors alternate in sign, starting negative.
bool negative_definite(const QuadPoly& q) {
  for (std::size_t s = 1; s <= q.k; ++s) {
    std::vector<RationalVec> sub(s, RationalVec(s));
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < s; ++j) sub[i][j] = q.h[i][j];
    const Rational m = det(sub);
    if ((s % 2 == 1 && m >= 0) || (s % 2 == 0 && m <= 0)) return false;
  }
  return true;
}

// Exact maximum of a strictly concave Q over the nonnegative orthant: the
// maximizer is the stationary point of Q restricted to its support face.
Rational concave_max(const QuadPoly& q) {
  Rational best = q.constant;
  const std::size_t k = q.k;
  for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
    std::vector<std::size_t> f;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1U) f.push_back(i);
    std::vector<RationalVec> a(f.size(), RationalVec(f.size()));
    RationalVec b(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
      for (std::size_t j = 0; j < f.size(); ++j) a[i][j] = 2 * q.h[f[i]][f[j]];
      b[i] = -q.g[f[i]];
    }
    RationalVec x = solve(a, b);
    bool feasible = true;
    for (const Rational& e : x) feasible = feasible && e >= 0;
    if (!feasible) continue;
    Rational val = q.constant;
    for (std::size_t i = 0; i < f.size(); ++i) {
      val += q.g[f[i]] * x[i];
      for (std::size_t j = 0; j < f.size(); ++j) val += q.h[f[i]][f[j]] * x[i] * x[j];
    }
    if (val > best) best = val;
  }
  return best;
}

}  // namespace

QuadOutcome decide_quadratic_geq(const QuadPoly& q, const Rational& lambda, const QuadOptions& opt) {
  QuadOutcome out;
  const std::size_t k = q.k;
  if (k == 0) {
    out.kind = VerdictKind::No;  // no nonzero exponent vector
    out.reason = "finite";
    return out;
  }
  const IntQuad iq(q);
  const Integer goal = Integer(ceil_of(lambda * iq.scale));
  auto reaches = [&](const std::vector<long>& x) { return iq.eval(x) >= goal; };

  // Off-diagonal coefficients <= 0 and every coordinate bounded: the search
  // space is a finite box.
  bool separable = true;
  for (std::size_t i = 0; i < k && separable; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i != j && q.h[i][j] > 0) separable = false;
  if (separable) {
    bool bounded = true;
    // Upper bound F_i of f_i(x) = h_ii x^2 + g_i x over integers x >= 0.
    std::vector<Rational> fmax(k);
    for (std::size_t i = 0; i < k; ++i) {
      const Rational& a = q.h[i][i];
      const Rational& b = q.g[i];
      if (a > 0 || (a == 0 && b > 0)) {
        bounded = false;
        break;
      }
      if (a == 0) {
        fmax[i] = 0;
      } else {
        const Rational top = -b / (2 * a);
        Rational m = 0;
        for (Integer t : {floor_of(top), ceil_of(top)}) {
          if (t < 0) continue;
          const Rational val = a * t * t + b * t;
          if (val > m) m = val;
        }
        fmax[i] = m;
      }
    }
    if (bounded) {
      const Rational total = std::accumulate(fmax.begin(), fmax.end(), Rational(0));
      std::vector<long> hi(k);
      double volume = 1;
      bool small = true;
      for (std::size_t i = 0; i < k && small; ++i) {
        const Rational& a = q.h[i][i];
        const Rational& b = q.g[i];
        if (a == 0 && b == 0) {
          hi[i] = 1;  // Q does not grow with x_i
        } else {
          // Need f_i(x_i) >= lambda - c - (total - F_i).
          const Rational need = lambda - q.constant - (total - fmax[i]);
          long x = 0;
          // f_i is concave or decreasing: find the last x with f_i(x) >= need,
          // beyond the vertex.
          const Rational top = a == 0 ? Rational(0) : -b / (2 * a);
          Integer start = top > 0 ? ceil_of(top) : Integer(0);
          if (!start.fits_slong_p() || start > 10000000) {
            small = false;
            break;
          }
          x = start.get_si();
          while (a * x * x + b * x >= need) {
            ++x;
            if (x > 10000000) {
              small = false;
              break;
            }
          }
          hi[i] = x;
        }
        volume *= static_cast<double>(hi[i] + 1);
        if (volume > static_cast<double>(opt.exhaustive_limit)) small = false;
      }
      if (small) {
        std::vector<long> x(k, 0);
        auto f = [&](const std::vector<long>& p) {
          bool nonzero = std::any_of(p.begin(), p.end(), [](long e) { return e != 0; });
          return nonzero && reaches(p);
        };
        if (box(x, 0, hi, f)) {
          out.kind = VerdictKind::Yes;
          out.point = to_integer_vec(x);
        } else {
          out.kind = VerdictKind::No;
        }
        out.reason = "finite";
        return out;
      }
    }
  }

  // Box enumeration by max-norm shells.
  long bound = static_cast<long>(opt.bound);
  const double budget = 4.0e6;
  while (bound > 1 && std::pow(static_cast<double>(bound + 1), static_cast<double>(k)) > budget) {
    --bound;
  }
  {
    std::vector<long> x(k, 0);
    for (long r = 1; r <= bound; ++r) {
      if (shell(x, 0, r, false, reaches)) {
        out.kind = VerdictKind::Yes;
        out.point = to_integer_vec(x);
        out.reason = "box";
        return out;
      }
    }
  }

  // Unbounded rays t*d with d in {0,1,2}^k.
  {
    std::vector<long> d(k, 0);
    std::vector<long> hi(k, 2);
    std::optional<std::vector<long>> ray;
    auto grows = [&](const std::vector<long>& dir) {
      if (std::all_of(dir.begin(), dir.end(), [](long e) { return e == 0; })) return false;
      Rational quad = 0, lin = 0;
      for (std::size_t i = 0; i < k; ++i) {
        lin += q.g[i] * dir[i];
        for (std::size_t j = 0; j < k; ++j) quad += q.h[i][j] * dir[i] * dir[j];
      }
      if (quad > 0 || (quad == 0 && lin > 0)) {
        ray = dir;
        return true;
      }
      return false;
    };
    if (box(d, 0, hi, grows)) {
      for (long t = 1; t > 0 && t < (1L << 40); t *= 2) {
        std::vector<long> x(k);
        for (std::size_t i = 0; i < k; ++i) x[i] = (*ray)[i] * t;
        if (reaches(x)) {
          out.kind = VerdictKind::Yes;
          out.point = to_integer_vec(x);
          out.reason = "ray";
          return out;
        }
      }
    }
  }

  // Strictly concave: the real maximum over the orthant bounds every point.
  if (negative_definite(q) && concave_max(q) < lambda) {
    out.kind = VerdictKind::No;
    out.reason = "concave";
    return out;
  }
  out.kind = VerdictKind::Unknown;
  out.reason = "open";
  return out;
}

HalfspaceReport decide_halfspace_heis_report(const std::vector<HeisTriple>& gens,
                                             const RationalVec& u, const RationalVec& v,
                                             const Rational& lambda, const QuadOptions& opt) {
  HalfspaceReport rep;
  rep.verdict = Verdict::no();
  if (gens.empty()) {
    return rep;
  }
  const std::size_t n = gens[0].dim();
  for (const HeisTriple& g : gens) {
    if (g.dim() != n) {
      throw std::invalid_argument("half-space: generators have different dimensions");
    }
  }
  if (u.size() != n || v.size() != n) {
    throw std::invalid_argument("half-space: u and v must have length " + std::to_string(n));
  }
  std::vector<std::size_t> sigma(gens.size());
  std::iota(sigma.begin(), sigma.end(), 0);
  bool unknown = false;
  do {
    ++rep.permutations;
    const QuadPoly q = quadratic_for_permutation(gens, sigma, u, v);
    const QuadOutcome res = decide_quadratic_geq(q, lambda, opt);
    if (res.kind == VerdictKind::Yes) {
      rep.sigma = sigma;
      rep.exponents = *res.point;
      Integer length = 0;
      for (const Integer& e : rep.exponents) length += e;
      if (length > 1000000) {
        rep.verdict = Verdict::yes();
        return rep;
      }
      std::vector<std::size_t> word;
      for (std::size_t i = 0; i < sigma.size(); ++i) {
        for (Integer c = 0; c < rep.exponents[i]; ++c) word.push_back(sigma[i]);
      }
      const HeisTriple prod = heis_product(gens, word, n);
      if (word.empty() || heis_bilinear(u, prod, v) < lambda) {
        throw std::logic_error("half-space: witness does not satisfy the inequality");
      }
      rep.verdict = Verdict::yes(std::move(word));
      return rep;
    }
    if (res.kind == VerdictKind::Unknown) {
      unknown = true;
      ++rep.unknown_permutations;
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  if (unknown) {
    rep.verdict = Verdict::unknown(opt.bound);
  }
  return rep;
}

Verdict decide_halfspace_heis(const std::vector<HeisTriple>& gens, const RationalVec& u,
                              const RationalVec& v, const Rational& lambda, const QuadOptions& opt) {
  return decide_halfspace_heis_report(gens, u, v, lambda, opt).verdict;
}

}  // namespace semireach::heis
