#include "semireach/ilp.hpp"

#include <stdexcept>

namespace semireach::solvers {

void IlpSystem::add(IntegerVec coeffs, Relation rel, Integer rhs) {
  if (coeffs.size() != num_vars) {
    throw std::invalid_argument("IlpSystem::add: row has wrong number of coefficients");
  }
  rows.push_back(IlpRow{std::move(coeffs), rel, std::move(rhs)});
}

bool IlpSystem::satisfied_by(const IntegerVec& x) const {
  if (x.size() != num_vars) {
    return false;
  }
  for (std::size_t j = 0; j < num_vars; ++j) {
    if (x[j] < 0 || (upper[j] && x[j] > *upper[j])) {
      return false;
    }
  }
  for (const IlpRow& r : rows) {
    Integer lhs = 0;
    for (std::size_t j = 0; j < num_vars; ++j) {
      lhs += r.coeffs[j] * x[j];
    }
    if ((r.rel == Relation::Eq && lhs != r.rhs) || (r.rel == Relation::Geq && lhs < r.rhs) ||
        (r.rel == Relation::Leq && lhs > r.rhs)) {
      return false;
    }
  }
  return true;
}

bool integer_lattice_feasible(const IlpSystem& sys) {
  std::vector<IntegerVec> a;
  IntegerVec b;
  for (const IlpRow& r : sys.rows) {
    if (r.rel == Relation::Eq) {
      a.push_back(r.coeffs);
      b.push_back(r.rhs);
    }
  }
  const std::size_t n = sys.num_vars;
  // Column echelon form by unimodular column operations.
  std::vector<std::ptrdiff_t> pivot_of_row(a.size(), -1);
  std::size_t rank = 0;
  for (std::size_t i = 0; i < a.size() && rank < n; ++i) {
    for (std::size_t j = rank + 1; j < n; ++j) {
      if (a[i][j] == 0) {
        continue;
      }
      Integer s, t;
      const Integer x = a[i][rank], y = a[i][j];
      const Integer g = ext_gcd(x, y, s, t);
      const Integer xg = x / g, yg = y / g;
      for (IntegerVec& row : a) {
        const Integer cr = row[rank], cj = row[j];
        row[rank] = s * cr + t * cj;
        row[j] = -yg * cr + xg * cj;
      }
    }
    if (a[i][rank] != 0) {
      pivot_of_row[i] = static_cast<std::ptrdiff_t>(rank);
      ++rank;
    }
  }
  IntegerVec y(n, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    Integer residual = b[i];
    const std::size_t known = pivot_of_row[i] >= 0 ? static_cast<std::size_t>(pivot_of_row[i]) : rank;
    for (std::size_t c = 0; c < known; ++c) {
      residual -= a[i][c] * y[c];
    }
    if (pivot_of_row[i] < 0) {
      // Later rows may have been processed with more pivots; all entries
      // beyond the current rank are zero for this row.
      for (std::size_t c = known; c < n; ++c) {
        if (a[i][c] != 0) {
          residual -= a[i][c] * y[c];
        }
      }
      if (residual != 0) {
        return false;
      }
      continue;
    }
    const Integer& p = a[i][known];
    if (residual % p != 0) {
      return false;
    }
    y[known] = residual / p;
  }
  return true;
}

namespace {

Integer default_box(const IlpSystem& sys) {
  Integer amax = 1;
  std::size_t extra = 0;
  for (const IlpRow& r : sys.rows) {
    for (const Integer& c : r.coeffs) {
      if (abs(c) > amax) amax = abs(c);
    }
    if (abs(r.rhs) > amax) amax = abs(r.rhs);
    if (r.rel != Relation::Eq) ++extra;
  }
  const std::size_t m = std::max<std::size_t>(sys.rows.size(), 1);
  Integer base = Integer(static_cast<unsigned long>(m)) * amax;
  Integer p;
  mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), 2 * m + 1);
  return Integer(static_cast<unsigned long>(sys.num_vars + extra)) * p;
}

struct Node {
  IntegerVec lower, upper;
};

}  // namespace

std::optional<IntegerVec> ilp_nonneg(const IlpSystem& sys, const IlpOptions& opt) {
  const std::size_t n = sys.num_vars;
  if (opt.objective && opt.objective->size() != n) {
    throw std::invalid_argument("ilp_nonneg: objective has wrong length");
  }
  if (!integer_lattice_feasible(sys)) {
    return std::nullopt;
  }
  const Integer box = default_box(sys);
  Node root{IntegerVec(n, Integer(0)), IntegerVec(n)};
  for (std::size_t j = 0; j < n; ++j) {
    root.upper[j] = sys.upper[j] ? *sys.upper[j] : box;
    if (root.upper[j] < 0) {
      return std::nullopt;
    }
  }
  RationalVec objective(n);
  if (opt.objective) {
    for (std::size_t j = 0; j < n; ++j) {
      objective[j] = (*opt.objective)[j];
    }
  }

  std::optional<IntegerVec> best;
  Integer best_value;
  std::vector<Node> stack{root};
  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();
    LinSystem lp(n);
    for (const IlpRow& r : sys.rows) {
      RationalVec row(n);
      for (std::size_t j = 0; j < n; ++j) {
        row[j] = r.coeffs[j];
      }
      lp.add(std::move(row), r.rel, Rational(r.rhs));
    }
    for (std::size_t j = 0; j < n; ++j) {
      RationalVec e(n);
      e[j] = 1;
      if (node.lower[j] > 0) {
        lp.add(e, Relation::Geq, Rational(node.lower[j]));
      }
      lp.add(std::move(e), Relation::Leq, Rational(node.upper[j]));
    }
    LpResult res = lp_minimize_nonneg(lp, objective);
    if (res.status != LpStatus::Optimal) {
      continue;  // boxed, so never unbounded
    }
    if (best && ceil_of(res.value) >= best_value) {
      continue;
    }
    std::size_t frac = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (!is_integer(res.x[j])) {
        frac = j;
        break;
      }
    }
    if (frac == n) {
      IntegerVec x(n);
      for (std::size_t j = 0; j < n; ++j) {
        x[j] = res.x[j].get_num();
      }
      if (!opt.objective) {
        return x;
      }
      best = std::move(x);
      best_value = res.value.get_num();
      continue;
    }
    Node down = node, up = std::move(node);
    down.upper[frac] = floor_of(res.x[frac]);
    up.lower[frac] = ceil_of(res.x[frac]);
    stack.push_back(std::move(up));
    stack.push_back(std::move(down));
  }
  return best;
}

}  // namespace semireach::solvers
