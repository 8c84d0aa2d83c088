#include "semireach/lp.hpp"

#include <stdexcept>

namespace semireach::solvers {

void LinSystem::add(RationalVec coeffs, Relation rel, Rational rhs) {
  if (coeffs.size() != num_vars) {
    throw std::invalid_argument("LinSystem::add: row has wrong number of coefficients");
  }
  rows.push_back(LinRow{std::move(coeffs), rel, std::move(rhs)});
}

bool LinSystem::satisfied_by(const RationalVec& x) const {
  if (x.size() != num_vars) {
    return false;
  }
  for (const LinRow& r : rows) {
    const Rational lhs = dot(r.coeffs, x);
    switch (r.rel) {
      case Relation::Geq:
        if (lhs < r.rhs) return false;
        break;
      case Relation::Leq:
        if (lhs > r.rhs) return false;
        break;
      case Relation::Eq:
        if (lhs != r.rhs) return false;
        break;
    }
  }
  return true;
}

namespace {

// Tableau for: minimize c^T x subject to A x = b, x >= 0, b >= 0.
class Simplex {
 public:
  Simplex(std::vector<RationalVec> a, RationalVec b) : m_(a.size()), n_(a.empty() ? 0 : a[0].size()) {
    // Columns: original n_, then m_ artificials; last column is the rhs.
    t_.assign(m_ + 1, RationalVec(n_ + m_ + 1));
    basis_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        t_[i][j] = a[i][j];
      }
      t_[i][n_ + i] = 1;
      t_[i][n_ + m_] = b[i];
      basis_[i] = n_ + i;
    }
    allowed_.assign(n_ + m_, true);
  }

  // Phase 1; returns false if infeasible.
  bool phase1() {
    RationalVec cost(n_ + m_);
    for (std::size_t i = 0; i < m_; ++i) {
      cost[n_ + i] = 1;
    }
    set_objective(cost);
    run();
    if (t_[m_][n_ + m_] != 0) {  // objective row rhs holds -value
      return false;
    }
    // Drive remaining artificials out of the basis.
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) {
        continue;
      }
      for (std::size_t j = 0; j < n_; ++j) {
        if (t_[i][j] != 0) {
          pivot(i, j);
          break;
        }
      }
    }
    for (std::size_t j = n_; j < n_ + m_; ++j) {
      allowed_[j] = false;
    }
    return true;
  }

  // Phase 2; returns false if unbounded.
  bool phase2(const RationalVec& c) {
    RationalVec cost(n_ + m_);
    for (std::size_t j = 0; j < n_; ++j) {
      cost[j] = c[j];
    }
    set_objective(cost);
    return run();
  }

  RationalVec solution() const {
    RationalVec x(n_);
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) {
        x[basis_[i]] = t_[i][n_ + m_];
      }
    }
    return x;
  }

 private:
  void set_objective(const RationalVec& cost) {
    RationalVec& z = t_[m_];
    for (std::size_t j = 0; j <= n_ + m_; ++j) {
      z[j] = j < n_ + m_ ? cost[j] : Rational(0);
    }
    // Reduced costs: subtract basic cost rows.
    for (std::size_t i = 0; i < m_; ++i) {
      const Rational cb = cost[basis_[i]];
      if (cb == 0) {
        continue;
      }
      for (std::size_t j = 0; j <= n_ + m_; ++j) {
        if (t_[i][j] != 0) {
          z[j] -= cb * t_[i][j];
        }
      }
    }
  }

  // Returns false if unbounded.
  bool run() {
    for (;;) {
      std::size_t enter = n_ + m_;
      for (std::size_t j = 0; j < n_ + m_; ++j) {
        if (allowed_[j] && t_[m_][j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter == n_ + m_) {
        return true;
      }
      std::size_t leave = m_;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (t_[i][enter] > 0) {
          Rational ratio = t_[i][n_ + m_] / t_[i][enter];
          if (leave == m_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
            best = ratio;
            leave = i;
          }
        }
      }
      if (leave == m_) {
        return false;
      }
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    const Rational p = t_[r][c];
    for (Rational& v : t_[r]) {
      if (v != 0) {
        v /= p;
      }
    }
    for (std::size_t i = 0; i <= m_; ++i) {
      if (i == r || t_[i][c] == 0) {
        continue;
      }
      const Rational f = t_[i][c];
      for (std::size_t j = 0; j <= n_ + m_; ++j) {
        if (t_[r][j] != 0) {
          t_[i][j] -= f * t_[r][j];
        }
      }
    }
    basis_[r] = c;
  }

  std::size_t m_, n_;
  std::vector<RationalVec> t_;
  std::vector<std::size_t> basis_;
  std::vector<bool> allowed_;
};

}  // namespace

LpResult lp_minimize_nonneg(const LinSystem& sys, const RationalVec& objective) {
  if (objective.size() != sys.num_vars) {
    throw std::invalid_argument("lp_minimize_nonneg: objective has wrong length");
  }
  const std::size_t n = sys.num_vars;
  std::size_t slacks = 0;
  for (const LinRow& r : sys.rows) {
    if (r.rel != Relation::Eq) {
      ++slacks;
    }
  }
  std::vector<RationalVec> a;
  RationalVec b;
  std::size_t slack = n;
  for (const LinRow& r : sys.rows) {
    RationalVec row(n + slacks);
    for (std::size_t j = 0; j < n; ++j) {
      row[j] = r.coeffs[j];
    }
    if (r.rel == Relation::Geq) {
      row[slack++] = -1;
    } else if (r.rel == Relation::Leq) {
      row[slack++] = 1;
    }
    Rational rhs = r.rhs;
    if (rhs < 0) {
      for (Rational& v : row) {
        v = -v;
      }
      rhs = -rhs;
    }
    a.push_back(std::move(row));
    b.push_back(std::move(rhs));
  }

  LpResult out;
  if (a.empty()) {
    // Only x >= 0: optimum at 0 unless some objective coefficient is negative.
    for (const Rational& c : objective) {
      if (c < 0) {
        out.status = LpStatus::Unbounded;
        return out;
      }
    }
    out.status = LpStatus::Optimal;
    out.x.assign(n, Rational(0));
    out.value = 0;
    return out;
  }
  Simplex s(std::move(a), std::move(b));
  if (!s.phase1()) {
    out.status = LpStatus::Infeasible;
    return out;
  }
  RationalVec c(n + slacks);
  for (std::size_t j = 0; j < n; ++j) {
    c[j] = objective[j];
  }
  if (!s.phase2(c)) {
    out.status = LpStatus::Unbounded;
    return out;
  }
  RationalVec full = s.solution();
  out.x.assign(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(n));
  out.value = dot(objective, out.x);
  out.status = LpStatus::Optimal;
  return out;
}

std::optional<RationalVec> lp_feasible(const LinSystem& sys) {
  // Free variables x = p - q with p, q >= 0.
  const std::size_t n = sys.num_vars;
  LinSystem split(2 * n);
  for (const LinRow& r : sys.rows) {
    RationalVec row(2 * n);
    for (std::size_t j = 0; j < n; ++j) {
      row[j] = r.coeffs[j];
      row[n + j] = -r.coeffs[j];
    }
    split.add(std::move(row), r.rel, r.rhs);
  }
  LpResult res = lp_minimize_nonneg(split, RationalVec(2 * n));
  if (res.status != LpStatus::Optimal) {
    return std::nullopt;
  }
  RationalVec x(n);
  for (std::size_t j = 0; j < n; ++j) {
    x[j] = res.x[j] - res.x[n + j];
  }
  return x;
}

}  // namespace semireach::solvers
