#include "semireach/heisenberg.hpp"

#include <sstream>
#include <stdexcept>

namespace semireach {

namespace {

void check_dim(std::size_t dim) {
  if (dim < 3) {
    throw std::invalid_argument("Heisenberg dimension must be at least 3, got " +
                                std::to_string(dim));
  }
}

void check_same_dim(std::size_t x, std::size_t y, const char* op) {
  if (x != y) {
    throw std::invalid_argument(std::string(op) + ": dimension mismatch (" +
                                std::to_string(x) + " vs " + std::to_string(y) + ")");
  }
}

RationalVec add(const RationalVec& x, const RationalVec& y) {
  RationalVec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    out[i] = x[i] + y[i];
  }
  return out;
}

RationalVec neg(const RationalVec& x) {
  RationalVec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    out[i] = -x[i];
  }
  return out;
}

bool all_zero(const RationalVec& x) {
  for (const auto& e : x) {
    if (e != 0) {
      return false;
    }
  }
  return true;
}

void write_vec(std::ostream& os, const RationalVec& x) {
  os << '[';
  for (std::size_t i = 0; i < x.size(); ++i) {
    os << (i ? "," : "") << to_string(x[i]);
  }
  os << ']';
}

}  // namespace

HeisTriple::HeisTriple(std::size_t dim) : c_(0) {
  check_dim(dim);
  a_.assign(dim - 2, Rational(0));
  b_.assign(dim - 2, Rational(0));
}

HeisTriple::HeisTriple(RationalVec a, RationalVec b, Rational c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  if (a_.size() != b_.size()) {
    throw std::invalid_argument("HeisTriple: a and b must have equal length");
  }
  check_dim(a_.size() + 2);
}

RationalVec HeisTriple::psi() const {
  RationalVec out = a_;
  out.insert(out.end(), b_.begin(), b_.end());
  return out;
}

bool HeisTriple::is_identity() const { return c_ == 0 && all_zero(a_) && all_zero(b_); }

bool HeisTriple::is_integral() const {
  if (!is_integer(c_)) {
    return false;
  }
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (!is_integer(a_[i]) || !is_integer(b_[i])) {
      return false;
    }
  }
  return true;
}

LieTriple::LieTriple(std::size_t dim) : c_(0) {
  check_dim(dim);
  a_.assign(dim - 2, Rational(0));
  b_.assign(dim - 2, Rational(0));
}

LieTriple::LieTriple(RationalVec a, RationalVec b, Rational c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  if (a_.size() != b_.size()) {
    throw std::invalid_argument("LieTriple: a and b must have equal length");
  }
  check_dim(a_.size() + 2);
}

bool LieTriple::is_zero() const { return c_ == 0 && all_zero(a_) && all_zero(b_); }

LieTriple LieTriple::operator+(const LieTriple& other) const {
  check_same_dim(dim(), other.dim(), "LieTriple +");
  return LieTriple(add(a_, other.a_), add(b_, other.b_), c_ + other.c_);
}

LieTriple LieTriple::operator*(const Rational& s) const {
  RationalVec a = a_;
  RationalVec b = b_;
  for (auto& e : a) {
    e *= s;
  }
  for (auto& e : b) {
    e *= s;
  }
  return LieTriple(std::move(a), std::move(b), c_ * s);
}

HeisTriple heis_mul(const HeisTriple& x, const HeisTriple& y) {
  check_same_dim(x.dim(), y.dim(), "heis_mul");
  return HeisTriple(add(x.a(), y.a()), add(x.b(), y.b()), x.c() + y.c() + dot(x.a(), y.b()));
}

HeisTriple heis_inv(const HeisTriple& x) {
  // (-a, -b, -c + a^T b): the corner of x * x^{-1} is c + c' - a^T b.
  return HeisTriple(neg(x.a()), neg(x.b()), -x.c() + dot(x.a(), x.b()));
}

HeisTriple heis_pow(const HeisTriple& x, std::size_t exponent) {
  // x^e = exp(e log x) since log x commutes with itself.
  return heis_exp(heis_log(x) * Rational(static_cast<unsigned long>(exponent)));
}

HeisTriple heis_product(std::span<const HeisTriple> seq) {
  if (seq.empty()) {
    throw std::invalid_argument("heis_product: empty sequence");
  }
  HeisTriple acc = seq.front();
  for (std::size_t i = 1; i < seq.size(); ++i) {
    acc = heis_mul(acc, seq[i]);
  }
  return acc;
}

HeisTriple heis_product(std::span<const HeisTriple> generators,
                        std::span<const std::size_t> word, std::size_t dim) {
  HeisTriple acc(dim);
  for (std::size_t idx : word) {
    if (idx >= generators.size()) {
      throw std::out_of_range("heis_product: generator index out of range");
    }
    acc = heis_mul(acc, generators[idx]);
  }
  return acc;
}

LieTriple heis_log(const HeisTriple& x) {
  return LieTriple(x.a(), x.b(), x.c() - dot(x.a(), x.b()) / 2);
}

HeisTriple heis_exp(const LieTriple& l) {
  return HeisTriple(l.a(), l.b(), l.c() + dot(l.a(), l.b()) / 2);
}

Rational bracket_corner(const LieTriple& x, const LieTriple& y) {
  check_same_dim(x.dim(), y.dim(), "lie_bracket");
  return dot(x.a(), y.b()) - dot(y.a(), x.b());
}

LieTriple lie_bracket(const LieTriple& x, const LieTriple& y) {
  Rational corner = bracket_corner(x, y);
  return LieTriple(RationalVec(x.dim() - 2, Rational(0)), RationalVec(x.dim() - 2, Rational(0)),
                   corner);
}

LieTriple bch_log_product(std::span<const HeisTriple> seq) {
  if (seq.empty()) {
    throw std::invalid_argument("bch_log_product: empty sequence");
  }
  const std::size_t dim = seq.front().dim();
  std::vector<LieTriple> logs;
  logs.reserve(seq.size());
  for (const auto& x : seq) {
    check_same_dim(dim, x.dim(), "bch_log_product");
    logs.push_back(heis_log(x));
  }
  // sum_{i<j} [L_i, L_j] = sum_j [prefix_{j-1}, L_j], using bilinearity.
  LieTriple sum = logs.front();
  Rational brackets = 0;
  for (std::size_t j = 1; j < logs.size(); ++j) {
    brackets += bracket_corner(sum, logs[j]);
    sum = sum + logs[j];
  }
  return LieTriple(sum.a(), sum.b(), sum.c() + brackets / 2);
}

Rational heis_entry(const HeisTriple& x, std::size_t row, std::size_t col) {
  const std::size_t n = x.dim();
  if (row < 1 || row > n || col < 1 || col > n) {
    throw std::out_of_range("heis_entry: index out of range");
  }
  if (row == col) {
    return 1;
  }
  if (row == 1 && col == n) {
    return x.c();
  }
  if (row == 1) {
    return x.a()[col - 2];
  }
  if (col == n && row < n) {
    return x.b()[row - 2];
  }
  return 0;
}

Rational heis_bilinear(const RationalVec& u, const HeisTriple& x, const RationalVec& v) {
  const std::size_t n = x.dim();
  if (u.size() != n || v.size() != n) {
    throw std::invalid_argument("heis_bilinear: vector length must equal the dimension");
  }
  // u^T A v with A = [[1, a^T, c], [0, I, b], [0, 0, 1]].
  Rational acc = u[0] * (v[0] + v[n - 1] * x.c());
  for (std::size_t i = 0; i + 2 < n; ++i) {
    acc += u[0] * x.a()[i] * v[i + 1];
    acc += u[i + 1] * (v[i + 1] + x.b()[i] * v[n - 1]);
  }
  acc += u[n - 1] * v[n - 1];
  return acc;
}

std::string to_string(const HeisTriple& x) {
  std::ostringstream os;
  os << '(';
  write_vec(os, x.a());
  os << ',';
  write_vec(os, x.b());
  os << ',' << to_string(x.c()) << ')';
  return os.str();
}

std::string to_string(const LieTriple& x) {
  std::ostringstream os;
  os << "lie(";
  write_vec(os, x.a());
  os << ',';
  write_vec(os, x.b());
  os << ',' << to_string(x.c()) << ')';
  return os.str();
}

std::size_t HeisTripleHash::operator()(const HeisTriple& x) const {
  std::size_t h = hash_value(x.c());
  for (std::size_t i = 0; i < x.a().size(); ++i) {
    hash_combine(h, hash_value(x.a()[i]));
    hash_combine(h, hash_value(x.b()[i]));
  }
  return h;
}

}  // namespace semireach
