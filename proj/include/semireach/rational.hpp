#pragma once

// Exact scalars. Every decision path in the library runs on these; there is
// no floating point anywhere below the CLI.

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace semireach {

using Integer  = mpz_class;
using Rational = mpq_class;

using RationalVec = std::vector<Rational>;
using IntegerVec  = std::vector<Integer>;

/// Parses "p/q", "-p", "p" (decimal integers). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is one.
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

Integer floor_of(const Rational& x);
Integer ceil_of(const Rational& x);

inline bool is_integer(const Rational& x) { return x.get_den() == 1; }

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// Extended Euclid: returns g = gcd(a, b) >= 0 and sets s, t with s*a + t*b = g.
Integer ext_gcd(const Integer& a, const Integer& b, Integer& s, Integer& t);

Rational dot(const RationalVec& x, const RationalVec& y);

std::size_t hash_value(const Integer& x);
std::size_t hash_value(const Rational& x);

inline void hash_combine(std::size_t& seed, std::size_t h) {
  seed ^= h + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace semireach
