#pragma once

// Exact integer / rational kernel shared by every other header.
//
// Int is Boost's arbitrary precision cpp_int, Rational is cpp_rational, which
// keeps every value in lowest terms with a positive denominator.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "latbasis/errors.hpp"

namespace latbasis {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline bool is_integral(const Rational& q) { return den(q) == 1; }

// n / d in lowest terms. Boost 1.74 rejects a negative denominator in the
// two-argument constructor, so the sign is moved onto the numerator here.
inline Rational make_rational(const Int& n, const Int& d) {
  if (d == 0) throw DivisionByZero("rational with zero denominator");
  return d < 0 ? Rational(Int(-n), Int(-d)) : Rational(n, d);
}

// Number of bits in |a| (0 for a == 0).
inline std::size_t bit_length(const Int& a) {
  if (a == 0) return 0;
  return boost::multiprecision::msb(abs_int(a)) + 1;
}

struct Bezout {
  Int g;
  Int alpha;
  Int beta;
};

// g = gcd(|a|, |b|) >= 0 with alpha*a + beta*b = g.
// When a divides b the pair (sign(a), 0) is returned, so a gcd chain that does
// not drop keeps its previous combination untouched.
inline Bezout ext_gcd(const Int& a, const Int& b) {
  if (a == 0 && b == 0) return {0, 0, 0};
  if (a == 0) return {abs_int(b), 0, b < 0 ? -1 : 1};
  if (b % a == 0) return {abs_int(a), a < 0 ? -1 : 1, 0};

  Int old_r = abs_int(a), r = abs_int(b);
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (a < 0) old_s = -old_s;
  if (b < 0) old_t = -old_t;
  return {old_r, old_s, old_t};
}

inline Int gcd_many(std::span<const Int> values) {
  Int g = 0;
  for (const Int& v : values) g = boost::multiprecision::gcd(g, abs_int(v));
  return g;
}

inline Int gcd_many(std::initializer_list<Int> values) {
  return gcd_many(std::span<const Int>(values.begin(), values.size()));
}

// Positive lcm of nonzero values; the empty lcm is 1.
inline Int lcm_many(std::span<const Int> values) {
  Int l = 1;
  for (const Int& v : values) {
    if (v == 0) throw DivisionByZero("lcm_many received a zero entry");
    Int a = abs_int(v);
    l = l / boost::multiprecision::gcd(l, a) * a;
  }
  return l;
}

inline Int lcm_many(std::initializer_list<Int> values) {
  return lcm_many(std::span<const Int>(values.begin(), values.size()));
}

inline Int floor_div(const Int& a, const Int& b) {
  if (b == 0) throw DivisionByZero("floor_div");
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Int floor_q(const Rational& q) { return floor_div(num(q), den(q)); }

// Nearest integer, ties rounded up: floor(q + 1/2).
inline Int nearest_q(const Rational& q) { return floor_q(q + Rational(1, 2)); }

// q - floor(q), always in [0, 1).
inline Rational frac_part(const Rational& q) { return q - Rational(floor_q(q)); }

// Reduction modulo 1 where nonzero integers map to 1 instead of 0.
// Output lies in [0, 1].
inline Rational altered_mod1(const Rational& q) {
  if (is_integral(q)) return q == 0 ? Rational(0) : Rational(1);
  return frac_part(q);
}

inline std::string to_string(const Int& a) { return a.str(); }

inline std::string to_string(const Rational& q) {
  if (is_integral(q)) return num(q).str();
  return num(q).str() + "/" + den(q).str();
}

// Parses a decimal integer with optional sign; throws ParseError otherwise.
inline Int parse_int(const std::string& text) {
  std::size_t i = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
  if (i == text.size()) throw ParseError("expected integer, got '" + text + "'");
  for (std::size_t k = i; k < text.size(); ++k) {
    if (text[k] < '0' || text[k] > '9') throw ParseError("expected integer, got '" + text + "'");
  }
  // cpp_int reads a leading 0 as an octal prefix.
  std::size_t first = text.find_first_not_of('0', i);
  Int v = first == std::string::npos ? Int(0) : Int(text.substr(first));
  return text[0] == '-' ? Int(-v) : v;
}

}  // namespace latbasis
