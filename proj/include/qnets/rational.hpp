#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qnets {

// Exact rational scalar. All sign decisions in the library go through this
// type; doubles appear only in the numerical oracle and in rendering.
using Rational = mpq_class;
using Integer = mpz_class;

inline int sgn(const Rational& q) { return ::sgn(q); }
inline int sgn(const Integer& z) { return ::sgn(z); }

inline Rational rat(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational abs_q(const Rational& q) { return q < 0 ? Rational(-q) : q; }

// Parses "p/q", "p", or a plain integer token. Throws on malformed input or
// zero denominator.
inline Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rational q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

// Canonical "p/q" (or "p" when the denominator is 1) with gcd(p,q)=1, q>0.
inline std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

inline double to_double(const Rational& q) { return q.get_d(); }

// Dyadic midpoint helpers used by the root isolators: midpoints are chosen
// with power-of-two denominators so interval endpoints stay small.
inline Rational midpoint(const Rational& a, const Rational& b) {
  Rational m = (a + b) / 2;
  m.canonicalize();
  return m;
}

}  // namespace qnets
