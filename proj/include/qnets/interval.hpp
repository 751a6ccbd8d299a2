#pragma once

#include <stdexcept>

#include "qnets/poly.hpp"
#include "qnets/rational.hpp"

namespace qnets {

// Closed rational interval with outward-rounding-free exact arithmetic.
struct QInterval {
  Rational lo, hi;

  QInterval() : lo(0), hi(0) {}
  QInterval(Rational a) : lo(a), hi(a) {}
  QInterval(Rational a, Rational b) : lo(std::move(a)), hi(std::move(b)) {
    if (lo > hi) throw std::invalid_argument("inverted interval");
  }

  Rational width() const { return hi - lo; }
  Rational mid() const { return midpoint(lo, hi); }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
  // Sign if definite, 0 if the interval straddles zero.
  int definite_sign() const {
    if (sgn(lo) > 0) return 1;
    if (sgn(hi) < 0) return -1;
    return 0;
  }

  friend QInterval operator+(const QInterval& a, const QInterval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
  }
  friend QInterval operator-(const QInterval& a, const QInterval& b) {
    return {a.lo - b.hi, a.hi - b.lo};
  }
  friend QInterval operator-(const QInterval& a) { return {-a.hi, -a.lo}; }
  friend QInterval operator*(const QInterval& a, const QInterval& b) {
    Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo,
             p4 = a.hi * b.hi;
    Rational lo = p1, hi = p1;
    for (const Rational& p : {p2, p3, p4}) {
      if (p < lo) lo = p;
      if (p > hi) hi = p;
    }
    return {lo, hi};
  }
  // Division requires a sign-definite denominator.
  friend QInterval operator/(const QInterval& a, const QInterval& b) {
    if (b.contains_zero()) throw std::domain_error("interval division by zero-straddling interval");
    QInterval inv(Rational(1) / b.hi, Rational(1) / b.lo);
    return a * inv;
  }
};

inline QInterval eval_on(const Upoly& p, const QInterval& x) {
  QInterval acc(Rational(0));
  for (int i = p.degree(); i >= 0; --i) acc = acc * x + QInterval(p[i]);
  return acc;
}

}  // namespace qnets
