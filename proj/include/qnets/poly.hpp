#pragma once

#include <algorithm>
#include <cassert>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qnets/rational.hpp"

namespace qnets {

// Dense univariate polynomial over a commutative ring T. coeff[i] is the
// coefficient of x^i; the representation is normalized (no trailing zeros),
// and the zero polynomial has an empty coefficient vector (degree -1).
template <class T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(T c0) { coeffs_.push_back(std::move(c0)); trim(); }
  explicit Poly(std::vector<T> cs) : coeffs_(std::move(cs)) { trim(); }

  static Poly monomial(int deg, T c) {
    Poly p;
    if (!is_zero_coeff(c)) {
      p.coeffs_.assign(deg + 1, T{});
      p.coeffs_[deg] = std::move(c);
    }
    return p;
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<T>& coeffs() const { return coeffs_; }

  const T& operator[](int i) const {
    static const T kZero{};
    if (i < 0 || i > degree()) return kZero;
    return coeffs_[i];
  }
  void set_coeff(int i, T c) {
    if (i >= static_cast<int>(coeffs_.size())) coeffs_.resize(i + 1, T{});
    coeffs_[i] = std::move(c);
    trim();
  }
  const T& lc() const {
    if (is_zero()) throw std::logic_error("lc of zero polynomial");
    return coeffs_.back();
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<T> c(std::max(a.coeffs_.size(), b.coeffs_.size()), T{});
    for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] = a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] = c[i] + b.coeffs_[i];
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<T> c(std::max(a.coeffs_.size(), b.coeffs_.size()), T{});
    for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] = a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] = c[i] - b.coeffs_[i];
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a) {
    std::vector<T> c = a.coeffs_;
    for (auto& x : c) x = T{} - x;
    return Poly(std::move(c));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<T> c(a.coeffs_.size() + b.coeffs_.size() - 1, T{});
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (is_zero_coeff(a.coeffs_[i])) continue;
      for (size_t j = 0; j < b.coeffs_.size(); ++j)
        c[i + j] = c[i + j] + a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(c));
  }
  friend Poly operator*(const Poly& a, const T& s) {
    std::vector<T> c = a.coeffs_;
    for (auto& x : c) x = x * s;
    return Poly(std::move(c));
  }
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  // Multiplication by x^k.
  Poly shifted(int k) const {
    if (is_zero()) return Poly();
    std::vector<T> c(coeffs_.size() + k, T{});
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i + k] = coeffs_[i];
    return Poly(std::move(c));
  }

  Poly derivative() const {
    if (degree() < 1) return Poly();
    std::vector<T> c(coeffs_.size() - 1, T{});
    for (size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * T(int(i));
    return Poly(std::move(c));
  }

  // Horner evaluation; S must support S*S-ish mixed ops with T.
  template <class S>
  S eval(const S& x) const {
    S acc{};
    for (int i = degree(); i >= 0; --i) acc = acc * x + S(coeffs_[i]);
    return acc;
  }

 private:
  static bool is_zero_coeff(const T& c) { return c == T{}; }
  void trim() {
    while (!coeffs_.empty() && is_zero_coeff(coeffs_.back())) coeffs_.pop_back();
  }
  std::vector<T> coeffs_;
};

using Upoly = Poly<Rational>;

inline Upoly upoly(std::initializer_list<long> cs) {
  std::vector<Rational> v;
  for (long c : cs) v.emplace_back(c);
  return Upoly(std::move(v));
}

inline Rational eval_at(const Upoly& p, const Rational& x) {
  Rational acc = 0;
  for (int i = p.degree(); i >= 0; --i) acc = acc * x + p[i];
  return acc;
}

// Exact field division with remainder over Q.
inline std::pair<Upoly, Upoly> divmod(const Upoly& a, const Upoly& b) {
  if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
  Upoly r = a, q;
  std::vector<Rational> qc(std::max(0, a.degree() - b.degree() + 1), Rational(0));
  while (!r.is_zero() && r.degree() >= b.degree()) {
    Rational f = r.lc() / b.lc();
    int k = r.degree() - b.degree();
    qc[k] = f;
    r = r - b.shifted(k) * f;
  }
  return {Upoly(std::move(qc)), r};
}

inline Upoly operator/(const Upoly& a, const Upoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
  return q;
}

// Primitive integer normalization: returns p scaled by a positive rational so
// that all coefficients are coprime integers (sign of lc preserved).
inline Upoly primitive(const Upoly& p) {
  if (p.is_zero()) return p;
  Integer den = 1;
  for (const auto& c : p.coeffs()) den = den * c.get_den() / ::gcd(den, Integer(c.get_den()));
  Integer num = 0;
  for (const auto& c : p.coeffs()) num = ::gcd(num, Integer(c.get_num() * (den / c.get_den())));
  std::vector<Rational> out(p.coeffs().size());
  for (size_t i = 0; i < out.size(); ++i) {
    Rational c = p.coeffs()[i] * Rational(den) / Rational(num);
    c.canonicalize();
    out[i] = c;
  }
  return Upoly(std::move(out));
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, computed without
// fractions when the inputs are integral.
inline Upoly prem(const Upoly& a, const Upoly& b) {
  if (b.is_zero()) throw std::invalid_argument("prem by zero");
  Upoly r = a;
  int delta = a.degree() - b.degree() + 1;
  const Rational& lb = b.lc();
  int steps = 0;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int k = r.degree() - b.degree();
    Rational f = r.lc();
    r = r * lb - b.shifted(k) * f;
    ++steps;
  }
  // pad so the multiplier is exactly lc^delta regardless of degree drops
  for (; steps < delta; ++steps) r = r * lb;
  return r;
}

// Pseudo-remainder up to a positive constant: the reduction cascade strips
// content after every step, so coefficients stay near the primitive size.
// Suitable wherever only the remainder's roots and sign matter (gcd, Sturm).
inline Upoly srem_reduced(const Upoly& a, const Upoly& b) {
  if (b.is_zero()) throw std::invalid_argument("srem_reduced by zero");
  Upoly r = a;
  const Rational& lb = b.lc();
  bool neg = sgn(lb) < 0;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int k = r.degree() - b.degree();
    Rational f = r.lc();
    r = r * abs_q(lb) - b.shifted(k) * (neg ? -f : f);
    r = primitive(r);
  }
  return r;
}

// gcd via primitive pseudo-remainder sequence; result is primitive with
// positive leading coefficient (or zero).
inline Upoly gcd(const Upoly& a, const Upoly& b) {
  Upoly f = primitive(a), g = primitive(b);
  if (f.is_zero()) return g.is_zero() ? g : (sgn(g.lc()) < 0 ? -g : g);
  if (g.is_zero()) return sgn(f.lc()) < 0 ? -f : f;
  if (f.degree() < g.degree()) std::swap(f, g);
  while (!g.is_zero()) {
    Upoly r = srem_reduced(f, g);
    f = g;
    g = r;
  }
  return sgn(f.lc()) < 0 ? -f : f;
}

inline Upoly squarefree_part(const Upoly& p) {
  if (p.degree() < 1) return p;
  Upoly g = gcd(p, p.derivative());
  if (g.degree() == 0) return primitive(p);
  return primitive(p / (g * Rational(1)));
}

// Sturm chain built from sign-corrected primitive pseudo-remainders: each
// p_{k+1} is a positive multiple of -rem(p_{k-1}, p_k), which preserves the
// Sturm counting property while keeping integer coefficients small.
struct SturmChain {
  std::vector<Upoly> seq;

  explicit SturmChain(const Upoly& f) {
    Upoly p0 = primitive(f);
    if (p0.is_zero()) { seq.push_back(p0); return; }
    seq.push_back(p0);
    Upoly p1 = primitive(p0.derivative());
    if (p1.is_zero()) return;
    seq.push_back(p1);
    while (true) {
      const Upoly& a = seq[seq.size() - 2];
      const Upoly& b = seq.back();
      Upoly r = srem_reduced(a, b);  // positive multiple of rem(a, b)
      if (r.is_zero()) break;
      seq.push_back(-r);
      if (seq.back().degree() == 0) break;
    }
  }

  // Number of sign variations of the chain at x.
  int variations_at(const Rational& x) const {
    int v = 0, prev = 0;
    for (const auto& p : seq) {
      int s = sgn(eval_at(p, x));
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++v;
      prev = s;
    }
    return v;
  }

  int variations_at_minus_inf() const { return variations_limit(-1); }
  int variations_at_plus_inf() const { return variations_limit(+1); }

  // Roots in the half-open interval (a, b], a < b. Requires f(a) != 0 for the
  // classical statement; we only call it with non-root endpoints.
  int count_roots(const Rational& a, const Rational& b) const {
    return variations_at(a) - variations_at(b);
  }

 private:
  int variations_limit(int dir) const {
    int v = 0, prev = 0;
    for (const auto& p : seq) {
      if (p.is_zero()) continue;
      int s = sgn(p.lc());
      if (dir < 0 && p.degree() % 2 == 1) s = -s;
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++v;
      prev = s;
    }
    return v;
  }
};

// Cauchy bound: every real root lies in (-B, B).
inline Rational cauchy_bound(const Upoly& p) {
  if (p.degree() < 0) return Rational(1);
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = abs_q(p[i] / p.lc());
    if (r > m) m = r;
  }
  return m + 1;
}

// Isolating interval for one real root of a squarefree polynomial: either an
// exact rational root (lo == hi) or an open interval (lo, hi) containing
// exactly one root, with nonzero endpoint values.
struct RootInterval {
  Rational lo, hi;
  bool exact = false;
  Rational mid() const { return exact ? lo : midpoint(lo, hi); }
  double approx() const { return to_double(mid()); }
};

namespace detail {
inline void isolate_rec(const Upoly& f, const SturmChain& chain, Rational a,
                        Rational b, int count, std::vector<RootInterval>& out) {
  if (count == 0) return;
  if (count == 1 && sgn(eval_at(f, a)) * sgn(eval_at(f, b)) < 0) {
    out.push_back({a, b, false});
    return;
  }
  Rational m = midpoint(a, b);
  if (sgn(eval_at(f, m)) == 0) {
    // exact rational root at m; carve out a punctured neighbourhood
    Rational eps = (b - a) / 1024;
    Rational ml, mr;
    for (;;) {
      ml = m - eps;
      mr = m + eps;
      if (sgn(eval_at(f, ml)) != 0 && sgn(eval_at(f, mr)) != 0 &&
          chain.count_roots(ml, mr) == 1)
        break;
      eps = eps / 2;
    }
    isolate_rec(f, chain, a, ml, chain.count_roots(a, ml), out);
    out.push_back({m, m, true});
    isolate_rec(f, chain, mr, b, chain.count_roots(mr, b), out);
    return;
  }
  int cl = chain.count_roots(a, m);
  isolate_rec(f, chain, a, m, cl, out);
  isolate_rec(f, chain, m, b, count - cl, out);
}
}  // namespace detail

// All real roots of f (not necessarily squarefree), in increasing order.
inline std::vector<RootInterval> isolate_real_roots(const Upoly& f) {
  std::vector<RootInterval> out;
  Upoly g = squarefree_part(f);
  if (g.degree() < 1) return out;
  SturmChain chain(g);
  Rational b = cauchy_bound(g);
  Rational a = -b;
  while (sgn(eval_at(g, a)) == 0) a = a - 1;
  while (sgn(eval_at(g, b)) == 0) b = b + 1;
  detail::isolate_rec(g, chain, a, b, chain.count_roots(a, b), out);
  return out;
}

// Roots of f strictly inside (a, b) with f(a) != 0 and f(b) != 0.
inline int count_roots_in(const Upoly& f, const Rational& a, const Rational& b) {
  Upoly g = squarefree_part(f);
  if (g.degree() < 1) return 0;
  if (sgn(eval_at(g, a)) == 0 || sgn(eval_at(g, b)) == 0)
    throw std::invalid_argument("count_roots_in: endpoint is a root");
  SturmChain chain(g);
  return chain.count_roots(a, b);
}

// Halves the width of an isolating interval, keeping exactly one root inside.
inline void refine_interval(const Upoly& sqfree, RootInterval& iv) {
  if (iv.exact) return;
  Rational m = midpoint(iv.lo, iv.hi);
  int sm = sgn(eval_at(sqfree, m));
  if (sm == 0) {
    iv = {m, m, true};
    return;
  }
  if (sgn(eval_at(sqfree, iv.lo)) * sm < 0)
    iv.hi = m;
  else
    iv.lo = m;
}

}  // namespace qnets
