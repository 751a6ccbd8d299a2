#pragma once

#include <vector>

#include "qnets/linalg.hpp"
#include "qnets/poly.hpp"
#include "qnets/rational.hpp"

namespace qnets {

// Bivariate polynomial in (x, y) stored as a polynomial in the main variable
// y whose coefficients live in Q[x].
using Bipoly = Poly<Upoly>;

inline int deg_y(const Bipoly& f) { return f.degree(); }
inline int deg_x(const Bipoly& f) {
  int d = -1;
  for (const auto& c : f.coeffs()) d = std::max(d, c.degree());
  return d;
}

inline Upoly eval_x(const Bipoly& f, const Rational& x0) {
  std::vector<Rational> c(size_t(f.degree() + 1), Rational(0));
  for (int i = 0; i <= f.degree(); ++i) c[i] = eval_at(f[i], x0);
  return Upoly(std::move(c));
}

inline Upoly eval_y(const Bipoly& f, const Rational& y0) {
  Upoly acc;
  for (int i = f.degree(); i >= 0; --i) acc = acc * Upoly(y0) + f[i];
  return acc;
}

inline Rational eval_xy(const Bipoly& f, const Rational& x0, const Rational& y0) {
  Rational acc = 0;
  for (int i = f.degree(); i >= 0; --i) acc = acc * y0 + eval_at(f[i], x0);
  return acc;
}

inline Bipoly deriv_y(const Bipoly& f) { return f.derivative(); }

inline Bipoly deriv_x(const Bipoly& f) {
  std::vector<Upoly> c(size_t(f.degree() + 1));
  for (int i = 0; i <= f.degree(); ++i) c[i] = f[i].derivative();
  return Bipoly(std::move(c));
}

inline Upoly content_y(const Bipoly& f) {
  Upoly c;
  for (int i = 0; i <= f.degree(); ++i) c = gcd(c, f[i]);
  return c;
}

inline Bipoly primitive_y(const Bipoly& f) {
  if (f.is_zero()) return f;
  Upoly c = content_y(f);
  std::vector<Upoly> out(size_t(f.degree() + 1));
  for (int i = 0; i <= f.degree(); ++i) out[i] = f[i] / c;
  return Bipoly(std::move(out));
}

inline Bipoly prem_y(const Bipoly& a, const Bipoly& b) {
  if (b.is_zero()) throw std::invalid_argument("prem_y by zero");
  Bipoly r = a;
  int delta = a.degree() - b.degree() + 1;
  const Upoly& lb = b.lc();
  int steps = 0;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int k = r.degree() - b.degree();
    Upoly f = r.lc();
    r = r * lb - (b.shifted(k) * f);
    ++steps;
  }
  for (; steps < delta; ++steps) r = r * lb;
  return r;
}

// gcd in Q[x][y] via content/primitive split and a primitive PRS.
inline Bipoly bgcd(const Bipoly& a, const Bipoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  Upoly ca = content_y(a), cb = content_y(b);
  Bipoly f = primitive_y(a), g = primitive_y(b);
  if (f.degree() < g.degree()) std::swap(f, g);
  while (!g.is_zero()) {
    Bipoly r = prem_y(f, g);
    f = g;
    g = r.is_zero() ? r : primitive_y(r);
  }
  Upoly cg = gcd(ca, cb);
  std::vector<Upoly> out(size_t(f.degree() + 1));
  for (int i = 0; i <= f.degree(); ++i) out[i] = f[i] * cg;
  return Bipoly(std::move(out));
}

// Newton divided-difference interpolation through distinct rational nodes.
inline Upoly interpolate(const std::vector<Rational>& xs,
                         const std::vector<Rational>& ys) {
  size_t n = xs.size();
  std::vector<Rational> dd = ys;
  for (size_t level = 1; level < n; ++level)
    for (size_t i = n - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
  Upoly p(dd[n - 1]);
  for (size_t i = n - 1; i-- > 0;) {
    // p = p*(x - xs[i]) + dd[i]
    p = p.shifted(1) - p * xs[i] + Upoly(dd[i]);
  }
  return p;
}

namespace detail {

// Sylvester-style matrix for the subresultant S_j of (F, G) w.r.t. y at a
// rational sample x0, with the column of monomial y^i appended after the
// first n+m-2j-1 columns. Formal degrees (n, m) are the bivariate y-degrees.
inline Rational subres_det_at(const Bipoly& F, const Bipoly& G, int j, int i,
                              const Rational& x0) {
  int n = F.degree(), m = G.degree();
  int R = n + m - 2 * j;
  auto fc = [&](int k) { return k < 0 || k > n ? Rational(0) : eval_at(F[k], x0); };
  auto gc = [&](int k) { return k < 0 || k > m ? Rational(0) : eval_at(G[k], x0); };
  // column c (0-based, c < n+m-j) carries monomial y^(n+m-j-1-c)
  auto mono = [&](int c) { return n + m - j - 1 - c; };
  QMat M(R, R);
  for (int r = 0; r < R; ++r) {
    bool isF = r < m - j;
    int shift = isF ? (m - j - 1 - r) : (n + m - 2 * j - 1 - r);
    for (int c = 0; c < R; ++c) {
      int monomial = (c < R - 1) ? mono(c) : i;
      int k = monomial - shift;
      M.at(r, c) = isF ? fc(k) : gc(k);
    }
  }
  return det(M);
}

}  // namespace detail

// Subresultant polynomial S_j(F, G) w.r.t. y, from the determinant-polynomial
// definition, one exact interpolation per coefficient. Requires
// 0 <= j <= deg_y G <= deg_y F and deg_y G >= 1.
inline Bipoly subresultant_j(const Bipoly& F, const Bipoly& G, int j) {
  int n = F.degree(), m = G.degree();
  if (n < m) throw std::invalid_argument("subresultant_j: need deg F >= deg G");
  if (j < 0 || j > m) throw std::invalid_argument("subresultant_j: bad index");
  int dx = std::max(deg_x(F), deg_x(G));
  int R = n + m - 2 * j;
  int bound = R * dx + 1;
  std::vector<Rational> xs(bound + 1);
  for (int t = 0; t <= bound; ++t) xs[t] = Rational(t % 2 == 0 ? t / 2 : -(t / 2 + 1));
  std::vector<Upoly> coeffs(j + 1);
  for (int i = 0; i <= j; ++i) {
    std::vector<Rational> ys(xs.size());
    for (size_t t = 0; t < xs.size(); ++t)
      ys[t] = detail::subres_det_at(F, G, j, i, xs[t]);
    coeffs[i] = interpolate(xs, ys);
  }
  return Bipoly(std::move(coeffs));
}

inline Upoly resultant_y(const Bipoly& F, const Bipoly& G) {
  if (F.is_zero() || G.is_zero()) return Upoly();
  if (F.degree() == 0) {
    // Res(c(x), G) = c(x)^deg G
    Upoly r(Rational(1));
    for (int i = 0; i < G.degree(); ++i) r = r * F[0];
    return r;
  }
  if (G.degree() == 0) {
    Upoly r(Rational(1));
    for (int i = 0; i < F.degree(); ++i) r = r * G[0];
    return r;
  }
  const Bipoly& A = F.degree() >= G.degree() ? F : G;
  const Bipoly& B = F.degree() >= G.degree() ? G : F;
  Bipoly s0 = subresultant_j(A, B, 0);
  return s0.is_zero() ? Upoly() : s0[0];
}

// Principal subresultant coefficient sres_j = coefficient of y^j in S_j.
inline Upoly principal_subres(const Bipoly& F, const Bipoly& G, int j) {
  Bipoly s = subresultant_j(F, G, j);
  return s[j];
}

}  // namespace qnets
