#pragma once

#include <array>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "qnets/bipoly.hpp"
#include "qnets/linalg.hpp"
#include "qnets/poly.hpp"
#include "qnets/rational.hpp"

namespace qnets {

using Exponent = std::array<int, 3>;

// Homogeneous polynomial in (x0, x1, x2) with exact rational coefficients.
// The zero form has an empty coefficient map and degree() == -1.
class TernaryForm {
 public:
  TernaryForm() = default;
  explicit TernaryForm(Rational scalar) {
    if (sgn(scalar) != 0) coeffs_[{0, 0, 0}] = std::move(scalar);
  }

  static TernaryForm monomial(Exponent e, Rational c) {
    TernaryForm f;
    if (sgn(c) != 0) f.coeffs_[e] = std::move(c);
    return f;
  }
  static TernaryForm linear(Rational a, Rational b, Rational c) {
    TernaryForm f;
    f.add_term({1, 0, 0}, a);
    f.add_term({0, 1, 0}, b);
    f.add_term({0, 0, 1}, c);
    return f;
  }
  static TernaryForm variable(int i) {
    Exponent e{0, 0, 0};
    e[i] = 1;
    return monomial(e, Rational(1));
  }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const {
    if (coeffs_.empty()) return -1;
    const Exponent& e = coeffs_.begin()->first;
    return e[0] + e[1] + e[2];
  }
  const std::map<Exponent, Rational>& coeffs() const { return coeffs_; }
  Rational coeff(const Exponent& e) const {
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? Rational(0) : it->second;
  }
  void add_term(const Exponent& e, const Rational& c) {
    if (sgn(c) == 0) return;
    if (!coeffs_.empty() && e[0] + e[1] + e[2] != degree())
      throw std::invalid_argument("mixed-degree term in TernaryForm");
    auto it = coeffs_.find(e);
    if (it == coeffs_.end())
      coeffs_[e] = c;
    else {
      it->second += c;
      if (sgn(it->second) == 0) coeffs_.erase(it);
    }
  }

  friend TernaryForm operator+(const TernaryForm& f, const TernaryForm& g) {
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    if (f.degree() != g.degree())
      throw std::invalid_argument("adding forms of different degrees");
    TernaryForm h = f;
    for (const auto& [e, c] : g.coeffs_) h.add_term(e, c);
    return h;
  }
  friend TernaryForm operator-(const TernaryForm& f, const TernaryForm& g) {
    return f + g * Rational(-1);
  }
  friend TernaryForm operator-(const TernaryForm& f) { return f * Rational(-1); }
  friend TernaryForm operator*(const TernaryForm& f, const Rational& s) {
    TernaryForm h;
    if (sgn(s) == 0) return h;
    for (const auto& [e, c] : f.coeffs_) h.coeffs_[e] = c * s;
    return h;
  }
  friend TernaryForm operator*(const TernaryForm& f, const TernaryForm& g) {
    TernaryForm h;
    for (const auto& [e, c] : f.coeffs_)
      for (const auto& [e2, c2] : g.coeffs_)
        h.add_term({e[0] + e2[0], e[1] + e2[1], e[2] + e2[2]}, c * c2);
    return h;
  }
  friend bool operator==(const TernaryForm& f, const TernaryForm& g) {
    return f.coeffs_ == g.coeffs_;
  }

  Rational eval(const std::array<Rational, 3>& x) const {
    Rational acc = 0;
    for (const auto& [e, c] : coeffs_) {
      Rational t = c;
      for (int i = 0; i < 3; ++i)
        for (int k = 0; k < e[i]; ++k) t *= x[i];
      acc += t;
    }
    return acc;
  }
  double eval_d(double x, double y, double z) const {
    double acc = 0;
    for (const auto& [e, c] : coeffs_) {
      double t = to_double(c);
      for (int k = 0; k < e[0]; ++k) t *= x;
      for (int k = 0; k < e[1]; ++k) t *= y;
      for (int k = 0; k < e[2]; ++k) t *= z;
      acc += t;
    }
    return acc;
  }

  TernaryForm partial(int i) const {
    TernaryForm g;
    for (const auto& [e, c] : coeffs_) {
      if (e[i] == 0) continue;
      Exponent e2 = e;
      e2[i] -= 1;
      g.add_term(e2, c * Rational(e[i]));
    }
    return g;
  }
  std::array<TernaryForm, 3> gradient() const {
    return {partial(0), partial(1), partial(2)};
  }

  // U(M x): substitute each variable by the corresponding linear form.
  TernaryForm substituted(const QMat& M) const {
    if (M.rows != 3 || M.cols != 3)
      throw std::invalid_argument("substituted: need 3x3 matrix");
    std::array<TernaryForm, 3> img;
    for (int i = 0; i < 3; ++i)
      img[i] = linear(M.at(i, 0), M.at(i, 1), M.at(i, 2));
    // memoized powers
    std::array<std::vector<TernaryForm>, 3> pw;
    int d = degree();
    for (int i = 0; i < 3; ++i) {
      pw[i].push_back(TernaryForm(Rational(1)));
      for (int k = 1; k <= d; ++k) pw[i].push_back(pw[i].back() * img[i]);
    }
    TernaryForm out;
    for (const auto& [e, c] : coeffs_) {
      TernaryForm t = pw[0][e[0]] * pw[1][e[1]] * pw[2][e[2]] * c;
      out = out.is_zero() ? t : out + t;
    }
    return out;
  }

  // Restriction to the affine chart x2 = 1, as an element of Q[x0][x1]
  // (main variable x1 = "y", coefficients in x0 = "x").
  Bipoly chart_z1() const {
    int d = degree();
    std::vector<Upoly> ycoeffs(size_t(std::max(0, d) + 1));
    for (const auto& [e, c] : coeffs_) {
      Upoly& u = ycoeffs[e[1]];
      std::vector<Rational> v(u.coeffs().begin(), u.coeffs().end());
      if (int(v.size()) <= e[0]) v.resize(e[0] + 1, Rational(0));
      v[e[0]] += c;
      u = Upoly(std::move(v));
    }
    return Bipoly(std::move(ycoeffs));
  }

  // Restriction to the line at infinity x2 = 0, dehomogenized by x0 = 1:
  // b(t) = U(1, t, 0).
  Upoly infinity_line() const {
    int d = degree();
    std::vector<Rational> v(size_t(std::max(0, d) + 1), Rational(0));
    for (const auto& [e, c] : coeffs_)
      if (e[2] == 0) v[e[1]] += c;
    return Upoly(std::move(v));
  }

  std::string str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
      if (!first) os << " + ";
      os << to_string(c) << "*x^" << e[0] << "y^" << e[1] << "z^" << e[2];
      first = false;
    }
    return os.str();
  }

 private:
  std::map<Exponent, Rational> coeffs_;
};

// Positive rescaling to coprime integer coefficients.
inline TernaryForm primitive_form(const TernaryForm& f) {
  if (f.is_zero()) return f;
  Integer den = 1, num = 0;
  for (const auto& [e, c] : f.coeffs()) {
    (void)e;
    den = den * c.get_den() / ::gcd(den, Integer(c.get_den()));
  }
  for (const auto& [e, c] : f.coeffs()) {
    (void)e;
    num = ::gcd(num, Integer(c.get_num() * (den / c.get_den())));
  }
  Rational scale = Rational(den) / Rational(num);
  TernaryForm out;
  for (const auto& [e, c] : f.coeffs()) {
    Rational v = c * scale;
    v.canonicalize();
    out.add_term(e, v);
  }
  return out;
}

// Lexicographically ordered exponents (a,b,c), a+b+c = d.
inline std::vector<Exponent> monomials_of_degree(int d) {
  std::vector<Exponent> out;
  for (int a = 0; a <= d; ++a)
    for (int b = 0; b + a <= d; ++b) out.push_back({a, b, d - a - b});
  return out;
}

// Homogenize a chart-z1 bivariate polynomial back to degree d.
inline TernaryForm homogenize(const Bipoly& f, int d) {
  TernaryForm u;
  for (int b = 0; b <= f.degree(); ++b)
    for (int a = 0; a <= f[b].degree(); ++a) {
      if (sgn(f[b][a]) == 0) continue;
      if (a + b > d) throw std::invalid_argument("homogenize: degree overflow");
      u.add_term({a, b, d - a - b}, f[b][a]);
    }
  return u;
}

// Exact division of homogeneous forms: returns q with q*v == u, if it exists.
inline std::optional<TernaryForm> divide_exact(const TernaryForm& u,
                                               const TernaryForm& v) {
  if (v.is_zero()) throw std::invalid_argument("division by zero form");
  if (u.is_zero()) return TernaryForm();
  int dq = u.degree() - v.degree();
  if (dq < 0) return std::nullopt;
  auto qm = monomials_of_degree(dq);
  auto um = monomials_of_degree(u.degree());
  std::map<Exponent, int> uidx;
  for (size_t i = 0; i < um.size(); ++i) uidx[um[i]] = int(i);
  QMat A(int(um.size()), int(qm.size()));
  for (size_t j = 0; j < qm.size(); ++j)
    for (const auto& [e, c] : v.coeffs()) {
      Exponent s{qm[j][0] + e[0], qm[j][1] + e[1], qm[j][2] + e[2]};
      A.at(uidx[s], int(j)) += c;
    }
  std::vector<Rational> b(um.size(), Rational(0));
  for (const auto& [e, c] : u.coeffs()) b[uidx[e]] = c;
  LinearSolve sol = solve(A, b);
  if (!sol.consistent) return std::nullopt;
  TernaryForm q;
  for (size_t j = 0; j < qm.size(); ++j) q.add_term(qm[j], sol.x[j]);
  // confirm exactness (solve() guarantees it, but the check is cheap)
  if (!(q * v == u)) return std::nullopt;
  return q;
}

}  // namespace qnets
