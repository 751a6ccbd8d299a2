#pragma once

#include <array>
#include <vector>

#include "qnets/bipoly.hpp"
#include "qnets/errors.hpp"
#include "qnets/forms.hpp"
#include "qnets/linalg.hpp"
#include "qnets/ternary.hpp"

namespace qnets {

// det Q_x of a net (r = 2), as an exact ternary form of degree N+1, by
// evaluation on the triangular integer grid (i, j, 1), i+j <= d, followed by
// one exact interpolation solve. The simplex grid is unisolvent for
// total-degree-d interpolation, so the system never degenerates.
inline TernaryForm spectral_form(const Net& net) {
  if (net.r != 2) throw InputError("spectral_form: net must have r = 2");
  int d = net.N + 1;
  auto monos = monomials_of_degree(d);
  int K = int(monos.size());
  QMat A(K, K);
  std::vector<Rational> b(K);
  int row = 0;
  for (int i = 0; i <= d; ++i)
    for (int j = 0; i + j <= d; ++j) {
      std::array<Rational, 3> node{Rational(i), Rational(j), Rational(1)};
      for (int c = 0; c < K; ++c) {
        Rational t = 1;
        for (int k = 0; k < monos[c][0]; ++k) t *= node[0];
        for (int k = 0; k < monos[c][1]; ++k) t *= node[1];
        A.at(row, c) = t;
      }
      b[row] = det(evaluate(net, {node[0], node[1], node[2]}).matrix());
      ++row;
    }
  LinearSolve sol = solve(A, b);
  if (!sol.consistent || sol.kernel_dim != 0)
    throw Error(ErrorKind::internal, "spectral_form: interpolation system degenerate");
  TernaryForm u;
  for (int c = 0; c < K; ++c) u.add_term(monos[c], sol.x[c]);
  if (u.is_zero())
    throw IdenticallySingular("spectral_form: det Q_x vanishes identically");
  return u;
}

enum class Verdict { nonsingular, singular, undecided };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::nonsingular: return "nonsingular";
    case Verdict::singular: return "singular";
    default: return "undecided";
  }
}

// Deterministic projective coordinate changes; the second column of each
// matrix is the point sent to (0:1:0), which must avoid the curve.
inline std::vector<QMat> chart_list() {
  static const int pts[][3] = {
      {0, 1, 0}, {0, 0, 1}, {1, 0, 0}, {1, 1, 1},  {0, 1, 1}, {1, 0, 1},
      {1, 1, 0}, {1, -1, 1}, {1, 2, 1}, {2, 1, 1}, {1, 1, 2}, {1, -1, 2},
      {3, 1, 1}, {1, 3, 2}, {2, -1, 3}, {1, 5, 3},
  };
  std::vector<QMat> out;
  for (const auto& p : pts) {
    // complete p (second column) to a basis with the two standard vectors
    // least aligned with it
    int skip = 0;
    for (int i = 1; i < 3; ++i)
      if (std::abs(p[i]) > std::abs(p[skip])) skip = i;
    QMat m(3, 3);
    int col = 0;
    for (int i = 0; i < 3; ++i) {
      if (i == skip) continue;
      m.at(i, col == 0 ? 0 : 2) = 1;
      ++col;
    }
    for (int i = 0; i < 3; ++i) m.at(i, 1) = p[i];
    if (sgn(det(m)) == 0) throw Error(ErrorKind::internal, "chart_list: singular chart");
    out.push_back(m);
  }
  return out;
}

namespace detail {

inline Upoly restrict_to_infinity(const TernaryForm& f) {
  // f(1, t, 0)
  int d = f.degree();
  std::vector<Rational> v(size_t(std::max(0, d) + 1), Rational(0));
  for (const auto& [e, c] : f.coeffs())
    if (e[2] == 0) v[e[1]] += c;
  return Upoly(std::move(v));
}

// Affine singular-point test for a chart with constant leading y-coefficient.
// Layered over the gcd degree k of (F, F_y) at the candidate x-fibers: on the
// level-k locus the multiple roots of F(x0, .) are the roots of S_k(x0, .),
// so a singular point exists iff S_k and F_x share a root over some level-k
// x0. Everything is a gcd computation over Q, hence complete over C.
inline bool affine_singular(const Bipoly& F) {
  Bipoly Fy = deriv_y(F);
  Bipoly Fx = deriv_x(F);
  Upoly D = resultant_y(F, Fy);
  if (D.is_zero()) return true;  // non-squarefree curve
  Upoly Tk = squarefree_part(D);
  for (int k = 1; k <= Fy.degree() && Tk.degree() >= 1; ++k) {
    Upoly sres_k = principal_subres(F, Fy, k);
    Upoly Tk1 = sres_k.is_zero() ? Tk : gcd(Tk, sres_k);
    if (!sres_k.is_zero() && Tk1.degree() != Tk.degree()) {
      // there are fibers of level exactly k: roots of Tk missing from Tk1
      Bipoly Sk = subresultant_j(F, Fy, k);
      Upoly Wk = resultant_y(Fx, Sk);
      Upoly Z = Wk.is_zero() ? Tk : gcd(Tk, Wk);
      if (Z.degree() >= 1 && gcd(Z, Tk1).degree() < Z.degree())
        return true;  // level-k fiber with F_x vanishing at a multiple root
    }
    Tk = Tk1;
  }
  if (Tk.degree() >= 1)
    throw Error(ErrorKind::internal, "affine_singular: unresolved gcd levels");
  return false;
}

}  // namespace detail

// Exact nonsingularity certificate over C for a ternary form of degree >= 2:
// no common projective zero of the three partials. Implemented per chart:
// squarefreeness, the layered affine criterion, and a univariate gcd along
// the line at infinity.
inline Verdict certify_nonsingular(const TernaryForm& u) {
  if (u.degree() < 2) throw InputError("certify_nonsingular: degree must be >= 2");
  for (const QMat& M : chart_list()) {
    TernaryForm v = u.substituted(M);
    if (sgn(v.coeff({0, v.degree(), 0})) == 0) continue;  // (0:1:0) on curve
    auto grad = v.gradient();
    Upoly g = gcd(gcd(detail::restrict_to_infinity(grad[0]),
                      detail::restrict_to_infinity(grad[1])),
                  detail::restrict_to_infinity(grad[2]));
    if (g.degree() >= 1) return Verdict::singular;
    return detail::affine_singular(v.chart_z1()) ? Verdict::singular
                                                 : Verdict::nonsingular;
  }
  return Verdict::undecided;
}

}  // namespace qnets
