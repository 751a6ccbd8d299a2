#pragma once

#include <map>
#include <vector>

#include "qnets/errors.hpp"
#include "qnets/forms.hpp"
#include "qnets/spectral.hpp"
#include "qnets/ternary.hpp"

namespace qnets {

// First row of the adjugate of Q_x: d forms of degree d-1.
struct SectionRow {
  std::vector<TernaryForm> v;  // v[i] = v_{1,i+1}
  QMat basis_change;           // congruence applied to the net, identity if none
  int retries = 0;
};

struct VMatrix {
  int d = 0;
  std::vector<std::vector<TernaryForm>> v;        // symmetric, degree d-1
  std::map<std::pair<int, int>, TernaryForm> w;    // witnesses, degree d-2
};

struct LinearMatrix {
  int d = 0;
  std::vector<std::vector<TernaryForm>> beta;  // symmetric, linear forms
  Rational c;                                  // det beta = c * U
};

namespace detail {

// Interpolates one adjugate entry adj(Q_x)_{1,i} as a ternary form of degree
// d-1 on the simplex grid (same scheme as spectral_form).
inline TernaryForm interpolate_adjugate_entry(const Net& net, int col, int d) {
  auto monos = monomials_of_degree(d - 1);
  int K = int(monos.size());
  QMat A(K, K);
  std::vector<Rational> b(K);
  int row = 0;
  for (int i = 0; i <= d - 1; ++i)
    for (int j = 0; i + j <= d - 1; ++j) {
      std::array<Rational, 3> node{Rational(i), Rational(j), Rational(1)};
      for (int c = 0; c < K; ++c) {
        Rational t = 1;
        for (int k = 0; k < monos[c][0]; ++k) t *= node[0];
        for (int k = 0; k < monos[c][1]; ++k) t *= node[1];
        A.at(row, c) = t;
      }
      // adj(Q)_{1,col} = (-1)^{1+col} * minor deleting row col, column 1
      QMat q = evaluate(net, {node[0], node[1], node[2]}).matrix();
      QMat m(d - 1, d - 1);
      for (int r = 0, mr = 0; r < d; ++r) {
        if (r == col) continue;
        for (int cc = 0, mc = 0; cc < d; ++cc) {
          if (cc == 0) continue;
          m.at(mr, mc++) = q.at(r, cc);
        }
        ++mr;
      }
      Rational val = det(m);
      if ((col % 2) == 1) val = -val;
      b[row] = val;
      ++row;
    }
  LinearSolve sol = solve(A, b);
  if (!sol.consistent || sol.kernel_dim != 0)
    throw Error(ErrorKind::internal, "adjugate interpolation degenerate");
  TernaryForm f;
  for (int c = 0; c < K; ++c) f.add_term(monos[c], sol.x[c]);
  return f;
}

inline std::vector<QMat> basis_change_list(int n) {
  std::vector<QMat> out;
  out.push_back(QMat::identity(n));
  for (int k = 1; k < n; ++k) {  // swap e_0 <-> e_k
    QMat s = QMat::identity(n);
    s.at(0, 0) = 0;
    s.at(k, k) = 0;
    s.at(0, k) = 1;
    s.at(k, 0) = 1;
    out.push_back(s);
  }
  for (int k = 1; k < n; ++k) {  // shear e_0 += e_k
    QMat s = QMat::identity(n);
    s.at(k, 0) = 1;
    out.push_back(s);
  }
  return out;
}

// coprimality of two forms via a full-degree chart and a y-resultant
inline bool forms_coprime(const TernaryForm& a, const TernaryForm& b) {
  for (const QMat& M : chart_list()) {
    TernaryForm a2 = a.substituted(M), b2 = b.substituted(M);
    if (sgn(a2.coeff({0, a2.degree(), 0})) == 0) continue;
    if (sgn(b2.coeff({0, b2.degree(), 0})) == 0) continue;
    return !resultant_y(a2.chart_z1(), b2.chart_z1()).is_zero();
  }
  throw GenericityFailure("forms_coprime: no admissible chart");
}

}  // namespace detail

// Extracts the first adjugate row of Q_x. When v_11 (or the whole row)
// vanishes identically, retries under deterministic congruences of R^{N+1}.
// The returned row belongs to the congruent net basis_change^T Q basis_change,
// whose spectral form is det(basis_change)^2 * U.
inline SectionRow adjugate_row(const Net& net, const TernaryForm& u) {
  (void)u;
  int d = net.N + 1;
  int tries = 0;
  for (const QMat& S : detail::basis_change_list(d)) {
    Net work = net;
    for (auto& m : work.members) m = m.congruent(S);
    SectionRow row;
    row.basis_change = S;
    row.retries = tries++;
    for (int i = 0; i < d; ++i)
      row.v.push_back(detail::interpolate_adjugate_entry(work, i, d));
    if (!row.v[0].is_zero()) return row;
  }
  throw DegenerateRow("adjugate_row: v11 vanishes under all basis changes");
}

// Completes the section row to the full symmetric v-matrix by solving, for
// each 2 <= r <= s <= d, the linear system v_1r v_1s = v_11 v_rs - U w_11rs
// in the coefficients of v_rs and w_11rs.
inline VMatrix complete_v_matrix(const SectionRow& row, const TernaryForm& u) {
  int d = int(row.v.size());
  if (u.degree() != d || row.v[0].degree() != d - 1)
    throw InputError("complete_v_matrix: degree mismatch");
  if (!detail::forms_coprime(row.v[0], u))
    throw NonUniqueSolution("complete_v_matrix: v11 and U share a factor");
  VMatrix vm;
  vm.d = d;
  vm.v.assign(d, std::vector<TernaryForm>(d));
  for (int i = 0; i < d; ++i) {
    vm.v[0][i] = row.v[i];
    vm.v[i][0] = row.v[i];
  }
  auto mon_rhs = monomials_of_degree(2 * (d - 1));
  auto mon_v = monomials_of_degree(d - 1);
  auto mon_w = monomials_of_degree(d - 2);
  std::map<Exponent, int> ridx;
  for (size_t i = 0; i < mon_rhs.size(); ++i) ridx[mon_rhs[i]] = int(i);
  QMat A(int(mon_rhs.size()), int(mon_v.size() + mon_w.size()));
  for (size_t j = 0; j < mon_v.size(); ++j)
    for (const auto& [e, c] : row.v[0].coeffs())
      A.at(ridx[{mon_v[j][0] + e[0], mon_v[j][1] + e[1], mon_v[j][2] + e[2]}],
           int(j)) += c;
  for (size_t j = 0; j < mon_w.size(); ++j)
    for (const auto& [e, c] : u.coeffs())
      A.at(ridx[{mon_w[j][0] + e[0], mon_w[j][1] + e[1], mon_w[j][2] + e[2]}],
           int(mon_v.size() + j)) -= c;
  for (int r = 1; r < d; ++r)
    for (int s = r; s < d; ++s) {
      TernaryForm rhs = row.v[r] * row.v[s];
      std::vector<Rational> b(mon_rhs.size(), Rational(0));
      for (const auto& [e, c] : rhs.coeffs()) b[ridx[e]] = c;
      LinearSolve sol = solve(A, b);
      if (!sol.consistent)
        throw NoSolution("complete_v_matrix: no (v_rs, w) solution");
      if (sol.kernel_dim != 0)
        throw NonUniqueSolution("complete_v_matrix: underdetermined system");
      TernaryForm vrs, wrs;
      for (size_t j = 0; j < mon_v.size(); ++j) vrs.add_term(mon_v[j], sol.x[j]);
      for (size_t j = 0; j < mon_w.size(); ++j)
        wrs.add_term(mon_w[j], sol.x[mon_v.size() + j]);
      vm.v[r][s] = vrs;
      vm.v[s][r] = vrs;
      vm.w[{r, s}] = wrs;
      // exact identity check
      if (!(row.v[r] * row.v[s] == row.v[0] * vrs - u * wrs))
        throw Error(ErrorKind::internal, "complete_v_matrix: residual not zero");
    }
  return vm;
}

// Cofactors of [v_ij] divided by U^{d-2}: the linear determinantal
// representation, with det beta a constant nonzero multiple of U.
inline LinearMatrix dixon_matrix(const VMatrix& vm, const TernaryForm& u) {
  int d = vm.d;
  TernaryForm upow(Rational(1));
  for (int k = 0; k < d - 2; ++k) upow = upow * u;
  LinearMatrix lm;
  lm.d = d;
  lm.beta.assign(d, std::vector<TernaryForm>(d));
  for (int r = 0; r < d; ++r)
    for (int s = r; s < d; ++s) {
      std::vector<std::vector<TernaryForm>> minor(d - 1, std::vector<TernaryForm>(d - 1));
      for (int i = 0, mi = 0; i < d; ++i) {
        if (i == r) continue;
        for (int j = 0, mj = 0; j < d; ++j) {
          if (j == s) continue;
          minor[mi][mj++] = vm.v[i][j];
        }
        ++mi;
      }
      TernaryForm cof = det_expansion(minor);
      if ((r + s) % 2 == 1) cof = -cof;
      auto q = divide_exact(cof, upow);
      if (!q)
        throw NonzeroRemainder("dixon_matrix: cofactor not divisible by U^{d-2}");
      if (!q->is_zero() && q->degree() != 1)
        throw Error(ErrorKind::internal, "dixon_matrix: beta entry not linear");
      lm.beta[r][s] = *q;
      lm.beta[s][r] = *q;
    }
  TernaryForm detb = det_expansion(lm.beta);
  auto ratio = divide_exact(detb, u);
  if (!ratio || ratio->degree() > 0)
    throw Error(ErrorKind::internal, "dixon_matrix: det beta is not a multiple of U");
  lm.c = ratio->is_zero() ? Rational(0) : ratio->coeff({0, 0, 0});
  if (sgn(lm.c) == 0)
    throw SingularInput("dixon_matrix: det beta vanishes (degenerate theta data)");
  return lm;
}

struct RoundtripReport {
  Rational c;
  LinearMatrix beta;
  TernaryForm u;         // spectral form of the congruent working net
  QMat basis_change;
  bool identities_ok = false;
  bool beta_matches_net = false;
};

// End-to-end Dixon roundtrip on a net with nonsingular spectral curve; all
// identities are exact over Q. The recovered beta must reproduce the working
// net itself (adj(adj Q) = det(Q)^{d-2} Q).
inline RoundtripReport verify_roundtrip(const Net& net) {
  TernaryForm u0 = spectral_form(net);
  if (certify_nonsingular(u0) != Verdict::nonsingular)
    throw SingularInput("verify_roundtrip: spectral curve is singular");
  SectionRow row = adjugate_row(net, u0);
  // working net and its spectral form (rescaled by det(S)^2)
  Net work = net;
  for (auto& m : work.members) m = m.congruent(row.basis_change);
  TernaryForm u = spectral_form(work);
  VMatrix vm = complete_v_matrix(row, u);
  LinearMatrix lm = dixon_matrix(vm, u);
  RoundtripReport rep{lm.c, lm, u, row.basis_change, true, true};
  for (int r = 0; r < lm.d && rep.beta_matches_net; ++r)
    for (int s = 0; s < lm.d; ++s) {
      TernaryForm expect = TernaryForm::linear(work.members[0].at(r, s),
                                               work.members[1].at(r, s),
                                               work.members[2].at(r, s));
      if (!(lm.beta[r][s] == expect)) rep.beta_matches_net = false;
    }
  return rep;
}

}  // namespace qnets
