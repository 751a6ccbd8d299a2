#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qnets/algebraic.hpp"
#include "qnets/oracle.hpp"
#include "qnets/spectral.hpp"
#include "qnets/topology.hpp"

namespace qnets {

struct ConicPairCount {
  int real_distinct = 0;
  int qc_positive = 0;
  int qc_negative = 0;
  int qc_zero = 0;
  bool transversal = false;  // eliminant squarefree (all intersections simple)
};

namespace detail {

inline TernaryForm quadric_form(const SymmetricForm& q) {
  TernaryForm f;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Exponent e{0, 0, 0};
      e[i] += 1;
      e[j] += 1;
      f.add_term(e, q.at(i, j));
    }
  return f;
}

}  // namespace detail

// Exact solution census of {q_a = q_b = 0} in RP^2 with the sign of q_c at
// each real solution. Returns nullopt when every chart degenerates (shared
// components, solutions on every chart's infinity line, or gcd jumps).
inline std::optional<ConicPairCount> two_conic_census(const SymmetricForm& qa,
                                                      const SymmetricForm& qb,
                                                      const SymmetricForm& qc) {
  TernaryForm A0 = detail::quadric_form(qa);
  TernaryForm B0 = detail::quadric_form(qb);
  TernaryForm C0 = detail::quadric_form(qc);
  for (const QMat& M : chart_list()) {
    TernaryForm A = A0.substituted(M), B = B0.substituted(M), C = C0.substituted(M);
    if (sgn(A.coeff({0, 2, 0})) == 0 || sgn(B.coeff({0, 2, 0})) == 0) continue;
    // no solutions on the chart's infinity line
    Upoly ainf = detail::restrict_to_infinity(A);
    Upoly binf = detail::restrict_to_infinity(B);
    if (gcd(ainf, binf).degree() >= 1) continue;
    Bipoly A2 = A.chart_z1(), B2 = B.chart_z1(), C2 = C.chart_z1();
    Upoly R = resultant_y(A2, B2);
    if (R.is_zero()) continue;  // common component
    Upoly Rs = squarefree_part(R);
    Bipoly S1 = subresultant_j(A2, B2, 1);
    Upoly s11 = S1[1], s10 = S1[0];
    if (gcd(Rs, s11).degree() >= 1) continue;  // gcd degree 2 somewhere
    // q_c along the solution: E(x) = C2(x, -s10/s11) * s11^2
    Upoly n = -s10, d = s11;
    Upoly E = C2[2] * n * n + C2[1] * n * d + C2[0] * d * d;
    ConicPairCount out;
    out.transversal = gcd(R, R.derivative()).degree() == 0;
    // complex regularity of the triple: no common zero of A, B, C anywhere
    if (gcd(Rs, E).degree() >= 1)
      throw DegenerateSystem("two_conic_census: the net has a common zero");
    for (auto& iv : isolate_real_roots(Rs)) {
      AlgReal alpha(Rs, iv);
      ++out.real_distinct;
      int s = alpha.sign_of(E);
      if (s > 0)
        ++out.qc_positive;
      else if (s < 0)
        ++out.qc_negative;
      else
        ++out.qc_zero;
    }
    return out;
  }
  return std::nullopt;
}

struct KroneckerResult {
  int parity = 0;                 // 0 or 1
  int positive_solutions = 0;     // from the first transversal triple
  int triples_used = 0;
};

// Z2 Kronecker invariant of a net of conics (N = r = 2): the parity of the
// number of real solutions of q_a = q_b = 0 with q_c > 0, over a fixed list
// of non-collinear parameter triples; only transversal triples vote.
inline KroneckerResult kronecker_parity(const Net& net) {
  if (net.N != 2 || net.r != 2)
    throw InputError("kronecker_parity: need a net of conics (N = r = 2)");
  static const long triples[][3][3] = {
      {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
      {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}},
      {{1, 1, 1}, {1, -1, 0}, {0, 1, -1}},
      {{2, 1, 0}, {0, 1, 1}, {1, 0, 2}},
      {{1, 2, 0}, {1, 0, 1}, {0, 1, 1}},
      {{3, 1, 1}, {1, 3, 1}, {1, 1, 3}},
  };
  KroneckerResult res;
  std::optional<int> parity;
  for (const auto& t : triples) {
    std::vector<Rational> a{rat(t[0][0]), rat(t[0][1]), rat(t[0][2])};
    std::vector<Rational> b{rat(t[1][0]), rat(t[1][1]), rat(t[1][2])};
    std::vector<Rational> c{rat(t[2][0]), rat(t[2][1]), rat(t[2][2])};
    QMat tri(3, 3);
    for (int i = 0; i < 3; ++i) {
      tri.at(0, i) = a[i];
      tri.at(1, i) = b[i];
      tri.at(2, i) = c[i];
    }
    if (sgn(det(tri)) == 0)
      throw Error(ErrorKind::internal, "kronecker_parity: collinear triple in list");
    auto census =
        two_conic_census(evaluate(net, a), evaluate(net, b), evaluate(net, c));
    if (!census || !census->transversal || census->qc_zero > 0) continue;
    int p = census->qc_positive % 2;
    if (parity && *parity != p)
      throw DegenerateSystem("kronecker_parity: triples disagree (irregular net)");
    if (!parity) res.positive_solutions = census->qc_positive;
    parity = p;
    ++res.triples_used;
  }
  if (!parity)
    throw DegenerateSystem("kronecker_parity: no transversal triple found");
  res.parity = *parity;
  return res;
}

struct EmptyOvalLawResult {
  bool checked = false;  // false when V_R is empty (law vacuous)
  bool holds = false;
  int v_count = 0;
  int empty_ovals = 0;
  std::string note;
};

// N = 3 quartic law: when V_R is nonempty and the spectral quartic is
// nonsingular, C_R consists of |V_R| / 2 empty ovals; when V_R is empty,
// C_R is empty or a nest of depth two.
inline EmptyOvalLawResult empty_oval_law_check(const Net& net,
                                               const OracleOptions& opt = {}) {
  if (net.N != 3 || net.r != 2)
    throw InputError("empty_oval_law_check: need a net in RP^3");
  TernaryForm u = spectral_form(net);
  if (certify_nonsingular(u) != Verdict::nonsingular)
    throw SingularInput("empty_oval_law_check: singular spectral quartic");
  EmptyOvalLawResult out;
  SolutionSet sol = solve_zero_dim(net.members, opt);
  out.v_count = sol.count();
  CurveTopology topo = ArrangementBuilder(u).build().topo;
  out.empty_ovals = topo.empty_oval_count();
  if (out.v_count == 0) {
    out.checked = false;
    bool empty_curve = topo.ovals.empty() && !topo.has_one_sided;
    bool nest2 = topo.ovals.size() == 2 && topo.max_depth() == 2 &&
                 !topo.has_one_sided;
    out.holds = empty_curve || nest2;
    out.note = "V_R empty: spectral curve must be empty or a depth-two nest";
    return out;
  }
  out.checked = true;
  out.holds = (out.v_count % 2 == 0) &&
              (int(topo.ovals.size()) == out.empty_ovals) &&
              (out.empty_ovals == out.v_count / 2);
  return out;
}

}  // namespace qnets
