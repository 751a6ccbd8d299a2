#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qnets/errors.hpp"
#include "qnets/forms.hpp"
#include "qnets/oracle.hpp"
#include "qnets/spectral.hpp"
#include "qnets/topology.hpp"

namespace qnets {

// ---------------------------------------------------------------------------
// Plane curves with many submaximal ovals, built as iterated small
// perturbations of unions with a fixed ellipse. All line data are committed
// rationals; only the perturbation size is searched (halving, validated by a
// full exact topology recomputation at every stage).
// ---------------------------------------------------------------------------

struct HilbertStage {
  int degree = 0;
  std::vector<Rational> chords;  // x-values of the vertical chords used
  Rational epsilon;              // signed, as accepted by validation
  int oval_count = 0;
  std::map<int, int> depth_census;
};

struct HilbertResult {
  TernaryForm curve;
  CurveTopology topo;
  std::vector<HilbertStage> stages;
  int submaximal_depth = 0;
  int submaximal_count = 0;
};

namespace constructions_detail {

inline TernaryForm ellipse() {  // x^2 + y^2 - z^2
  TernaryForm e;
  e.add_term({2, 0, 0}, rat(1));
  e.add_term({0, 2, 0}, rat(1));
  e.add_term({0, 0, 2}, rat(-1));
  return e;
}

inline TernaryForm vertical_chord(const Rational& c) {  // x - c z
  return TernaryForm::linear(rat(1), rat(0), -c);
}

// circle point for parameter t: x = (1-t^2)/(1+t^2)
inline Rational chord_x(const Rational& t) {
  return (1 - t * t) / (1 + t * t);
}

struct CensusTarget {
  std::map<int, int> depth_counts;  // full census by depth
  bool one_sided = false;
  int total = 0;
};

inline std::map<int, CensusTarget> hilbert_targets() {
  std::map<int, CensusTarget> t;
  t[2] = {{{1, 1}}, false, 1};
  t[3] = {{{1, 1}}, true, 1};
  t[4] = {{{1, 4}}, false, 4};
  t[5] = {{{1, 6}}, true, 6};
  t[6] = {{{1, 2}, {2, 9}}, false, 11};
  t[7] = {{}, true, 15};  // only the submaximal count is pinned for d = 7, 8
  t[8] = {{}, false, 22};
  return t;
}

// submaximal counts by the construction theorem: 4, 6, then k(k+1)-3 even,
// k(k+2)-3 odd
inline int hilbert_theorem_count(int d) {
  if (d == 4) return 4;
  if (d == 5) return 6;
  int k = d / 2;
  return d % 2 == 0 ? k * (k + 1) - 3 : k * (k + 2) - 3;
}

inline bool census_matches(const CurveTopology& topo, int d) {
  auto targets = hilbert_targets();
  const CensusTarget& tgt = targets.at(d);
  if (topo.has_one_sided != tgt.one_sided) return false;
  if (int(topo.ovals.size()) != tgt.total) return false;
  for (auto& [depth, count] : tgt.depth_counts)
    if (topo.count_depth(depth) != count) return false;
  int sub = d / 2 - 1;
  if (sub >= 1 && topo.count_depth(sub) != hilbert_theorem_count(d)) return false;
  return true;
}

// windows of chord parameters per stage (committed constants; each stage's
// points lie on the boundary arc of the chosen disk of the previous stage)
inline std::vector<Rational> stage_params(int d) {
  auto frac = [](long num, long den) { return rat(num, den); };
  switch (d) {
    case 2: return {frac(1, 2), frac(1, 3)};                      // 2 chords
    case 3: return {frac(1, 2), frac(1, 3), frac(1, 4)};          // 3 chords
    case 4: return {frac(1, 5), frac(1, 6), frac(1, 7), frac(1, 8)};
    case 5:
      return {frac(1, 5), frac(1, 6), frac(1, 7), frac(1, 8), frac(1, 9)};
    case 6:
      return {frac(1, 10), frac(1, 11), frac(1, 12), frac(1, 13), frac(1, 14),
              frac(1, 15)};
    case 7:
      return {frac(1, 11), frac(1, 12), frac(1, 13), frac(1, 14), frac(1, 15),
              frac(1, 16), frac(1, 17)};
    case 8:
      return {frac(1, 17), frac(1, 18), frac(1, 19), frac(1, 20), frac(1, 21),
              frac(1, 22), frac(1, 23), frac(1, 24)};
    default:
      throw InputError("hilbert_curve: unsupported degree");
  }
}

}  // namespace constructions_detail

struct HilbertOptions {
  int degree_cap = 8;
  Rational epsilon_floor = Rational(1, Integer(1) << 62);
  uint64_t seed = 0;  // reserved; the construction is deterministic
};

inline HilbertResult hilbert_curve(int d, const HilbertOptions& opt = {}) {
  using namespace constructions_detail;
  if (d < 2 || d > opt.degree_cap)
    throw InputError("hilbert_curve: degree out of range (cap " +
                     std::to_string(opt.degree_cap) + ")");
  TernaryForm pE = ellipse();
  HilbertResult res;
  int base = d % 2 == 0 ? 2 : 3;
  // seed of the chain: the constant 1 for the even chain, a line disjoint
  // from the ellipse for the odd chain ({x = 2z} misses E: y^2 = -3 z^2)
  TernaryForm prev = base == 2 ? TernaryForm(Rational(1))
                               : TernaryForm::linear(rat(1), rat(0), rat(-2));
  for (int stage_d = base; stage_d <= d; stage_d += 2) {
    TernaryForm lines(Rational(1));
    HilbertStage st;
    st.degree = stage_d;
    for (const Rational& t : stage_params(stage_d)) {
      Rational c = chord_x(t);
      st.chords.push_back(c);
      lines = lines * vertical_chord(c);
    }
    TernaryForm base_part = prev * pE;
    bool found = false;
    Rational eps = rat(1, 8);
    while (!found && eps >= opt.epsilon_floor) {
      for (int sign = 0; sign < 2 && !found; ++sign) {
        // the base stages commit to the middle-arc pocket layout (curve
        // value at (1,0) negative, putting the two pockets over (+-1, 0));
        // deeper stages are sign-searched and gated by the full census
        if (stage_d <= 3 && sign == 1) continue;
        Rational e = sign == 0 ? -eps : eps;
        TernaryForm cand = primitive_form(base_part + lines * e);
        if (certify_nonsingular(cand) != Verdict::nonsingular) continue;
        CurveTopology topo;
        try {
          topo = ArrangementBuilder(cand).build().topo;
        } catch (const Error&) {
          continue;
        }
        if (!census_matches(topo, stage_d)) continue;
        if (!check_bezout(topo))
          throw Error(ErrorKind::internal, "hilbert_curve: bezout violation");
        st.epsilon = e;
        st.oval_count = int(topo.ovals.size());
        for (auto& o : topo.ovals) st.depth_census[o.depth] += 1;
        prev = cand;
        res.topo = topo;
        found = true;
      }
      if (!found) eps = eps / 2;
    }
    if (!found)
      throw SearchExhausted("hilbert_curve: no epsilon validates degree " +
                            std::to_string(stage_d));
    res.stages.push_back(std::move(st));
  }
  res.curve = prev;
  res.submaximal_depth = d / 2 - 1;
  res.submaximal_count =
      res.submaximal_depth >= 1 ? res.topo.count_depth(res.submaximal_depth) : 0;
  return res;
}

// ---------------------------------------------------------------------------
// One-dimensional complete intersections with 2^{N-2}(N-3)+2 components
// ---------------------------------------------------------------------------

inline long harnack_component_count(int N) {
  return (long(1) << (N - 2)) * (N - 3) + 2;
}
inline long genus_check(int N) { return (long(1) << (N - 2)) * (N - 3) + 1; }

struct LinearForm {  // sum coeffs[i] x_i in R^{n}
  std::vector<Rational> coeffs;
  double eval_d(const std::vector<double>& u) const {
    double s = 0;
    for (size_t i = 0; i < coeffs.size() && i < u.size(); ++i)
      s += to_double(coeffs[i]) * u[i];
    return s;
  }
};

struct HarnackStage {
  int N = 0;
  Rational epsilon, delta;
  long components = 0;
};

struct HarnackResult {
  int N = 0;
  std::vector<SymmetricForm> forms;  // q^(2), ..., q^(N) in N+1 variables
  std::vector<HarnackStage> stages;
  long components = 0;
  CurveCountResult final_count;
};

namespace constructions_detail {

inline LinearForm axis(int i, int n) {
  LinearForm l;
  l.coeffs.assign(n, Rational(0));
  l.coeffs[i] = 1;
  return l;
}

inline LinearForm lin_sub(const LinearForm& a, const LinearForm& b,
                          const Rational& scale_b, int n) {
  LinearForm out;
  out.coeffs.assign(n, Rational(0));
  for (size_t i = 0; i < out.coeffs.size(); ++i) {
    Rational v = 0;
    if (i < a.coeffs.size()) v += a.coeffs[i];
    if (i < b.coeffs.size()) v -= scale_b * b.coeffs[i];
    out.coeffs[i] = v;
  }
  return out;
}

// symmetric matrix of the product of two linear forms in n variables
inline SymmetricForm rank2_product(const LinearForm& a, const LinearForm& b, int n) {
  SymmetricForm f(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Rational ai = i < int(a.coeffs.size()) ? a.coeffs[i] : Rational(0);
      Rational aj = j < int(a.coeffs.size()) ? a.coeffs[j] : Rational(0);
      Rational bi = i < int(b.coeffs.size()) ? b.coeffs[i] : Rational(0);
      Rational bj = j < int(b.coeffs.size()) ? b.coeffs[j] : Rational(0);
      Rational v = (ai * bj + aj * bi) / 2;
      f.set(i, j, v);
    }
  return f;
}

inline SymmetricForm pad_form(const SymmetricForm& q, int n) {
  SymmetricForm f(n);
  for (int i = 0; i < q.dim(); ++i)
    for (int j = i; j < q.dim(); ++j) f.set(i, j, q.at(i, j));
  return f;
}

// sign-change positions of a linear form along a tracked loop
inline std::vector<size_t> loop_crossings(const TrackedLoop& loop,
                                          const LinearForm& l) {
  std::vector<size_t> out;
  const auto& pts = loop.points;
  size_t n = pts.size();
  for (size_t i = 0; i < n; ++i) {
    double a = l.eval_d(pts[i]);
    double b = i + 1 < n ? l.eval_d(pts[i + 1])
                         : (loop.antipodal_closed ? -l.eval_d(pts[0])
                                                  : l.eval_d(pts[0]));
    if (a == 0) a = 1e-300;
    if ((a > 0) != (b > 0)) out.push_back(i);
  }
  return out;
}

// the loop projects to RP^N; a linear hyperplane crossing count must be read
// on the sphere loop, where the loop either closes at its start or at the
// antipode. For antipodally-closing loops the sphere circle is the doubled
// path, so crossings double.
inline int projective_crossings(const TrackedLoop& loop, const LinearForm& l) {
  // the tracked loop closes at start or -start; either way consecutive sign
  // changes along the stored cycle count hyperplane hits of the projective
  // loop once each
  return int(loop_crossings(loop, l).size());
}

// cyclic separation: all crossings of l2 lie in one arc between consecutive
// crossings of l1 (the two closed arcs A1, A2 are disjoint)
inline bool crossings_separated(const TrackedLoop& loop, const LinearForm& l1,
                                const LinearForm& l2) {
  auto c1 = loop_crossings(loop, l1);
  auto c2 = loop_crossings(loop, l2);
  if (c1.empty() || c2.empty()) return false;
  // position of each l2 crossing in the cyclic order of c1 gaps
  size_t n = loop.points.size();
  auto gap_of = [&](size_t pos) {
    // index of the c1 crossing preceding pos cyclically
    size_t best = c1.size() - 1;
    for (size_t k = 0; k < c1.size(); ++k)
      if (c1[k] <= pos) best = k;
    (void)n;
    return best;
  };
  size_t g0 = gap_of(c2[0]);
  for (size_t k = 1; k < c2.size(); ++k)
    if (gap_of(c2[k]) != g0) return false;
  return true;
}

}  // namespace constructions_detail

struct HarnackOptions {
  Rational epsilon_floor = Rational(1, Integer(1) << 62);
  OracleOptions oracle;
};

// The inductive construction of a regular one-dimensional intersection of
// quadrics with the extremal number of components. The base conic and the
// step formulas are fixed; epsilon and delta are halved until the oracle
// count and the arc conditions validate.
inline HarnackResult harnack_intersection(int N, const HarnackOptions& opt = {}) {
  using namespace constructions_detail;
  if (N < 2 || N > 6) throw InputError("harnack_intersection: N out of range");
  int n = N + 1;  // ambient R^{N+1}
  HarnackResult res;
  res.N = N;
  // base: l1 = x2, l2 = x2 - x1, q2 = l1 l2 + (x1 - x0)(x1 - 2 x0)
  LinearForm l1 = axis(2, n), l2 = lin_sub(axis(2, n), axis(1, n), rat(1), n);
  {
    LinearForm a = lin_sub(axis(1, n), axis(0, n), rat(1), n);
    LinearForm b = lin_sub(axis(1, n), axis(0, n), rat(2), n);
    SymmetricForm q2 = rank2_product(l1, l2, n) + rank2_product(a, b, n);
    res.forms.push_back(q2);
  }
  for (int stage = 2; stage < N; ++stage) {
    // we are constructing q^{stage+1}; current curve lives in RP^{stage}
    int m = stage + 1;  // next ambient projective dimension
    // track the current curve in RP^{stage} (restrict forms to x_0..x_stage)
    std::vector<SymmetricForm> cur;
    for (auto& q : res.forms) {
      SymmetricForm r(stage + 1);
      for (int i = 0; i <= stage; ++i)
        for (int j = i; j <= stage; ++j) r.set(i, j, q.at(i, j));
      cur.push_back(r);
    }
    OracleOptions oo = opt.oracle;
    oo.collect_points = true;
    CurveCountResult count = count_components_curve(cur, oo);
    if (count.count != harnack_component_count(stage))
      throw Error(ErrorKind::internal, "harnack: stage count drifted");
    // distinguished component: the one crossed by {l1 = 0} 2^{stage-1} times
    LinearForm l1s(l1), l2s(l2);
    l1s.coeffs.resize(stage + 1);
    l2s.coeffs.resize(stage + 1);
    int disti = -1;
    for (size_t i = 0; i < count.loops.size(); ++i) {
      int c = projective_crossings(count.loops[i], l1s);
      if (c == (1 << (stage - 1))) {
        disti = int(i);
        break;
      }
    }
    if (disti < 0)
      throw Error(ErrorKind::internal, "harnack: distinguished component missing");
    const TrackedLoop& dist = count.loops[disti];
    // delta search: for t in [0, delta], {l2 - t l1} must cross the
    // distinguished component 2^{stage-1} times, all crossings separated
    // from the l1 crossings
    Rational delta = rat(1, 8);
    HarnackStage st;
    st.N = stage + 1;
    for (;; delta = delta / 2) {
      if (delta < opt.epsilon_floor)
        throw SearchExhausted("harnack: delta search exhausted");
      bool ok = true;
      for (int k = 0; k <= 4 && ok; ++k) {
        Rational t = delta * k / 4;
        LinearForm lt = lin_sub(l2s, l1s, t, stage + 1);
        if (projective_crossings(dist, lt) != (1 << (stage - 1)) ||
            !crossings_separated(dist, l1s, lt))
          ok = false;
      }
      if (ok) break;
    }
    st.delta = delta;
    LinearForm l2tilde = lin_sub(l2, l1, delta, n);
    LinearForm l1next = axis(m, n);
    LinearForm l2next = lin_sub(axis(m, n), l1, rat(1), n);
    // epsilon search with the oracle recount in RP^{stage+1}
    Rational eps = rat(1, 8);
    for (;; eps = eps / 2) {
      if (eps < opt.epsilon_floor)
        throw SearchExhausted("harnack: epsilon search exhausted");
      SymmetricForm qnext =
          rank2_product(l1next, l2next, n) + rank2_product(l2, l2tilde, n) * eps;
      std::vector<SymmetricForm> sys;
      for (auto& q : res.forms) {
        SymmetricForm r(m + 1);
        for (int i = 0; i <= m; ++i)
          for (int j = i; j <= m; ++j) r.set(i, j, q.at(i, j));
        sys.push_back(r);
      }
      {
        SymmetricForm r(m + 1);
        for (int i = 0; i <= m; ++i)
          for (int j = i; j <= m; ++j) r.set(i, j, qnext.at(i, j));
        sys.push_back(r);
      }
      OracleOptions oo2 = opt.oracle;
      oo2.collect_points = true;
      CurveCountResult c2;
      try {
        c2 = count_components_curve(sys, oo2);
      } catch (const Error&) {
        continue;
      }
      if (c2.count == harnack_component_count(stage + 1)) {
        res.forms.push_back(qnext);
        st.epsilon = eps;
        st.components = c2.count;
        if (stage + 1 == N) res.final_count = std::move(c2);
        break;
      }
    }
    l1 = l1next;
    l2 = l2next;
    res.stages.push_back(st);
  }
  if (N == 2) {
    // the base conic alone: one component
    SymmetricForm r(3);
    for (int i = 0; i <= 2; ++i)
      for (int j = i; j <= 2; ++j) r.set(i, j, res.forms[0].at(i, j));
    res.final_count = count_components_curve({r}, opt.oracle);
  }
  res.components = N == 2 ? res.final_count.count
                          : (res.stages.empty() ? 0 : res.stages.back().components);
  return res;
}

}  // namespace qnets
