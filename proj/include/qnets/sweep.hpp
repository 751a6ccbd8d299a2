#pragma once

#include <optional>
#include <vector>

#include "qnets/algebraic.hpp"
#include "qnets/bipoly.hpp"
#include "qnets/errors.hpp"
#include "qnets/interval.hpp"
#include "qnets/spectral.hpp"
#include "qnets/ternary.hpp"

namespace qnets {

// One vertical-tangency (fold) or conjugate-pair event of the sweep.
struct SweepEvent {
  enum Kind { merge, birth, complex_pair } kind = complex_pair;
  AlgReal x;          // event abscissa, a root of the squarefree discriminant
  QInterval beta;     // enclosure of the critical ordinate (merge/birth)
  int pair = -1;      // 0-based lower index of the merging/born branch pair
};

// Certified combinatorial description of the curve in one affine chart:
// stations interleave events, every station line meets the curve
// transversally, and each inner slab contains exactly one event.
struct ChartSweep {
  QMat chart;                       // U' = U o chart; sweep runs in (x, y, 1)
  int d = 0;                        // curve degree
  Bipoly F, Fy;                     // chart polynomial and its y-derivative
  std::vector<Rational> stations;   // s_0 < ... < s_k
  std::vector<std::vector<RootInterval>> crossings;  // roots of F(s_i, .)
  std::vector<SweepEvent> events;   // events[i] in (stations[i], stations[i+1])
  std::vector<AlgReal> slopes;      // real points at infinity, by slope
  Upoly inf_poly;                   // b(t) = U'(1, t, 0), squarefree of degree d
};

class SweepBuilder {
 public:
  explicit SweepBuilder(const TernaryForm& u) : u_(u) {}

  // Attempts the deterministic chart list in order; throws GenericityFailure
  // if all charts fail a genericity condition.
  ChartSweep run() const {
    std::string reasons;
    for (const QMat& M : chart_list()) {
      auto cs = try_chart(M);
      if (cs) return std::move(*cs);
      reasons += ".";
    }
    throw GenericityFailure("sweep: all charts rejected (" +
                            std::to_string(reasons.size()) + " tried)");
  }

 private:
  const TernaryForm& u_;

  std::optional<ChartSweep> try_chart(const QMat& M) const {
    TernaryForm v = u_.substituted(M);
    int d = v.degree();
    if (sgn(v.coeff({0, d, 0})) == 0) return std::nullopt;  // (0:1:0) on curve
    Upoly b = detailb(v);
    if (gcd(b, b.derivative()).degree() >= 1) return std::nullopt;  // tangent infinity line
    ChartSweep cs;
    cs.chart = M;
    cs.d = d;
    cs.inf_poly = b;
    cs.F = v.chart_z1();
    cs.Fy = deriv_y(cs.F);
    Upoly D = resultant_y(cs.F, cs.Fy);
    if (D.is_zero()) throw SingularInput("sweep: non-squarefree chart polynomial");
    Upoly D0 = squarefree_part(D);
    auto work = isolate_real_roots(D0);
    // each event needs an open working interval with non-root endpoints:
    // separate the isolating intervals first (which may pin rational roots
    // exactly), then reopen exact roots inside their separation gaps
    shrink_until_separated(D0, work);
    widen_exact_roots(D0, work);
    if (!strictly_separated(work))
      throw Error(ErrorKind::internal, "sweep: separation lost after widening");
    // stations: one before everything, one between consecutive events, one after
    Rational X = cauchy_bound(D0) + 1;
    cs.stations.push_back(-X);
    for (size_t i = 0; i + 1 < work.size(); ++i)
      cs.stations.push_back(between(work[i], work[i + 1]));
    if (!work.empty()) cs.stations.push_back(X);
    // crossings per station
    for (const Rational& s : cs.stations) {
      Upoly fs = eval_x(cs.F, s);
      if (fs.degree() != d)
        throw Error(ErrorKind::internal, "sweep: fiber degree drop");
      cs.crossings.push_back(isolate_real_roots(fs));
    }
    // slopes at infinity
    for (auto& iv : isolate_real_roots(b)) cs.slopes.emplace_back(squarefree_part(b), iv);
    // classify events
    Upoly s10, s11, sres2;
    Bipoly S1 = subresultant_j(cs.F, cs.Fy, 1);
    s11 = S1[1];
    s10 = S1[0];
    Bipoly S2 = d >= 3 ? subresultant_j(cs.F, cs.Fy, 2) : Bipoly();
    for (size_t i = 0; i < work.size(); ++i) {
      AlgReal alpha(D0, work[i]);
      int m_l = int(cs.crossings[i].size());
      int m_r = int(cs.crossings[i + 1].size());
      SweepEvent ev;
      ev.x = alpha;
      int s1sign = alpha.sign_of(s11);
      if (s1sign != 0) {
        if (m_r == m_l - 2)
          ev.kind = SweepEvent::merge;
        else if (m_r == m_l + 2)
          ev.kind = SweepEvent::birth;
        else
          throw Error(ErrorKind::internal, "sweep: fold without +-2 branch change");
        locate_fold(cs.F, D0, work[i], s10, s11, ev);
      } else {
        // gcd degree >= 2 at alpha: admissible only for a conjugate pair
        if (S2.is_zero()) return std::nullopt;
        Upoly disc2 = S2[1] * S2[1] - S2[2] * S2[0] * Rational(4);
        if (alpha.sign_of(disc2) >= 0) return std::nullopt;  // two real folds or worse
        int lvl3 = alpha.sign_of(S2[2]);
        if (lvl3 == 0) return std::nullopt;  // gcd degree >= 3
        if (m_l != m_r)
          throw Error(ErrorKind::internal, "sweep: complex event changes branch count");
        ev.kind = SweepEvent::complex_pair;
      }
      cs.events.push_back(std::move(ev));
    }
    // ends must match the real points at infinity
    size_t q = cs.slopes.size();
    if (cs.crossings.front().size() != q || cs.crossings.back().size() != q)
      throw Error(ErrorKind::internal, "sweep: end count mismatch with infinity");
    return cs;
  }

  static Upoly detailb(const TernaryForm& v) {
    int d = v.degree();
    std::vector<Rational> out(size_t(d + 1), Rational(0));
    for (const auto& [e, c] : v.coeffs())
      if (e[2] == 0) out[e[1]] += c;
    return Upoly(std::move(out));
  }

  static void widen_exact_roots(const Upoly& D0, std::vector<RootInterval>& w) {
    for (size_t i = 0; i < w.size(); ++i) {
      if (!w[i].exact) continue;
      Rational gap = 1;
      if (i > 0) gap = std::min(gap, Rational((w[i].lo - w[i - 1].hi) / 2));
      if (i + 1 < w.size()) gap = std::min(gap, Rational((w[i + 1].lo - w[i].hi) / 2));
      Rational delta = gap / 2;
      while (sgn(eval_at(D0, w[i].lo - delta)) == 0 ||
             sgn(eval_at(D0, w[i].lo + delta)) == 0)
        delta = delta / 2;
      w[i] = {w[i].lo - delta, w[i].lo + delta, false};
    }
  }

  static bool strictly_separated(const std::vector<RootInterval>& w) {
    for (size_t i = 0; i + 1 < w.size(); ++i)
      if (!(w[i].hi < w[i + 1].lo)) return false;
    return true;
  }

  static void shrink_until_separated(const Upoly& D0, std::vector<RootInterval>& w) {
    for (int rounds = 0; rounds < 512 && !strictly_separated(w); ++rounds)
      for (auto& iv : w) refine_interval(D0, iv);
    if (!strictly_separated(w))
      throw Error(ErrorKind::internal, "sweep: cannot separate events");
  }

  static Rational between(const RootInterval& a, const RootInterval& b) {
    return midpoint(a.hi, b.lo);
  }

  // Finds the adjacent branch pair vanishing into (alpha, beta): refines the
  // event interval and a horizontal strip around beta until the strip is
  // certified crossing-free on the interval boundary lines and contains
  // exactly two branches on the surviving side and none on the other.
  static void locate_fold(const Bipoly& F, const Upoly& D0,
                          const RootInterval& work, const Upoly& s10,
                          const Upoly& s11, SweepEvent& ev) {
    bool is_merge = ev.kind == SweepEvent::merge;
    if (work.exact)
      throw Error(ErrorKind::internal, "locate_fold: degenerate working interval");
    Rational lo = work.lo, hi = work.hi;
    std::optional<Rational> exact;  // set once the event abscissa is rational
    auto shrink = [&] {
      if (exact) {
        Rational w = (hi - lo) / 4;
        lo = *exact - w;
        hi = *exact + w;
        return;
      }
      Rational m = midpoint(lo, hi);
      if (sgn(eval_at(D0, m)) == 0) {
        exact = m;
        Rational w = (hi - lo) / 4;
        lo = m - w;
        hi = m + w;
        return;
      }
      if (sgn(eval_at(D0, lo)) * sgn(eval_at(D0, m)) < 0)
        hi = m;
      else
        lo = m;
    };
    for (int guard = 0;; ++guard) {
      if (guard > 4096) throw Error(ErrorKind::internal, "locate_fold: no s11 sign");
      if (eval_on(s11, QInterval(lo, hi)).definite_sign() != 0) break;
      shrink();
    }
    Rational widen = 1;
    for (int guard = 0;; ++guard) {
      if (guard > 4096) throw Error(ErrorKind::internal, "locate_fold: no certificate");
      QInterval I(lo, hi);
      QInterval betaI = -(eval_on(s10, I) / eval_on(s11, I));
      Rational pad = betaI.width() * widen + Rational(1, 1u << 20) * widen;
      Rational ylo = betaI.lo - pad, yhi = betaI.hi + pad;
      Upoly glo = eval_y(F, ylo), ghi = eval_y(F, yhi);
      bool ok = sgn(eval_at(glo, lo)) != 0 && sgn(eval_at(glo, hi)) != 0 &&
                sgn(eval_at(ghi, lo)) != 0 && sgn(eval_at(ghi, hi)) != 0 &&
                count_roots_in(glo, lo, hi) == 0 &&
                count_roots_in(ghi, lo, hi) == 0;
      if (ok) {
        const Rational& side = is_merge ? lo : hi;
        const Rational& other = is_merge ? hi : lo;
        Upoly f_side = eval_x(F, side);
        Upoly f_other = eval_x(F, other);
        int c_side = count_roots_in(f_side, ylo, yhi);
        int c_other = count_roots_in(f_other, ylo, yhi);
        if (c_side == 2 && c_other == 0) {
          Rational lowb = -(cauchy_bound(f_side) + 1);
          ev.pair = count_roots_in(f_side, lowb, ylo);
          ev.beta = QInterval(ylo, yhi);
          // branch indices at the stations equal those at the refined
          // endpoints: no event separates them
          return;
        }
        if (c_side > 2) widen = widen / 2;  // strip too generous around beta
      }
      shrink();
    }
  }
};

}  // namespace qnets
