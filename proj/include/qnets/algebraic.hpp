#pragma once

#include <utility>

#include "qnets/interval.hpp"
#include "qnets/poly.hpp"
#include "qnets/rational.hpp"

namespace qnets {

// A real algebraic number: one real root of a squarefree defining polynomial,
// pinned by an isolating interval. All exact sign decisions at such points
// funnel through sign_at below.
class AlgReal {
 public:
  AlgReal() : poly_(upoly({0, 1})), iv_{Rational(0), Rational(0), true} {}
  AlgReal(Rational r)
      : poly_(Upoly(std::vector<Rational>{-r, Rational(1)})),
        iv_{r, r, true} {}
  AlgReal(Upoly sqfree, RootInterval iv)
      : poly_(std::move(sqfree)), iv_(std::move(iv)) {}

  bool is_rational() const { return iv_.exact; }
  const Rational& rational_value() const { return iv_.lo; }
  const Upoly& defining_poly() const { return poly_; }
  const RootInterval& interval() const { return iv_; }
  QInterval enclosure() const { return {iv_.lo, iv_.hi}; }
  double approx() const { return iv_.approx(); }

  void refine() { refine_interval(poly_, iv_); }
  void refine_below_width(const Rational& w) {
    while (!iv_.exact && iv_.hi - iv_.lo > w) refine();
  }

  // Exact sign of g at this number.
  int sign_of(const Upoly& g) const {
    if (g.is_zero()) return 0;
    if (iv_.exact) return sgn(eval_at(g, iv_.lo));
    Upoly h = gcd(poly_, g);
    if (h.degree() >= 1 && count_roots_in(h, iv_.lo, iv_.hi) > 0) return 0;
    // g(alpha) != 0: refine until g is root-free with a fixed sign on the box
    RootInterval iv = iv_;
    Upoly gs = squarefree_part(g);
    for (;;) {
      int sl = sgn(eval_at(g, iv.lo)), sh = sgn(eval_at(g, iv.hi));
      if (sl != 0 && sl == sh &&
          SturmChain(gs).count_roots(iv.lo, iv.hi) == 0)
        return sl;
      refine_interval(poly_, iv);
      if (iv.exact) return sgn(eval_at(g, iv.lo));
    }
  }

  int sign() const {  // sign of the number itself
    return sign_of(upoly({0, 1}));
  }

  int compare(const Rational& r) const {
    if (iv_.exact) return sgn(iv_.lo - r);
    if (iv_.hi <= r) return -1;  // the root is interior to the open interval
    if (iv_.lo >= r) return 1;
    if (sgn(eval_at(poly_, r)) == 0) return 0;
    RootInterval iv = iv_;
    while (!iv.exact && iv.lo < r && r < iv.hi) refine_interval(poly_, iv);
    if (iv.exact) return sgn(iv.lo - r);
    return iv.lo >= r ? 1 : -1;
  }

  friend int compare(const AlgReal& a, const AlgReal& b) {
    if (a.iv_.exact) return -b.compare(a.iv_.lo);
    if (b.iv_.exact) return a.compare(b.iv_.lo);
    // equality test: a == b iff the gcd of the defining polynomials has a
    // root in the overlap of the isolating intervals. Overlap endpoints are
    // endpoints of one of the intervals, hence never roots of the gcd.
    Rational lo = std::max(a.iv_.lo, b.iv_.lo);
    Rational hi = std::min(a.iv_.hi, b.iv_.hi);
    if (lo < hi) {
      Upoly h = gcd(a.poly_, b.poly_);
      if (h.degree() >= 1 && SturmChain(h).count_roots(lo, hi) > 0) return 0;
    }
    AlgReal ar = a, br = b;
    while (true) {
      if (ar.iv_.hi <= br.iv_.lo) return -1;
      if (br.iv_.hi <= ar.iv_.lo) return 1;
      ar.refine();
      br.refine();
      if (ar.iv_.exact) return -br.compare(ar.iv_.lo);
      if (br.iv_.exact) return ar.compare(br.iv_.lo);
    }
  }

 private:
  Upoly poly_;
  RootInterval iv_;
};

}  // namespace qnets
