#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qnets/algebraic.hpp"
#include "qnets/bipoly.hpp"
#include "qnets/interval.hpp"
#include "qnets/linalg.hpp"
#include "qnets/poly.hpp"
#include "qnets/random.hpp"

using namespace qnets;

TEST_CASE("rational parse/format round-trip") {
  CHECK(to_string(parse_rational("3/6")) == "1/2");
  CHECK(to_string(parse_rational("-14/7")) == "-2");
  CHECK(to_string(parse_rational("0")) == "0");
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("x"));
}

TEST_CASE("poly arithmetic and division") {
  Upoly p = upoly({-1, 0, 1});       // x^2 - 1
  Upoly q = upoly({1, 1});           // x + 1
  auto [quo, rem] = divmod(p, q);
  CHECK(quo == upoly({-1, 1}));
  CHECK(rem.is_zero());
  CHECK(p / q == upoly({-1, 1}));
  CHECK((q * q).degree() == 2);
  CHECK(eval_at(p, rat(3)) == rat(8));
  CHECK(p.derivative() == upoly({0, 2}));
}

TEST_CASE("gcd and squarefree part") {
  Upoly a = upoly({1, 1}) * upoly({1, 1}) * upoly({-2, 1});  // (x+1)^2 (x-2)
  Upoly b = upoly({1, 1}) * upoly({3, 1});
  Upoly g = gcd(a, b);
  CHECK(g == upoly({1, 1}));
  Upoly sf = squarefree_part(a);
  CHECK(sf.degree() == 2);
  CHECK(sgn(eval_at(sf, rat(-1))) == 0);
  CHECK(sgn(eval_at(sf, rat(2))) == 0);
}

TEST_CASE("sturm root counting and isolation") {
  // (x-1)(x-2)(x-3)(x+5)
  Upoly p = upoly({-1, 1}) * upoly({-2, 1}) * upoly({-3, 1}) * upoly({5, 1});
  auto roots = isolate_real_roots(p);
  REQUIRE(roots.size() == 4);
  Upoly sf = squarefree_part(p);
  std::vector<double> approx;
  for (auto& r : roots) {
    while (!r.exact && r.hi - r.lo > rat(1, 1000000)) refine_interval(sf, r);
    approx.push_back(r.approx());
  }
  CHECK(approx[0] == doctest::Approx(-5).epsilon(1e-6));
  CHECK(approx[3] == doctest::Approx(3).epsilon(1e-6));
  CHECK(count_roots_in(p, rat(0), rat(5, 2)) == 2);

  // no real roots
  CHECK(isolate_real_roots(upoly({1, 0, 1})).empty());

  // rational root hit exactly by bisection midpoints
  Upoly q = upoly({0, 1}) * upoly({-1, 2});  // x(2x-1)
  auto r2 = isolate_real_roots(q);
  REQUIRE(r2.size() == 2);
}

TEST_CASE("isolation refines and separates close roots") {
  // roots at 1/100 and 1/101
  Upoly p = upoly({-1, 100}) * upoly({-1, 101});
  auto roots = isolate_real_roots(p);
  REQUIRE(roots.size() == 2);
  for (auto& r : roots) {
    if (!r.exact) {
      CHECK(sgn(eval_at(p, r.lo)) * sgn(eval_at(p, r.hi)) < 0);
    }
  }
}

TEST_CASE("algebraic sign evaluation") {
  // alpha = sqrt(2) as root of x^2 - 2 in (1, 2)
  Upoly f = upoly({-2, 0, 1});
  AlgReal alpha(f, {rat(1), rat(2), false});
  CHECK(alpha.sign_of(upoly({0, 1})) == 1);           // alpha > 0
  CHECK(alpha.sign_of(upoly({-2, 0, 1})) == 0);       // f(alpha) = 0
  CHECK(alpha.sign_of(upoly({-3, 0, 1})) == -1);      // alpha^2 < 3
  CHECK(alpha.sign_of(upoly({-1, 0, 1})) == 1);       // alpha^2 > 1
  CHECK(alpha.compare(rat(3, 2)) == -1);
  CHECK(alpha.compare(rat(7, 5)) == 1);
}

TEST_CASE("algebraic comparison incl equality through gcd") {
  Upoly f = upoly({-2, 0, 1});              // x^2-2
  Upoly g = upoly({-2, 0, 1}) * upoly({-5, 1});  // same root + x=5
  AlgReal a(f, {rat(1), rat(2), false});
  AlgReal b(squarefree_part(g), {rat(0), rat(3, 2), false});
  CHECK(compare(a, b) == 0);
  AlgReal c(squarefree_part(g), {rat(4), rat(6), false});
  CHECK(compare(a, c) == -1);
  CHECK(compare(c, a) == 1);
}

TEST_CASE("interval arithmetic") {
  QInterval a(rat(-1), rat(2)), b(rat(3), rat(4));
  CHECK((a * b).lo == rat(-4));
  CHECK((a * b).hi == rat(8));
  CHECK((a + b).contains(rat(5)));
  CHECK_THROWS((b / a));
  CHECK((a / b).contains(rat(0)));
  Upoly p = upoly({1, 1});
  CHECK(eval_on(p, a).lo == rat(0));
  CHECK(eval_on(p, a).hi == rat(3));
}

TEST_CASE("linear algebra: det, rank, solve") {
  QMat m(3, 3);
  long vals[3][3] = {{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.at(i, j) = vals[i][j];
  CHECK(det(m) == rat(18));
  CHECK(rank(m) == 3);
  LinearSolve s = solve(m, {rat(1), rat(0), rat(0)});
  REQUIRE(s.consistent);
  CHECK(s.kernel_dim == 0);
  // verify A x = b
  CHECK(m.at(0, 0) * s.x[0] + m.at(0, 1) * s.x[1] + m.at(0, 2) * s.x[2] == rat(1));

  QMat sing(2, 2);
  sing.at(0, 0) = 1;
  sing.at(0, 1) = 2;
  sing.at(1, 0) = 2;
  sing.at(1, 1) = 4;
  CHECK(det(sing) == rat(0));
  CHECK(rank(sing) == 1);
  CHECK_FALSE(solve(sing, {rat(1), rat(0)}).consistent);
  LinearSolve u = solve(sing, {rat(1), rat(2)});
  CHECK(u.consistent);
  CHECK(u.kernel_dim == 1);
}

TEST_CASE("bivariate: evaluation, gcd, resultant vs direct elimination") {
  // F = y^2 - x, G = y - x  => Res_y = x^2 - x
  Bipoly F(std::vector<Upoly>{upoly({0, -1}), Upoly(), upoly({1})});
  Bipoly G(std::vector<Upoly>{upoly({0, -1}), upoly({1})});
  Upoly r = resultant_y(F, G);
  Upoly expect = upoly({0, -1, 1});
  // resultant defined up to the determinant sign convention; compare exactly
  CHECK((r == expect || r == -expect));

  CHECK(eval_xy(F, rat(4), rat(2)) == rat(0));
  CHECK(eval_x(F, rat(4)) == upoly({-4, 0, 1}));

  Bipoly common(std::vector<Upoly>{upoly({0, 1}), upoly({1})});  // y + x
  Bipoly A = F * common, B = G * common;
  Bipoly g = bgcd(A, B);
  CHECK(g.degree() == 1);
  // gcd should be a unit multiple of y + x
  CHECK(resultant_y(g, common).is_zero());
}

TEST_CASE("subresultants against brute-force properties") {
  Rng rng(42);
  for (int trial = 0; trial < 6; ++trial) {
    // random F of y-degree 4, G = dF/dy, with a forced common factor half the time
    std::vector<Upoly> cs;
    for (int i = 0; i <= 4; ++i) {
      std::vector<Rational> c;
      for (int j = 0; j <= 2; ++j) c.push_back(rng.rational(4, 1));
      cs.push_back(Upoly(std::move(c)));
    }
    cs[4] = upoly({1});  // constant leading coefficient
    Bipoly F(cs);
    Bipoly Fy = deriv_y(F);
    if (Fy.is_zero()) continue;
    Upoly res = resultant_y(F, Fy);
    // At a random rational x0 with lc != 0: res(x0) == 0 iff gcd nontrivial
    for (long x0 : {0L, 1L, -2L}) {
      Upoly f0 = eval_x(F, rat(x0));
      Upoly g0 = eval_x(Fy, rat(x0));
      bool has_common = gcd(f0, g0).degree() >= 1;
      CHECK((sgn(eval_at(res, rat(x0))) == 0) == has_common);
    }
    // principal subresultant 1 at a point where gcd has degree 1
    Upoly s1 = principal_subres(F, Fy, 1);
    CHECK(s1.degree() >= 0);
  }
}

TEST_CASE("subresultant S1 locates the double root") {
  // F(x, y) = (y - x)^2 (y + 1) has, at each x0 != -1, gcd (y - x0)
  Bipoly ymx(std::vector<Upoly>{upoly({0, -1}), upoly({1})});
  Bipoly yp1(std::vector<Upoly>{upoly({1}), upoly({1})});
  Bipoly F = ymx * ymx * yp1;
  Bipoly Fy = deriv_y(F);
  Bipoly S1 = subresultant_j(F, Fy, 1);
  REQUIRE(S1.degree() == 1);
  // root of S1 in y at x0: -s10(x0)/s11(x0) should equal x0
  for (long x0 : {0L, 2L, 5L, -3L}) {
    Rational beta = -eval_at(S1[0], rat(x0)) / eval_at(S1[1], rat(x0));
    CHECK(beta == rat(x0));
  }
}

TEST_CASE("interpolation") {
  std::vector<Rational> xs{rat(0), rat(1), rat(2), rat(-1)};
  Upoly p = upoly({1, -2, 0, 3});
  std::vector<Rational> ys;
  for (auto& x : xs) ys.push_back(eval_at(p, x));
  CHECK(interpolate(xs, ys) == p);
}

TEST_CASE("det_expansion matches gaussian det") {
  Rng rng(7);
  for (int t = 0; t < 5; ++t) {
    int n = 4;
    QMat m(n, n);
    std::vector<std::vector<Upoly>> mm(n, std::vector<Upoly>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Rational v = rng.rational(5, 2);
        m.at(i, j) = v;
        mm[i][j] = Upoly(v);
      }
    Upoly d = det_expansion(mm);
    CHECK(eval_at(d, rat(0)) == det(m));
  }
}
