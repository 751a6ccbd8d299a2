#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qnets/dixon.hpp"
#include "qnets/random.hpp"

using namespace qnets;

namespace {

Net diag_net3() {
  Net net;
  net.N = 2;
  net.r = 2;
  for (int i = 0; i < 3; ++i) {
    SymmetricForm f(3);
    f.set(i, i, rat(1));
    net.members.push_back(f);
  }
  return net;
}

Net random_regular_net(Rng& rng, int N) {
  for (;;) {
    Net net = random_net(rng, N);
    try {
      TernaryForm u = spectral_form(net);
      if (certify_nonsingular(u) == Verdict::nonsingular) return net;
    } catch (const Error&) {
    }
  }
}

}  // namespace

TEST_CASE("diagonal net: adjugate row and singular rejection") {
  Net net = diag_net3();
  TernaryForm u = spectral_form(net);
  SectionRow row = adjugate_row(net, u);
  CHECK(row.v[0] == TernaryForm::monomial({0, 1, 1}, rat(1)));
  CHECK(row.v[1].is_zero());
  CHECK(row.v[2].is_zero());
  CHECK_THROWS_AS(verify_roundtrip(net), SingularInput);
}

TEST_CASE("adjugate row matches the symbolic cofactor oracle (d = 3)") {
  Rng rng(101);
  Net net = random_regular_net(rng, 2);
  TernaryForm u = spectral_form(net);
  SectionRow row = adjugate_row(net, u);
  REQUIRE(row.retries == 0);
  // symbolic oracle: minors of the linear-form matrix
  std::vector<std::vector<TernaryForm>> q(3, std::vector<TernaryForm>(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      q[i][j] = TernaryForm::linear(net.members[0].at(i, j), net.members[1].at(i, j),
                                    net.members[2].at(i, j));
  for (int col = 0; col < 3; ++col) {
    std::vector<std::vector<TernaryForm>> m(2, std::vector<TernaryForm>(2));
    for (int r = 0, mr = 0; r < 3; ++r) {
      if (r == col) continue;
      for (int c = 0, mc = 0; c < 3; ++c) {
        if (c == 0) continue;
        m[mr][mc++] = q[r][c];
      }
      ++mr;
    }
    TernaryForm minor = det_expansion(m);
    if (col % 2 == 1) minor = -minor;
    CHECK(row.v[col] == minor);
  }
  // adjugate identity Q adj(Q) = U Id at random rational points
  for (int t = 0; t < 20; ++t) {
    std::array<Rational, 3> x{rng.rational(), rng.rational(), rng.rational()};
    if (sgn(x[0]) == 0 && sgn(x[1]) == 0 && sgn(x[2]) == 0) continue;
    QMat Q = evaluate(net, {x[0], x[1], x[2]}).matrix();
    Rational uval = u.eval(x);
    // first column of adj from the row (adj is symmetric)
    std::vector<Rational> adjcol{row.v[0].eval(x), row.v[1].eval(x),
                                 row.v[2].eval(x)};
    for (int i = 0; i < 3; ++i) {
      Rational acc = 0;
      for (int k = 0; k < 3; ++k) acc += Q.at(i, k) * adjcol[k];
      CHECK(acc == (i == 0 ? uval : Rational(0)));
    }
  }
}

TEST_CASE("dixon roundtrip d = 3: exact identities, det beta = c U") {
  Rng rng(333);
  for (int t = 0; t < 3; ++t) {
    Net net = random_regular_net(rng, 2);
    RoundtripReport rep = verify_roundtrip(net);
    CHECK(rep.identities_ok);
    CHECK(rep.beta_matches_net);
    CHECK(sgn(rep.c) != 0);
    CHECK(rep.c == rat(1));  // adjugate normalization reproduces Q itself
  }
}

TEST_CASE("dixon roundtrip d = 4") {
  Rng rng(77);
  Net net = random_regular_net(rng, 3);
  RoundtripReport rep = verify_roundtrip(net);
  CHECK(rep.identities_ok);
  CHECK(rep.beta_matches_net);
  CHECK(rep.c == rat(1));
}

TEST_CASE("synthetic row violating the mod-U condition is rejected") {
  // U: Fermat cubic, v11 = x^2 coprime with U
  TernaryForm u;
  u.add_term({3, 0, 0}, rat(1));
  u.add_term({0, 3, 0}, rat(1));
  u.add_term({0, 0, 3}, rat(1));
  SectionRow row;
  row.basis_change = QMat::identity(3);
  row.v = {TernaryForm::monomial({2, 0, 0}, rat(1)),
           TernaryForm::monomial({0, 2, 0}, rat(1)),
           TernaryForm::monomial({1, 0, 1}, rat(1))};
  CHECK_THROWS_AS(complete_v_matrix(row, u), NoSolution);
}

TEST_CASE("perturbed v-matrix fails the divisibility assertion") {
  Rng rng(1234);
  Net net = random_regular_net(rng, 2);
  TernaryForm u0 = spectral_form(net);
  SectionRow row = adjugate_row(net, u0);
  Net work = net;
  for (auto& m : work.members) m = m.congruent(row.basis_change);
  TernaryForm u = spectral_form(work);
  VMatrix vm = complete_v_matrix(row, u);
  vm.v[1][1] = vm.v[1][1] + TernaryForm::monomial({0, 2, 0}, rat(1));
  CHECK_THROWS_AS(dixon_matrix(vm, u), Error);
}
