#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qnets/indexfn.hpp"
#include "qnets/random.hpp"
#include "qnets/spectral.hpp"
#include "qnets/topology.hpp"

using namespace qnets;

namespace {

// N = 1 pencil-plane net: q_x = [[x0, x2], [x2, x1]], spectral conic x0 x1 - x2^2.
Net conic_net() {
  Net net;
  net.N = 1;
  net.r = 2;
  SymmetricForm a(2), b(2), c(2);
  a.set(0, 0, rat(1));
  b.set(1, 1, rat(1));
  c.set(0, 1, rat(1));
  net.members = {a, b, c};
  net.validate();
  return net;
}

// Deterministic small perturbations of a base net until the spectral curve
// certifies nonsingular (and an optional predicate holds).
template <class Pred>
Net perturb_until(const Net& base, Pred&& pred, uint64_t seed = 7) {
  Rng rng(seed);
  for (int t = 0; t < 200; ++t) {
    Net net = base;
    if (t > 0) {
      Rational eps = rat(1, 64);
      for (auto& m : net.members) {
        SymmetricForm d = random_symmetric(rng, m.dim(), 2, 1);
        m = m + d * eps;
      }
    }
    try {
      net.validate();
      TernaryForm u = spectral_form(net);
      if (certify_nonsingular(u) != Verdict::nonsingular) continue;
      if (!pred(net, u)) continue;
      return net;
    } catch (const Error&) {
      continue;
    } catch (const std::invalid_argument&) {
      continue;
    }
  }
  throw std::runtime_error("perturb_until: no admissible net found");
}

Net diag_parity0_net() {
  Net base;
  base.N = 2;
  base.r = 2;
  base.members = {SymmetricForm::diagonal({rat(1), rat(1), rat(-1)}),
                  SymmetricForm::diagonal({rat(1), rat(-1), rat(1)}),
                  SymmetricForm::diagonal({rat(-1), rat(1), rat(1)})};
  return perturb_until(base, [](const Net&, const TernaryForm&) { return true; }, 11);
}

Net block_parity1_net() {
  // x0 (u0^2 - u1^2) + x1 (2 u0 u1) + x2 (u2^2): always signature (1,1) + sign(x2)
  Net base;
  base.N = 2;
  base.r = 2;
  SymmetricForm a(3), b(3), c(3);
  a.set(0, 0, rat(1));
  a.set(1, 1, rat(-1));
  b.set(0, 1, rat(1));
  c.set(2, 2, rat(1));
  base.members = {a, b, c};
  return perturb_until(base, [](const Net&, const TernaryForm&) { return true; }, 23);
}

}  // namespace

TEST_CASE("index map on the conic net: values, axioms, filtration") {
  Net net = conic_net();
  TernaryForm u = spectral_form(net);
  CHECK(u == TernaryForm::monomial({1, 1, 0}, rat(1)) -
                 TernaryForm::monomial({0, 0, 2}, rat(1)));
  REQUIRE(certify_nonsingular(u) == Verdict::nonsingular);
  SphericalArrangement arr = lift_to_sphere(u);
  IndexMap im = index_map(net, arr);
  // q_x definite for x0, x1 > 0 inside the conic: ind 0 and 2 both attained
  CHECK(im.i_min == 0);
  CHECK(im.i_max == 2);
  VerifyReport vr = verify_axioms(im, arr, net);
  CHECK(vr.circles_checked == 2);
  CHECK(vr.regions_checked == 3);
  Filtration f = filtration(im, arr);
  CHECK(f.omega(-1).is_empty);
  CHECK(f.omega(0).b0 == 1);   // one cap of ind 0
  CHECK(f.omega(1).b0 == 1);   // cap + belt glued
  CHECK(f.omega(2).is_sphere);
  CHECK(f.omega(2).b1 == 0);
  E2Table t = e2_table(f, im);
  CHECK(chi_Lplus(t) == 0);  // chi(RP^1 minus the empty set) = 0
  check_deep_nest(im, arr, f);
}

TEST_CASE("adversarial index maps are rejected") {
  Net net = conic_net();
  SphericalArrangement arr = lift_to_sphere(spectral_form(net));
  IndexMap im = index_map(net, arr);
  IndexMap bad = im;
  // bump one region's value by 2: breaks the jump or antipodal law
  bad.region_ind[0] += 2;
  CHECK_THROWS_AS(verify_axioms(bad, arr, net, false), AxiomViolation);
}

TEST_CASE("kronecker dichotomy at the index level (N = 2)") {
  Net p0 = diag_parity0_net();
  SphericalArrangement arr0 = lift_to_sphere(spectral_form(p0));
  IndexMap im0 = index_map(p0, arr0);
  verify_axioms(im0, arr0, p0);
  std::set<int> vals0(im0.region_ind.begin(), im0.region_ind.end());
  CHECK(vals0.count(0) == 1);
  CHECK(vals0.count(1) == 1);
  CHECK(vals0.count(2) == 1);
  CHECK(vals0.count(3) == 1);

  Net p1 = block_parity1_net();
  SphericalArrangement arr1 = lift_to_sphere(spectral_form(p1));
  IndexMap im1 = index_map(p1, arr1);
  verify_axioms(im1, arr1, p1);
  std::set<int> vals1(im1.region_ind.begin(), im1.region_ind.end());
  CHECK(vals1 == std::set<int>{1, 2});

  PredictionReport r0 = predict_b0(im0, arr0, arr0.topo);
  CHECK(r0.b0_lower == 0);
  CHECK(r0.b0_upper == 0);  // definite member short-circuit
  PredictionReport r1 = predict_b0(im1, arr1, arr1.topo);
  CHECK(r1.b0_upper == 0);  // N = 2: regular implies empty
}

TEST_CASE("empty spectral real curve: constant middle index (N = 3)") {
  // quaternion multiplication net: det Q_x = (x0^2+x1^2+x2^2)^2 > 0; the
  // double conic is singular over C, so perturb until smooth while the real
  // part stays empty.
  Net base;
  base.N = 3;
  base.r = 2;
  SymmetricForm a(4), b(4), c(4);
  a.set(0, 0, rat(1));
  a.set(1, 1, rat(-1));
  a.set(2, 2, rat(-1));
  a.set(3, 3, rat(1));
  b.set(0, 1, rat(1));
  b.set(2, 3, rat(1));
  c.set(0, 2, rat(1));
  c.set(1, 3, rat(-1));
  base.members = {a, b, c};
  Net net = perturb_until(
      base,
      [](const Net&, const TernaryForm& u) {
        SphericalArrangement arr = ArrangementBuilder(u).build();
        return arr.circles.empty();
      },
      5);
  SphericalArrangement arr = lift_to_sphere(spectral_form(net));
  CHECK(arr.circles.empty());
  CHECK(arr.regions.size() == 1);
  IndexMap im = index_map(net, arr);
  CHECK(im.i_min == 2);
  CHECK(im.i_max == 2);  // constant (N+1)/2
  verify_axioms(im, arr, net);
  PredictionReport rep = predict_b0(im, arr, arr.topo);
  CHECK(rep.case_tag == "imax_Nminus1");  // i_max = 2 = N-1
  CHECK(rep.b0_upper == 0);  // Omega_{N-2} is empty
}

TEST_CASE("definite member net (N = 3): prediction short-circuit and chi") {
  Net base;
  base.N = 3;
  base.r = 2;
  Rng rng(99);
  base.members = {SymmetricForm::diagonal({rat(1), rat(1), rat(1), rat(1)}),
                  random_symmetric(rng, 4, 2, 1), random_symmetric(rng, 4, 2, 1)};
  Net net = perturb_until(base, [](const Net& n, const TernaryForm&) {
    return inertia(n.members[0]).negative == 0 && inertia(n.members[0]).zero == 0;
  }, 31);
  SphericalArrangement arr = lift_to_sphere(spectral_form(net));
  IndexMap im = index_map(net, arr);
  verify_axioms(im, arr, net);
  CHECK(im.i_min == 0);
  CHECK(im.i_max == 4);
  PredictionReport rep = predict_b0(im, arr, arr.topo);
  CHECK(rep.b0_upper == 0);
  Filtration f = filtration(im, arr);
  E2Table t = e2_table(f, im);
  CHECK(chi_Lplus(t) == 0);  // chi(RP^3 \ empty set) = 0
}

TEST_CASE("random N=3 nets: axioms and e2 patterns hold") {
  Rng rng(2718);
  int done = 0;
  for (int t = 0; t < 20 && done < 5; ++t) {
    Net net = random_net(rng, 3);
    TernaryForm u;
    try {
      u = spectral_form(net);
    } catch (const Error&) {
      continue;
    }
    if (certify_nonsingular(u) != Verdict::nonsingular) continue;
    SphericalArrangement arr = ArrangementBuilder(u).build();
    IndexMap im = index_map(net, arr);
    verify_axioms(im, arr, net);
    Filtration f = filtration(im, arr);
    e2_table(f, im);  // throws on pattern violation
    check_deep_nest(im, arr, f);
    ++done;
  }
  CHECK(done >= 3);
}

TEST_CASE("index orientation structure") {
  // use a net with at least one oval in the spectral curve
  Rng rng(515);
  for (int t = 0; t < 30; ++t) {
    Net net = random_net(rng, 3);
    TernaryForm u;
    try {
      u = spectral_form(net);
    } catch (const Error&) {
      continue;
    }
    if (certify_nonsingular(u) != Verdict::nonsingular) continue;
    SphericalArrangement arr = ArrangementBuilder(u).build();
    if (arr.topo.ovals.empty()) continue;
    IndexMap im = index_map(net, arr);
    IndexOrientation io = index_orientation(im, arr);
    CHECK(io.inward_up.size() == 2 * arr.topo.ovals.size());
    CHECK(io.inward_canon.size() == arr.topo.ovals.size());
    return;
  }
  WARN("no oval-bearing net found in the budget");
}
