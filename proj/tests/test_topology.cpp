#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qnets/random.hpp"
#include "qnets/spectral.hpp"
#include "qnets/topology.hpp"

using namespace qnets;

namespace {

TernaryForm from_affine(std::initializer_list<std::tuple<int, int, long, long>> terms,
                        int d) {
  // terms: (a, b, num, den) for x^a y^b, homogenized by z to degree d
  TernaryForm f;
  for (auto& [a, b, n, den] : terms) f.add_term({a, b, d - a - b}, rat(n, den));
  return f;
}

TernaryForm unit_conic() {  // x^2 + y^2 - z^2
  return from_affine({{2, 0, 1, 1}, {0, 2, 1, 1}, {0, 0, -1, 1}}, 2);
}

// (x^2+2y^2-1)(2x^2+y^2-3) + 1/100: two nested ovals. (The classical
// concentric-circles picture is realized with ellipses of different axes so
// the curve stays nonsingular at the complex points of the infinity line.)
TernaryForm nested_ellipses() {
  TernaryForm a = from_affine({{2, 0, 1, 1}, {0, 2, 2, 1}, {0, 0, -1, 1}}, 2);
  TernaryForm b = from_affine({{2, 0, 2, 1}, {0, 2, 1, 1}, {0, 0, -3, 1}}, 2);
  TernaryForm c;
  c.add_term({0, 0, 4}, rat(1, 100));
  return a * b + c;
}

TernaryForm pseudoline_cubic() {  // y^2 z = x^3 - x z^2 + 2 z^3, one branch
  TernaryForm f;
  f.add_term({0, 2, 1}, rat(1));
  f.add_term({3, 0, 0}, rat(-1));
  f.add_term({1, 0, 2}, rat(1));
  f.add_term({0, 0, 3}, rat(-2));
  return f;
}

}  // namespace

TEST_CASE("conic: topology and arrangement") {
  TernaryForm u = unit_conic();
  REQUIRE(certify_nonsingular(u) == Verdict::nonsingular);
  SphericalArrangement arr = lift_to_sphere(u);
  CHECK(arr.topo.ovals.size() == 1);
  CHECK(arr.topo.ovals[0].depth == 1);
  CHECK_FALSE(arr.topo.has_one_sided);
  CHECK(arr.circles.size() == 2);
  CHECK(arr.regions.size() == 3);
  CHECK(arr.euler_characteristic() == 2);
  CHECK(arr.tropical_regions.size() == 1);
  // the tropical belt is involution-invariant; caps are swapped
  int belt = arr.tropical_regions[0];
  CHECK(arr.regions[belt].involution == belt);
  for (auto& r : arr.regions)
    if (r.id != belt) CHECK(arr.regions[r.involution].id != r.id);
  // each lift circle is adjacent to its cap and the belt
  for (auto& c : arr.circles) {
    CHECK_FALSE(c.one_sided);
    CHECK(c.involution != c.id);
  }
  NestSummary ns = nest_queries(arr.topo);
  CHECK(ns.d_max == 1);
  CHECK(ns.beta == 0);
  CHECK(check_bezout(arr.topo));
}

TEST_CASE("nested circles quartic") {
  TernaryForm u = nested_ellipses();
  REQUIRE(certify_nonsingular(u) == Verdict::nonsingular);
  SphericalArrangement arr = lift_to_sphere(u);
  REQUIRE(arr.topo.ovals.size() == 2);
  NestSummary ns = nest_queries(arr.topo);
  CHECK(ns.d_max == 2);
  CHECK(ns.max_nest_depth == 2);
  CHECK(ns.count_at_depth[1] == 1);
  CHECK(ns.count_at_depth[2] == 1);
  CHECK(ns.beta == 1);  // submaximal depth = 1: the outer oval only
  CHECK(arr.circles.size() == 4);
  CHECK(arr.regions.size() == 5);
  CHECK(arr.euler_characteristic() == 2);
  CHECK(arr.tropical_regions.size() == 1);
  CHECK(check_bezout(arr.topo));
  // maximal nest: passes clause 2 (no other ovals)
  // upstairs: involution maps the forest strictly
  for (auto& [id, o] : arr.up_ovals) {
    CHECK(arr.up_ovals.at(o.partner).partner == id);
    CHECK(arr.up_ovals.at(o.partner).depth == o.depth);
  }
}

TEST_CASE("cubic with only the pseudoline") {
  TernaryForm u = pseudoline_cubic();
  REQUIRE(certify_nonsingular(u) == Verdict::nonsingular);
  SphericalArrangement arr = lift_to_sphere(u);
  CHECK(arr.topo.has_one_sided);
  CHECK(arr.topo.ovals.empty());
  CHECK(arr.equator_circle >= 0);
  CHECK(arr.circles.size() == 1);
  CHECK(arr.regions.size() == 2);
  CHECK(arr.tropical_regions.size() == 2);  // two antipodal tropical regions
  CHECK(arr.euler_characteristic() == 2);
  int r0 = arr.tropical_regions[0], r1 = arr.tropical_regions[1];
  CHECK(arr.regions[r0].involution == r1);
}

TEST_CASE("empty real curve") {
  // x^4 + y^4 + z^4 has no real points
  TernaryForm u;
  u.add_term({4, 0, 0}, rat(1));
  u.add_term({0, 4, 0}, rat(1));
  u.add_term({0, 0, 4}, rat(1));
  REQUIRE(certify_nonsingular(u) == Verdict::nonsingular);
  SphericalArrangement arr = lift_to_sphere(u);
  CHECK(arr.circles.empty());
  CHECK(arr.regions.size() == 1);
  CHECK(arr.euler_characteristic() == 2);
  CHECK(arr.topo.ovals.empty());
  CHECK(arr.tropical_regions.size() == 1);
}

TEST_CASE("one-sided plus oval cubic") {
  // y^2 = x^3 - x  <->  y^2 z - x^3 + x z^2: oval + pseudoline
  TernaryForm u;
  u.add_term({0, 2, 1}, rat(1));
  u.add_term({3, 0, 0}, rat(-1));
  u.add_term({1, 0, 2}, rat(1));
  REQUIRE(certify_nonsingular(u) == Verdict::nonsingular);
  SphericalArrangement arr = lift_to_sphere(u);
  CHECK(arr.topo.has_one_sided);
  CHECK(arr.topo.ovals.size() == 1);
  CHECK(arr.circles.size() == 3);  // equator + two oval lifts
  CHECK(arr.regions.size() == 4);
  CHECK(arr.euler_characteristic() == 2);
  CHECK(arr.tropical_regions.size() == 2);
  CHECK(check_bezout(arr.topo));
  // Harnack bound: ovals + one-sided <= g + 1 = 2
  CHECK(int(arr.topo.ovals.size()) + 1 <= 2);
}

TEST_CASE("two disjoint ovals (quartic)") {
  // (x^2+2y^2-1)(2(x-4)^2+y^2-1) + 1/1000: disjoint ellipse neighborhoods
  TernaryForm a = from_affine({{2, 0, 1, 1}, {0, 2, 2, 1}, {0, 0, -1, 1}}, 2);
  TernaryForm b = from_affine(
      {{2, 0, 2, 1}, {1, 0, -16, 1}, {0, 0, 31, 1}, {0, 2, 1, 1}}, 2);
  TernaryForm z4;
  z4.add_term({0, 0, 4}, rat(1, 1000));
  TernaryForm u = a * b + z4;
  REQUIRE(certify_nonsingular(u) == Verdict::nonsingular);
  CurveTopology topo = curve_topology(u);
  CHECK(topo.ovals.size() == 2);
  CHECK(topo.count_depth(1) == 2);
  CHECK(topo.count_depth(2) == 0);
  NestSummary ns = nest_queries(topo);
  CHECK(ns.beta == 2);  // d=4: submaximal depth 1, both ovals
  CHECK(ns.count_at_depth[1] == 2);
}

TEST_CASE("chart independence of the forest") {
  TernaryForm u = nested_ellipses();
  SphericalArrangement a1 = lift_to_sphere(u);
  // run in a different chart: transform the curve by a fixed projective map
  QMat M(3, 3);
  long m[3][3] = {{1, 1, 0}, {0, 1, 1}, {1, 0, 2}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) M.at(i, j) = m[i][j];
  REQUIRE(sgn(det(M)) != 0);
  TernaryForm v = u.substituted(M);
  SphericalArrangement a2 = lift_to_sphere(v);
  CHECK(a1.topo.canonical() == a2.topo.canonical());
  CHECK(a1.regions.size() == a2.regions.size());
  CHECK(a1.circles.size() == a2.circles.size());
}

TEST_CASE("bezout fixtures: adversarial forests rejected") {
  // synthetic: d=4 with a maximal nest (depth 2) plus an extra oval
  CurveTopology bad;
  bad.d = 4;
  bad.ovals.push_back({0, -1, 1, -1, -1});
  bad.ovals.push_back({1, 0, 2, -1, -1});
  bad.ovals.push_back({2, -1, 1, -1, -1});  // the illegal extra oval
  std::string why;
  CHECK_FALSE(check_bezout(bad, &why));

  // synthetic: d=6 submaximal nest with a non-empty oval outside the chain
  CurveTopology bad2;
  bad2.d = 6;
  bad2.ovals.push_back({0, -1, 1, -1, -1});  // o1
  bad2.ovals.push_back({1, 0, 2, -1, -1});   // o2 (deepest, depth 2 = dmax-1)
  bad2.ovals.push_back({2, -1, 1, -1, -1});  // extra depth-1
  bad2.ovals.push_back({3, 2, 2, -1, -1});   // nested inside the extra: non-empty
  CHECK_FALSE(check_bezout(bad2, &why));

  // depth overflow
  CurveTopology bad3;
  bad3.d = 2;
  bad3.ovals.push_back({0, -1, 1, -1, -1});
  bad3.ovals.push_back({1, 0, 2, -1, -1});
  CHECK_FALSE(check_bezout(bad3, &why));
}

TEST_CASE("random nets: spectral curve topology sanity") {
  Rng rng(417);
  int done = 0;
  for (int t = 0; t < 12 && done < 4; ++t) {
    Net net = random_net(rng, 3);
    TernaryForm u = spectral_form(net);
    if (certify_nonsingular(u) != Verdict::nonsingular) continue;
    SphericalArrangement arr = lift_to_sphere(u);
    ++done;
    CHECK(arr.euler_characteristic() == 2);
    int g = (arr.d - 1) * (arr.d - 2) / 2;
    CHECK(int(arr.topo.ovals.size()) + (arr.topo.has_one_sided ? 1 : 0) <= g + 1);
    CHECK(check_bezout(arr.topo));
    // circle samples really lie on the curve: corank at the sample must be 1
    for (auto& c : arr.circles) {
      CHECK(c.n_vertices >= 1);
      CHECK(c.n_vertices == c.n_edges);
    }
  }
  CHECK(done >= 1);
}
