#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "qnets/algebraic.hpp"
#include "qnets/forms.hpp"
#include "qnets/topology.hpp"

namespace qnets {

// ind: S^2 -> Z, the negative inertia index of q_x per region, with the
// derived per-oval inner indices.
struct IndexMap {
  int N = 0;
  std::vector<int> region_ind;      // by region id
  std::map<int, int> inner_index;   // upstairs oval circle id -> i(o)
  int i_max = 0, i_min = 0;

  int ind(int region) const { return region_ind[region]; }
  int arc_value(const SphericalArrangement& arr, int circle) const {
    return std::min(region_ind[arr.circles[circle].region_below],
                    region_ind[arr.circles[circle].region_above]);
  }
};

inline IndexMap index_map(const Net& net, const SphericalArrangement& arr) {
  IndexMap im;
  im.N = net.N;
  im.region_ind.resize(arr.regions.size());
  bool first = true;
  for (const auto& r : arr.regions) {
    Inertia it = inertia(evaluate(net, r.sample));
    if (it.zero != 0)
      throw SampleOnCurve("index_map: region sample lies on the spectral curve");
    im.region_ind[r.id] = it.negative;
    if (first || it.negative > im.i_max) im.i_max = it.negative;
    if (first || it.negative < im.i_min) im.i_min = it.negative;
    first = false;
  }
  for (const auto& [cid, o] : arr.up_ovals)
    im.inner_index[cid] = im.region_ind[o.inner_region];
  return im;
}

namespace detail {

// Rational-function arithmetic over Q[y] reduced modulo the defining
// polynomial of the evaluation point; signs are decided exactly at alpha.
struct AlgFrac {
  Upoly num, den;
};

inline AlgFrac reduce(const Upoly& modf, Upoly n, Upoly d) {
  if (modf.degree() >= 1) {
    n = divmod(n, modf).second;
    d = divmod(d, modf).second;
  }
  return {std::move(n), std::move(d)};
}

// Exact inertia of a symmetric matrix whose entries are polynomials in y,
// evaluated at the algebraic number alpha.
inline Inertia inertia_at(std::vector<std::vector<Upoly>> a, const AlgReal& alpha) {
  const Upoly& f = alpha.defining_poly();
  int n = int(a.size());
  std::vector<std::vector<AlgFrac>> m(n, std::vector<AlgFrac>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = reduce(f, a[i][j], Upoly(Rational(1)));
  auto sign_of = [&](const AlgFrac& x) {
    int sn = alpha.sign_of(x.num);
    if (sn == 0) return 0;
    return sn * alpha.sign_of(x.den);
  };
  auto sub = [&](const AlgFrac& x, const AlgFrac& y) {
    return reduce(f, x.num * y.den - y.num * x.den, x.den * y.den);
  };
  auto mul = [&](const AlgFrac& x, const AlgFrac& y) {
    return reduce(f, x.num * y.num, x.den * y.den);
  };
  auto div = [&](const AlgFrac& x, const AlgFrac& y) {
    return reduce(f, x.num * y.den, x.den * y.num);
  };
  std::vector<int> act(n);
  std::iota(act.begin(), act.end(), 0);
  Inertia out;
  while (!act.empty()) {
    int piv = -1;
    for (int i : act)
      if (sign_of(m[i][i]) != 0) { piv = i; break; }
    if (piv >= 0) {
      (sign_of(m[piv][piv]) > 0 ? out.positive : out.negative) += 1;
      std::vector<int> rest;
      for (int i : act)
        if (i != piv) rest.push_back(i);
      for (int r : rest)
        for (int c : rest)
          m[r][c] = sub(m[r][c], div(mul(m[r][piv], m[piv][c]), m[piv][piv]));
      act = rest;
      continue;
    }
    int bi = -1, bj = -1;
    for (size_t s = 0; s < act.size() && bi < 0; ++s)
      for (size_t t = s + 1; t < act.size(); ++t)
        if (sign_of(m[act[s]][act[t]]) != 0) {
          bi = act[s];
          bj = act[t];
          break;
        }
    if (bi < 0) {
      out.zero += int(act.size());
      break;
    }
    out.positive += 1;
    out.negative += 1;
    std::vector<int> rest;
    for (int i : act)
      if (i != bi && i != bj) rest.push_back(i);
    for (int r : rest)
      for (int c : rest) {
        AlgFrac t1 = mul(m[r][bi], m[bj][c]);
        AlgFrac t2 = mul(m[r][bj], m[bi][c]);
        AlgFrac s = reduce(f, t1.num * t2.den + t2.num * t1.den, t1.den * t2.den);
        m[r][c] = sub(m[r][c], div(s, m[bi][bj]));
      }
    act = rest;
  }
  return out;
}

// Net member combination along a curve sample: the symmetric matrix of
// Q_{M(x, y, 1)} as polynomials in y.
inline std::vector<std::vector<Upoly>> net_matrix_on_fiber(
    const Net& net, const QMat& chart, const Rational& xval) {
  int n = net.N + 1;
  // direction components as linear polynomials in y
  std::array<Upoly, 3> dir;
  for (int a = 0; a < 3; ++a) {
    std::vector<Rational> c{chart.at(a, 0) * xval + chart.at(a, 2), chart.at(a, 1)};
    dir[a] = Upoly(std::move(c));
  }
  std::vector<std::vector<Upoly>> m(n, std::vector<Upoly>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Upoly e;
      for (int a = 0; a <= net.r; ++a)
        e = e + dir[a] * net.members[a].at(i, j);
      m[i][j] = e;
    }
  return m;
}

}  // namespace detail

// Checks the index-function axioms on the computed arrangement:
// +-1 jumps across every circle, the antipodal law on regions and arcs,
// semicontinuity (arc value = min of sides = exact inertia on the curve,
// with corank exactly 1), the inner-index bound with its parity for N odd,
// and the index range of tropical components.
struct VerifyReport {
  int circles_checked = 0;
  int regions_checked = 0;
  int curve_samples_checked = 0;
};

inline VerifyReport verify_axioms(const IndexMap& im,
                                  const SphericalArrangement& arr,
                                  const Net& net, bool exact_curve_checks = true) {
  VerifyReport rep;
  int N = im.N;
  auto fail = [](const std::string& m) { throw AxiomViolation(m); };
  for (const auto& c : arr.circles) {
    int a = im.region_ind[c.region_below], b = im.region_ind[c.region_above];
    if (std::abs(a - b) != 1) fail("jump across a circle is not +-1");
    ++rep.circles_checked;
  }
  for (const auto& r : arr.regions) {
    if (im.region_ind[r.id] + im.region_ind[arr.regions[r.involution].id] != N + 1)
      fail("antipodal law violated on a region pair");
    ++rep.regions_checked;
  }
  // arc antipodal law: min-side values of sigma-paired circles
  for (const auto& c : arr.circles) {
    int v = im.arc_value(arr, c.id);
    int w = im.arc_value(arr, arr.circles[c.involution].id);
    if (v + w != N) fail("antipodal law violated on an arc pair (corank 1)");
  }
  if (exact_curve_checks) {
    for (const auto& c : arr.circles) {
      auto mat = detail::net_matrix_on_fiber(net, arr.chart, c.sample.x);
      AlgReal y(squarefree_part(c.sample.fiber), c.sample.y);
      Inertia it = detail::inertia_at(mat, y);
      if (it.zero != 1) fail("corank at a smooth curve point is not 1");
      int expect = im.arc_value(arr, c.id);
      // Q at the antipodal lift is -Q, so the on-curve negative index on the
      // lower sheet is the positive index of the fiber matrix
      int got = c.sample_sheet == 0 ? it.negative : it.positive;
      if (got != expect)
        fail("semicontinuity: arc value is not the on-curve negative index");
      ++rep.curve_samples_checked;
    }
  }
  // inner-index bound and parity; tropical range
  int dmax = (N + 1) / 2;
  for (const auto& [cid, o] : arr.up_ovals) {
    int i_o = im.inner_index.at(cid);
    if (i_o > N + 1 - (dmax - o.depth)) fail("inner-index bound violated");
    if (N % 2 == 1 && ((i_o - (N + 1 - (dmax - o.depth))) % 2 != 0))
      fail("inner-index parity violated for odd N");
  }
  for (int t : arr.tropical_regions) {
    int v = im.region_ind[t];
    if (!(N <= 2 * v && 2 * v <= N + 2)) fail("tropical index out of range");
  }
  return rep;
}

// Omega_i = {ind <= i} as a closed union of region closures.
struct OmegaLevel {
  int level = 0;
  std::vector<int> regions;
  int b0 = 0, b1 = 0, b2 = 0;
  long chi = 0;
  bool is_sphere = false, is_empty = true;
};

struct Filtration {
  int N = 0;
  std::vector<OmegaLevel> levels;  // indices 0..N+2 for i = -1..N+1
  const OmegaLevel& omega(int i) const { return levels[size_t(i + 1)]; }
};

inline Filtration filtration(const IndexMap& im, const SphericalArrangement& arr) {
  Filtration f;
  f.N = im.N;
  for (int i = -1; i <= im.N + 1; ++i) {
    OmegaLevel lv;
    lv.level = i;
    std::vector<int> in(arr.regions.size(), 0);
    for (const auto& r : arr.regions)
      if (im.region_ind[r.id] <= i) {
        in[r.id] = 1;
        lv.regions.push_back(r.id);
      }
    lv.is_empty = lv.regions.empty();
    lv.is_sphere = lv.regions.size() == arr.regions.size();
    if (!lv.is_empty) {
      UnionFind uf(int(arr.regions.size()));
      for (const auto& c : arr.circles)
        if (in[c.region_below] && in[c.region_above])
          uf.unite(c.region_below, c.region_above);
      std::set<int> roots;
      for (int rid : lv.regions) roots.insert(uf.find(rid));
      lv.b0 = int(roots.size());
      lv.chi = 0;
      for (int rid : lv.regions) lv.chi += 2 - long(arr.regions[rid].circles.size());
      lv.b2 = lv.is_sphere ? 1 : 0;
      lv.b1 = lv.b0 + lv.b2 - int(lv.chi);
      if (lv.b1 < 0)
        throw Error(ErrorKind::internal, "filtration: negative b1");
    }
    f.levels.push_back(std::move(lv));
  }
  return f;
}

// E2^{pq} = H^p(Omega_{N-q}); rows q = 0..N+1, columns p = 0..2.
struct E2Table {
  int N = 0;
  int i_max = 0;
  std::vector<std::array<int, 3>> dim;  // dim[q][p]
  int entry(int p, int q) const {
    if (q < 0 || q > N + 1) return 0;
    return dim[size_t(q)][size_t(p)];
  }
};

inline E2Table e2_table(const Filtration& f, const IndexMap& im) {
  E2Table t;
  t.N = f.N;
  t.i_max = im.i_max;
  for (int q = 0; q <= f.N + 1; ++q) {
    const OmegaLevel& w = f.omega(f.N - q);
    t.dim.push_back({w.b0, w.b1, w.b2});
  }
  // vanishing patterns forced by the filtration shape
  for (int q = 0; q <= f.N + 1; ++q) {
    if (q <= f.N - im.i_max) {
      if (t.entry(0, q) != 1 || t.entry(1, q) != 0 || t.entry(2, q) != 1)
        throw Error(ErrorKind::internal, "e2: low rows must be (1,0,1)");
    }
    if (q >= im.i_max) {
      if (t.entry(0, q) != 0 || t.entry(1, q) != 0 || t.entry(2, q) != 0)
        throw Error(ErrorKind::internal, "e2: rows above i_max must vanish");
    }
    if (q > f.N - im.i_max && t.entry(2, q) != 0)
      throw Error(ErrorKind::internal, "e2: H^2 must vanish on proper levels");
  }
  return t;
}

inline int chi_Lplus(const E2Table& t) {
  int chi = 0;
  for (int q = 0; q <= t.N + 1; ++q)
    for (int p = 0; p <= 2; ++p) chi += ((p + q) % 2 == 0 ? 1 : -1) * t.entry(p, q);
  return chi;
}

// Lemma deep.nest consistency: whenever Omega_q is disconnected for some
// q > N/2, the oval forest must contain a nest pair with inner indices
// (q+1, q).
inline void check_deep_nest(const IndexMap& im, const SphericalArrangement& arr,
                            const Filtration& f) {
  for (int q = f.N / 2 + 1; q <= f.N; ++q) {
    if (f.omega(q).b0 <= 1) continue;
    bool found = false;
    for (const auto& [aid, a] : arr.up_ovals) {
      if (im.inner_index.at(aid) != q + 1) continue;
      for (const auto& [bid, b] : arr.up_ovals) {
        (void)b;
        if (bid != aid && im.inner_index.at(bid) == q &&
            arr.oval_contains(aid, bid)) {
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found)
      throw AxiomViolation("deep.nest: disconnected sublevel without the nest pair");
  }
}

struct PredictionReport {
  std::string case_tag;  // imax_small | imax_Nminus1 | imax_N | exceptional_nest | out_of_lemma_range
  int b0_lower = 0, b0_upper = 0;
  int beta = 0;
  int i_max = 0;
  std::vector<std::array<int, 2>> omega_betti;  // (b0, b1) for i = -1..N+1
  E2Table e2;
  std::vector<std::string> notes;
};

// Case analysis of §-style prediction lemmas with literal preconditions;
// outside them, universal spectral-sequence bounds (always sound, often
// width one) are reported under out_of_lemma_range.
inline PredictionReport predict_b0(const IndexMap& im,
                                   const SphericalArrangement& arr,
                                   const CurveTopology& topo) {
  Filtration f = filtration(im, arr);
  E2Table e2 = e2_table(f, im);
  PredictionReport rep;
  rep.i_max = im.i_max;
  rep.e2 = e2;
  rep.beta = nest_queries(topo).beta;
  for (int i = -1; i <= f.N + 1; ++i)
    rep.omega_betti.push_back({f.omega(i).b0, f.omega(i).b1});
  int N = im.N;

  if (im.i_min < 1 || im.i_max > N) {
    rep.case_tag = "out_of_lemma_range";
    rep.b0_lower = rep.b0_upper = 0;
    rep.notes.push_back(
        "index attains 0 or N+1: the net contains a definite member, V_R is empty");
    return rep;
  }
  if (N < 3) {
    rep.case_tag = "out_of_lemma_range";
    rep.b0_lower = rep.b0_upper = 0;
    rep.notes.push_back("N <= 2: a regular intersection of three quadrics is empty");
    return rep;
  }

  // exceptional configuration: maximal nest with inner indices (N, N-1) on
  // the innermost pair
  bool exceptional = false;
  int dmax = (N + 1) / 2;
  for (const auto& [aid, a] : arr.up_ovals) {
    if (a.depth != dmax || im.inner_index.at(aid) != N - 1) continue;
    for (const auto& [bid, b] : arr.up_ovals) {
      (void)b;
      if (bid == aid || im.inner_index.at(bid) != N) continue;
      if (arr.oval_contains(bid, aid) && arr.up_ovals.at(bid).depth == dmax - 1)
        exceptional = true;
    }
  }

  if (im.i_max <= N - 2) {
    rep.case_tag = "imax_small";
    rep.b0_lower = 0;
    rep.b0_upper = 1;
    return rep;
  }
  if (im.i_max == N - 1) {
    int b0om = f.omega(N - 2).b0;
    rep.case_tag = "imax_Nminus1";
    rep.b0_lower = std::max(0, b0om - 1);
    rep.b0_upper = b0om;
    if (N - 1 >= 4 && b0om > 1) {
      if (b0om != rep.beta + 1)
        rep.notes.push_back("warning: b0(Omega_{N-2}) != beta+1 in the lemma range");
      else
        rep.notes.push_back("lemma range: bounds equal [beta, beta+1]");
    }
    return rep;
  }
  // i_max == N
  if (exceptional) {
    rep.case_tag = "exceptional_nest";
    rep.b0_lower = rep.b0_upper = 1;
    if (N == 3)
      rep.notes.push_back(
          "tension: at N=3 the real point count of a regular net is even "
          "(0,2,4,6,8), while the exceptional case predicts 1; this index "
          "configuration should not be realizable at N=3");
    return rep;
  }
  if (N >= 5) {
    rep.case_tag = "imax_N";
    rep.b0_lower = rep.b0_upper = rep.beta;
    return rep;
  }
  // i_max == N with N in {3, 4}: universal spectral-sequence bounds
  rep.case_tag = "out_of_lemma_range";
  int S = e2.entry(0, 2) + e2.entry(1, 1);
  rep.b0_upper = S + e2.entry(2, 0) - 1;
  rep.b0_lower = std::max(0, e2.entry(1, 1) +
                                 std::max(0, e2.entry(0, 2) - e2.entry(2, 1)) - 1);
  rep.notes.push_back("universal bounds from the spectral sequence at i_max = N < 5");
  return rep;
}

// Index orientation data: the coorientation toward increasing ind per
// upstairs oval, its planar descent in the canonical-lift convention, and
// the relative table over planar ovals.
struct IndexOrientation {
  std::map<int, bool> inward_up;     // circle id -> coorientation points into the disk
  std::map<int, bool> inward_canon;  // planar oval id -> canonical lift inward flag
  std::vector<std::array<int, 3>> relative;  // (oval a, oval b, aligned?)
  bool has_equator = false;
};

inline IndexOrientation index_orientation(const IndexMap& im,
                                          const SphericalArrangement& arr) {
  IndexOrientation io;
  io.has_equator = arr.equator_circle >= 0;
  for (const auto& [cid, o] : arr.up_ovals) {
    int inner = im.region_ind[o.inner_region];
    int outer = im.region_ind[o.outer_region];
    io.inward_up[cid] = inner > outer;
  }
  // antipodal consistency: the coorientation is reversed by sigma
  for (const auto& [cid, o] : arr.up_ovals)
    if (io.inward_up.at(cid) == io.inward_up.at(o.partner))
      throw Error(ErrorKind::internal, "orientation: sigma does not reverse coorientation");
  for (const auto& po : arr.topo.ovals) {
    int c1 = po.lift1, c2 = po.lift2;
    int i1 = im.inner_index.at(c1), i2 = im.inner_index.at(c2);
    int canon = (i1 > i2 || (i1 == i2 && c1 < c2)) ? c1 : c2;
    io.inward_canon[po.id] = io.inward_up.at(canon);
  }
  for (const auto& a : arr.topo.ovals)
    for (const auto& b : arr.topo.ovals) {
      if (a.id >= b.id) continue;
      io.relative.push_back({a.id, b.id,
                             io.inward_canon.at(a.id) == io.inward_canon.at(b.id) ? 1 : 0});
    }
  return io;
}

}  // namespace qnets
