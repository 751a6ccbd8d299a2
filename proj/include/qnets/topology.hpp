#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "qnets/errors.hpp"
#include "qnets/sweep.hpp"

namespace qnets {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Planar oval record: containment forest of the ovals of C_R.
struct PlanarOval {
  int id = -1;
  int parent = -1;  // containing oval of maximal depth, or -1
  int depth = 1;    // 1 + depth(parent)
  int lift1 = -1, lift2 = -1;  // the two circle ids upstairs
};

// Topology of the real part of a nonsingular plane curve.
struct CurveTopology {
  int d = 0;
  bool has_one_sided = false;
  std::vector<PlanarOval> ovals;

  int dmax() const { return d / 2; }
  int count_depth(int k) const {
    int n = 0;
    for (const auto& o : ovals)
      if (o.depth == k) ++n;
    return n;
  }
  int max_depth() const {
    int m = 0;
    for (const auto& o : ovals) m = std::max(m, o.depth);
    return m;
  }
  bool is_empty_oval(int id) const {
    for (const auto& o : ovals)
      if (o.parent == id) return false;
    return true;
  }
  int empty_oval_count() const {
    int n = 0;
    for (const auto& o : ovals)
      if (is_empty_oval(o.id)) ++n;
    return n;
  }
  // canonical encoding for chart-independence comparisons
  std::string canonical() const {
    std::vector<std::vector<int>> kids(ovals.size() + 1);
    for (const auto& o : ovals) kids[o.parent < 0 ? ovals.size() : o.parent].push_back(o.id);
    auto enc = [&](auto&& self, int id) -> std::string {
      std::vector<std::string> parts;
      for (int k : kids[id < 0 ? ovals.size() : id]) parts.push_back(self(self, k));
      std::sort(parts.begin(), parts.end());
      std::string s = "(";
      for (auto& p : parts) s += p;
      return s + ")";
    };
    return std::string(has_one_sided ? "J" : "") + enc(enc, -1);
  }
};

struct NestSummary {
  int d_max = 0;
  int max_nest_depth = 0;
  std::vector<int> count_at_depth;  // index 1..d_max
  int beta = 0;                     // ovals at depth d_max - 1 (0 when d < 4)
};

inline NestSummary nest_queries(const CurveTopology& t) {
  NestSummary s;
  s.d_max = t.dmax();
  s.max_nest_depth = t.max_depth();
  s.count_at_depth.assign(size_t(std::max(s.d_max, s.max_nest_depth)) + 1, 0);
  for (const auto& o : t.ovals) s.count_at_depth[o.depth] += 1;
  int sub = s.d_max - 1;
  s.beta = sub >= 1 ? s.count_at_depth[sub] : 0;
  return s;
}

// The three clauses of the Bezout consequence for nests: depth bound, a full
// nest excludes everything else, a submaximal nest leaves only empty ovals
// besides its first k-1 members.
inline bool check_bezout(const CurveTopology& t, std::string* why = nullptr) {
  int dmax = t.dmax();
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  if (t.max_depth() > dmax) return fail("nest deeper than [d/2]");
  // maximal nest: some oval at depth dmax
  bool has_max = t.max_depth() == dmax && dmax >= 1;
  if (has_max && dmax >= 2) {
    if (int(t.ovals.size()) != dmax)
      return fail("maximal nest must be the whole curve's oval set");
  }
  // submaximal nest, no maximal one
  if (!has_max && t.max_depth() == dmax - 1 && dmax - 1 >= 1) {
    // chain members o_1..o_{k-1} are the ancestors of a deepest oval;
    // everything else, including o_k itself, must be empty
    int deep = -1;
    for (const auto& o : t.ovals)
      if (o.depth == dmax - 1) deep = o.id;
    std::set<int> chain;
    for (int cur = deep; cur >= 0;) {
      chain.insert(cur);
      cur = t.ovals[cur].parent;
    }
    for (const auto& o : t.ovals) {
      if (chain.count(o.id) && o.id != deep) continue;  // o_1..o_{k-1}
      if (!t.is_empty_oval(o.id))
        return fail("non-empty oval outside submaximal nest");
    }
  }
  if (why) *why = "ok";
  return true;
}

// Exact point on a circle of the arrangement, in chart coordinates.
struct CurvePointSample {
  Rational x;
  Upoly fiber;      // F(x, .)
  RootInterval y;
};

struct Circle {
  int id = -1;
  int involution = -1;
  int region_below = -1, region_above = -1;  // the two adjacent regions
  bool one_sided = false;                    // invariant under the antipodal map
  int planar_id = -1;                        // planar component index
  int n_vertices = 0, n_edges = 0;
  CurvePointSample sample;
  int sample_sheet = 0;  // 0: the sample lifts to M(x,y,1); 1: to its antipode
};

struct Region {
  int id = -1;
  int involution = -1;
  std::vector<int> circles;          // adjacent circles
  std::vector<Rational> sample;      // exact direction in R^3, original coords
  bool tropical = false;
};

struct UpOvalInfo {
  int circle = -1;
  int partner = -1;
  int inner_region = -1;  // region immediately inside (disk side)
  int outer_region = -1;
  int depth = 0;
  std::vector<int> disk_circles;  // circles strictly inside the disk side
  std::vector<int> disk_regions;  // regions inside the disk side
};

// Cell complex of S^2 cut by the lifted spectral curve.
struct SphericalArrangement {
  QMat chart;
  int d = 0;
  std::vector<Region> regions;
  std::vector<Circle> circles;
  std::map<int, UpOvalInfo> up_ovals;  // keyed by circle id (non-invariant ones)
  int equator_circle = -1;
  std::vector<int> tropical_regions;
  CurveTopology topo;
  int total_vertices = 0, total_edges = 0;

  // V - E + sum_R (2 - #adjacent circles) for the stratification by curve
  // cells and open regions; equals 2 exactly on S^2.
  long euler_characteristic() const {
    long v = total_vertices, e = total_edges, f = 0;
    for (const auto& r : regions) f += 2 - long(r.circles.size());
    return v - e + f;
  }

  bool oval_contains(int oval_circle, int other_circle) const {
    const auto& o = up_ovals.at(oval_circle);
    return std::find(o.disk_circles.begin(), o.disk_circles.end(), other_circle) !=
           o.disk_circles.end();
  }
  bool oval_contains_region(int oval_circle, int region) const {
    const auto& o = up_ovals.at(oval_circle);
    return std::find(o.disk_regions.begin(), o.disk_regions.end(), region) !=
           o.disk_regions.end();
  }
};

class ArrangementBuilder {
 public:
  explicit ArrangementBuilder(const TernaryForm& u) : u_(u) {}

  SphericalArrangement build() { return build_from(SweepBuilder(u_).run()); }

  SphericalArrangement build_from(const ChartSweep& cs) {
    const int ns = int(cs.stations.size());
    const int ne = int(cs.events.size());
    const int q = int(cs.slopes.size());

    // ---- curve node ids ----
    std::map<std::tuple<int, int, int>, int> cross_id;  // (sheet, station, idx)
    std::map<std::pair<int, int>, int> turn_id;         // (sheet, event)
    std::map<std::pair<int, int>, int> equ_id;          // (slope, side)
    int nid = 0;
    for (int sh = 0; sh < 2; ++sh) {
      for (int i = 0; i < ns; ++i)
        for (int u = 0; u < int(cs.crossings[i].size()); ++u)
          cross_id[{sh, i, u}] = nid++;
      for (int e = 0; e < ne; ++e)
        if (cs.events[e].kind != SweepEvent::complex_pair) turn_id[{sh, e}] = nid++;
    }
    for (int i = 0; i < q; ++i)
      for (int s = 0; s < 2; ++s) equ_id[{i, s}] = nid++;

    UnionFind cuf(nid);
    std::vector<int> degree(nid, 0);
    int n_curve_edges = 0;
    auto curve_edge = [&](int a, int b) {
      cuf.unite(a, b);
      degree[a]++;
      degree[b]++;
      ++n_curve_edges;
    };

    for (int sh = 0; sh < 2; ++sh) {
      for (int e = 0; e < ne; ++e) {
        int li = e, ri = e + 1;  // stations flanking the event
        int ml = int(cs.crossings[li].size());
        const auto& ev = cs.events[e];
        if (ev.kind == SweepEvent::merge) {
          int j = ev.pair, T = turn_id[{sh, e}];
          for (int u = 0; u < ml; ++u) {
            if (u == j || u == j + 1)
              curve_edge(cross_id[{sh, li, u}], T);
            else
              curve_edge(cross_id[{sh, li, u}], cross_id[{sh, ri, u < j ? u : u - 2}]);
          }
        } else if (ev.kind == SweepEvent::birth) {
          int j = ev.pair, T = turn_id[{sh, e}];
          int mr = int(cs.crossings[ri].size());
          for (int u = 0; u < mr; ++u) {
            if (u == j || u == j + 1)
              curve_edge(T, cross_id[{sh, ri, u}]);
            else
              curve_edge(cross_id[{sh, li, u < j ? u : u - 2}], cross_id[{sh, ri, u}]);
          }
        } else {
          for (int u = 0; u < ml; ++u)
            curve_edge(cross_id[{sh, li, u}], cross_id[{sh, ri, u}]);
        }
      }
      // infinity hookups: right ends in slope order, left ends reversed
      for (int u = 0; u < q; ++u) {
        curve_edge(cross_id[{sh, ns - 1, u}], equ_id[{u, sh == 0 ? 0 : 1}]);
        curve_edge(cross_id[{sh, 0, u}], equ_id[{q - 1 - u, sh == 0 ? 1 : 0}]);
      }
    }
    for (int v = 0; v < nid; ++v)
      if (degree[v] != 2)
        throw Error(ErrorKind::internal, "arrangement: curve graph not 2-regular");

    // ---- gap nodes and region union-find ----
    std::map<std::tuple<int, int, int>, int> gap_id;  // (sheet, station, gap)
    int gid = 0;
    for (int sh = 0; sh < 2; ++sh)
      for (int i = 0; i < ns; ++i)
        for (int g = 0; g <= int(cs.crossings[i].size()); ++g)
          gap_id[{sh, i, g}] = gid++;
    UnionFind ruf(gid);
    for (int sh = 0; sh < 2; ++sh) {
      for (int e = 0; e < ne; ++e) {
        int li = e, ri = e + 1;
        int ml = int(cs.crossings[li].size());
        int mr = int(cs.crossings[ri].size());
        const auto& ev = cs.events[e];
        if (ev.kind == SweepEvent::merge) {
          int j = ev.pair;
          for (int g = 0; g <= j; ++g) ruf.unite(gap_id[{sh, li, g}], gap_id[{sh, ri, g}]);
          for (int g = j + 2; g <= ml; ++g)
            ruf.unite(gap_id[{sh, li, g}], gap_id[{sh, ri, g - 2}]);
        } else if (ev.kind == SweepEvent::birth) {
          int j = ev.pair;
          for (int g = 0; g <= j; ++g) ruf.unite(gap_id[{sh, li, g}], gap_id[{sh, ri, g}]);
          for (int g = j + 2; g <= mr; ++g)
            ruf.unite(gap_id[{sh, li, g - 2}], gap_id[{sh, ri, g}]);
        } else {
          for (int g = 0; g <= ml; ++g) ruf.unite(gap_id[{sh, li, g}], gap_id[{sh, ri, g}]);
        }
      }
      // affine wraps above and below everything
      int mfirst = int(cs.crossings.front().size());
      int mlast = int(cs.crossings.back().size());
      ruf.unite(gap_id[{sh, 0, 0}], gap_id[{sh, ns - 1, 0}]);
      ruf.unite(gap_id[{sh, 0, mfirst}], gap_id[{sh, ns - 1, mlast}]);
    }
    // equator joins
    if (q == 0) {
      ruf.unite(gap_id[{0, 0, 0}], gap_id[{1, 0, 0}]);
    } else {
      for (int k = 1; k <= q - 1; ++k) {
        ruf.unite(gap_id[{0, ns - 1, k}], gap_id[{1, 0, q - k}]);
        ruf.unite(gap_id[{1, ns - 1, k}], gap_id[{0, 0, q - k}]);
      }
      ruf.unite(gap_id[{0, ns - 1, q}], gap_id[{1, ns - 1, 0}]);
      ruf.unite(gap_id[{1, ns - 1, q}], gap_id[{0, ns - 1, 0}]);
    }

    // ---- assemble regions ----
    SphericalArrangement arr;
    arr.chart = cs.chart;
    arr.d = cs.d;
    std::map<int, int> region_of_root;
    auto region_of = [&](int sh, int i, int g) {
      int root = ruf.find(gap_id[{sh, i, g}]);
      auto it = region_of_root.find(root);
      if (it != region_of_root.end()) return it->second;
      int id = int(arr.regions.size());
      region_of_root[root] = id;
      arr.regions.push_back({});
      arr.regions.back().id = id;
      return id;
    };
    // samples: first gap node encountered per region
    for (int sh = 0; sh < 2; ++sh)
      for (int i = 0; i < ns; ++i) {
        const auto& roots = cs.crossings[i];
        int m = int(roots.size());
        for (int g = 0; g <= m; ++g) {
          int rid = region_of(sh, i, g);
          if (!arr.regions[rid].sample.empty()) continue;
          Rational yhat;
          if (m == 0)
            yhat = 0;
          else if (g == 0)
            yhat = roots.front().lo - 1;
          else if (g == m)
            yhat = roots.back().hi + 1;
          else
            yhat = midpoint(roots[g - 1].hi, roots[g].lo);
          std::array<Rational, 3> chart_pt{cs.stations[i], yhat, Rational(1)};
          std::vector<Rational> dir(3, Rational(0));
          for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) dir[a] += cs.chart.at(a, b) * chart_pt[b];
          if (sh == 1)
            for (auto& c : dir) c = -c;
          // clear denominators for a clean integer direction
          Integer den = 1;
          for (auto& c : dir) den = den * c.get_den() / ::gcd(den, Integer(c.get_den()));
          for (auto& c : dir) {
            c *= Rational(den);
            c.canonicalize();
          }
          arr.regions[rid].sample = dir;
        }
      }
    // region involution
    for (int sh = 0; sh < 2; ++sh)
      for (int i = 0; i < ns; ++i)
        for (int g = 0; g <= int(cs.crossings[i].size()); ++g) {
          int a = region_of(sh, i, g), b = region_of(1 - sh, i, g);
          arr.regions[a].involution = b;
        }

    // ---- circles ----
    std::map<int, int> circle_of_root;
    auto circle_of = [&](int node) {
      int root = cuf.find(node);
      auto it = circle_of_root.find(root);
      if (it != circle_of_root.end()) return it->second;
      int id = int(arr.circles.size());
      circle_of_root[root] = id;
      arr.circles.push_back({});
      arr.circles.back().id = id;
      return id;
    };
    // vertex/edge tallies per circle
    std::map<int, int> vtally;
    for (auto& [key, node] : cross_id) (void)key, vtally[cuf.find(node)]++;
    for (auto& [key, node] : turn_id) (void)key, vtally[cuf.find(node)]++;
    for (auto& [key, node] : equ_id) (void)key, vtally[cuf.find(node)]++;
    // adjacency + samples from crossings
    for (int sh = 0; sh < 2; ++sh)
      for (int i = 0; i < ns; ++i)
        for (int u = 0; u < int(cs.crossings[i].size()); ++u) {
          int c = circle_of(cross_id[{sh, i, u}]);
          Circle& cc = arr.circles[c];
          int below = region_of(sh, i, u), above = region_of(sh, i, u + 1);
          if (cc.region_below < 0) {
            cc.region_below = below;
            cc.region_above = above;
            cc.sample = {cs.stations[i], eval_x(cs.F, cs.stations[i]),
                         cs.crossings[i][u]};
            cc.sample_sheet = sh;
          }
          auto& rb = arr.regions[below].circles;
          auto& ra = arr.regions[above].circles;
          if (std::find(rb.begin(), rb.end(), c) == rb.end()) rb.push_back(c);
          if (std::find(ra.begin(), ra.end(), c) == ra.end()) ra.push_back(c);
        }
    for (auto& [root, cid] : circle_of_root) {
      arr.circles[cid].n_vertices = vtally[root];
      arr.circles[cid].n_edges = vtally[root];  // 2-regular cycles
    }
    arr.total_vertices = nid;
    arr.total_edges = n_curve_edges;
    // circle involution: map via the crossing nodes
    for (int i = 0; i < ns; ++i)
      for (int u = 0; u < int(cs.crossings[i].size()); ++u) {
        int a = circle_of(cross_id[{0, i, u}]);
        int b = circle_of(cross_id[{1, i, u}]);
        arr.circles[a].involution = b;
        arr.circles[b].involution = a;
      }
    for (auto& c : arr.circles) {
      c.one_sided = c.involution == c.id;
      if (c.one_sided) {
        if (arr.equator_circle >= 0)
          throw Error(ErrorKind::internal, "arrangement: two invariant circles");
        arr.equator_circle = c.id;
      }
    }
    if ((arr.equator_circle >= 0) != (cs.d % 2 == 1))
      throw Error(ErrorKind::internal, "arrangement: one-sided component parity");

    // every circle separates: exactly two adjacent regions
    for (auto& c : arr.circles) {
      std::set<int> adj;
      for (auto& r : arr.regions)
        if (std::find(r.circles.begin(), r.circles.end(), c.id) != r.circles.end())
          adj.insert(r.id);
      if (adj.size() != 2)
        throw Error(ErrorKind::internal, "arrangement: circle without two sides");
      auto it = adj.begin();
      int r1 = *it++, r2 = *it;
      if (!((c.region_below == r1 && c.region_above == r2) ||
            (c.region_below == r2 && c.region_above == r1)))
        throw Error(ErrorKind::internal, "arrangement: side bookkeeping mismatch");
    }

    // tree check: regions-circles bipartite graph on S^2
    if (int(arr.regions.size()) != int(arr.circles.size()) + 1)
      throw Error(ErrorKind::internal, "arrangement: region/circle tree count");
    if (arr.euler_characteristic() != 2)
      throw Error(ErrorKind::internal, "arrangement: euler check failed");

    build_ovals(arr);
    build_planar(arr);
    return arr;
  }

 private:
  const TernaryForm& u_;

  // BFS over the region-circle tree from region `start`, never crossing
  // circle `blocked`; fills reached regions and circles.
  static void side_bfs(const SphericalArrangement& arr, int start, int blocked,
                       std::set<int>& regions, std::set<int>& circles) {
    std::vector<int> stack{start};
    regions.insert(start);
    while (!stack.empty()) {
      int r = stack.back();
      stack.pop_back();
      for (int c : arr.regions[r].circles) {
        if (c == blocked || circles.count(c)) continue;
        circles.insert(c);
        for (int nr : {arr.circles[c].region_below, arr.circles[c].region_above})
          if (!regions.count(nr)) {
            regions.insert(nr);
            stack.push_back(nr);
          }
      }
    }
  }

  static void build_ovals(SphericalArrangement& arr) {
    for (auto& c : arr.circles) {
      if (c.one_sided) continue;
      UpOvalInfo info;
      info.circle = c.id;
      info.partner = c.involution;
      // disk side: the side not containing the partner circle
      std::set<int> regs, circs;
      side_bfs(arr, c.region_below, c.id, regs, circs);
      bool partner_below = circs.count(c.involution) > 0;
      if (partner_below) {
        regs.clear();
        circs.clear();
        side_bfs(arr, c.region_above, c.id, regs, circs);
        info.inner_region = c.region_above;
        info.outer_region = c.region_below;
      } else {
        info.inner_region = c.region_below;
        info.outer_region = c.region_above;
      }
      if (circs.count(c.involution))
        throw Error(ErrorKind::internal, "build_ovals: partner on both sides");
      info.disk_circles.assign(circs.begin(), circs.end());
      info.disk_regions.assign(regs.begin(), regs.end());
      arr.up_ovals[c.id] = std::move(info);
    }
    // depths upstairs
    for (auto& [id, o] : arr.up_ovals) {
      int depth = 1;
      for (auto& [id2, o2] : arr.up_ovals)
        if (id2 != id && arr.oval_contains(id2, id)) ++depth;
      o.depth = depth;
    }
  }

  static void build_planar(SphericalArrangement& arr) {
    // planar components: sigma-pairs of circles and the invariant circle
    CurveTopology topo;
    topo.d = arr.d;
    topo.has_one_sided = arr.equator_circle >= 0;
    std::map<int, int> planar_of_circle;
    for (auto& c : arr.circles) {
      if (c.one_sided) {
        c.planar_id = -2;  // the one-sided component, not an oval
        continue;
      }
      if (planar_of_circle.count(c.id)) continue;
      int pid = int(topo.ovals.size());
      planar_of_circle[c.id] = pid;
      planar_of_circle[c.involution] = pid;
      PlanarOval po;
      po.id = pid;
      po.lift1 = c.id;
      po.lift2 = c.involution;
      topo.ovals.push_back(po);
    }
    for (auto& c : arr.circles)
      if (!c.one_sided) c.planar_id = planar_of_circle[c.id];
    // planar containment: oval B inside oval A iff a lift of B lies in a
    // disk side of one of A's lifts
    auto contains = [&](const PlanarOval& a, const PlanarOval& b) {
      return arr.oval_contains(a.lift1, b.lift1) || arr.oval_contains(a.lift2, b.lift1);
    };
    for (auto& b : topo.ovals) {
      int depth = 1, parent = -1, parent_depth = 0;
      for (auto& a : topo.ovals) {
        if (a.id == b.id) continue;
        if (contains(a, b)) ++depth;
      }
      b.depth = depth;
      for (auto& a : topo.ovals) {
        if (a.id == b.id || !contains(a, b)) continue;
        int ad = 1;
        for (auto& a2 : topo.ovals)
          if (a2.id != a.id && contains(a2, a)) ++ad;
        if (ad > parent_depth) {
          parent_depth = ad;
          parent = a.id;
        }
      }
      b.parent = parent;
      if (parent >= 0 && parent_depth + 1 != depth)
        throw Error(ErrorKind::internal, "build_planar: forest depth mismatch");
      if (parent < 0 && depth != 1)
        throw Error(ErrorKind::internal, "build_planar: orphan nested oval");
    }
    // outermost planar region class: regions inside no planar oval
    std::vector<int> depth0;
    for (auto& r : arr.regions) {
      bool inside = false;
      for (auto& a : topo.ovals)
        if (arr.oval_contains_region(a.lift1, r.id) ||
            arr.oval_contains_region(a.lift2, r.id)) {
          inside = true;
          break;
        }
      if (!inside) depth0.push_back(r.id);
    }
    // depth0 is one sigma-class of regions (one or two members)
    if (depth0.empty() || depth0.size() > 2)
      throw Error(ErrorKind::internal, "build_planar: outermost region class");
    if (depth0.size() == 2 &&
        arr.regions[depth0[0]].involution != depth0[1])
      throw Error(ErrorKind::internal, "build_planar: outermost class not antipodal");
    for (int r : depth0) {
      arr.regions[r].tropical = true;
      arr.tropical_regions.push_back(r);
    }
    arr.topo = std::move(topo);
  }
};

// Convenience front door matching the operation names.
inline CurveTopology curve_topology(const TernaryForm& u) {
  if (certify_nonsingular(u) != Verdict::nonsingular)
    throw SingularInput("curve_topology: input curve is not certified nonsingular");
  return ArrangementBuilder(u).build().topo;
}

inline SphericalArrangement lift_to_sphere(const TernaryForm& u) {
  if (certify_nonsingular(u) != Verdict::nonsingular)
    throw SingularInput("lift_to_sphere: input curve is not certified nonsingular");
  return ArrangementBuilder(u).build();
}

}  // namespace qnets
