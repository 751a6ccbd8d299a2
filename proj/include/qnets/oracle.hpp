#pragma once

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "qnets/algebraic.hpp"
#include "qnets/errors.hpp"
#include "qnets/forms.hpp"
#include "qnets/random.hpp"

namespace qnets {

struct OracleOptions {
  uint64_t seed = 20240808;
  double residual_tol = 1e-10;
  double dedup_tol = 1e-6;   // angular separation for zero-dimensional dedup
  double step = 1e-2;        // base tracking step (adaptive)
  int seed_count = 4000;     // multistart budget
  int max_steps = 400000;    // per-loop step budget
  bool collect_points = false;
};

struct TrackedLoop {
  std::vector<std::vector<double>> points;
  bool closed = false;
  bool antipodal_closed = false;  // the path returned to the antipode of its start
  double length = 0;
};

struct CurveCountResult {
  int count = 0;
  std::vector<TrackedLoop> loops;
  std::vector<std::string> warnings;
};

struct SolutionSet {
  std::vector<std::vector<double>> points;  // unit representatives, u ~ -u
  std::vector<std::string> warnings;
  int count() const { return int(points.size()); }
};

namespace oracle_detail {

using Vec = std::vector<double>;

inline double dot(const Vec& a, const Vec& b) {
  double s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}
inline double norm(const Vec& a) { return std::sqrt(dot(a, a)); }
inline void normalize(Vec& a) {
  double n = norm(a);
  for (auto& x : a) x /= n;
}
inline double dist(const Vec& a, const Vec& b) {
  double s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}
inline double dist_antipodal(const Vec& a, const Vec& b) {
  double s1 = 0, s2 = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    s1 += (a[i] - b[i]) * (a[i] - b[i]);
    s2 += (a[i] + b[i]) * (a[i] + b[i]);
  }
  return std::sqrt(std::min(s1, s2));
}

// dense Gaussian elimination with partial pivoting; returns false if nearly
// singular
inline bool dsolve(std::vector<Vec> a, Vec b, Vec& x) {
  int n = int(a.size());
  for (int c = 0; c < n; ++c) {
    int p = c;
    for (int r = c + 1; r < n; ++r)
      if (std::fabs(a[r][c]) > std::fabs(a[p][c])) p = r;
    if (std::fabs(a[p][c]) < 1e-14) return false;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (int r = c + 1; r < n; ++r) {
      double f = a[r][c] / a[c][c];
      for (int j = c; j < n; ++j) a[r][j] -= f * a[c][j];
      b[r] -= f * b[c];
    }
  }
  x.assign(n, 0.0);
  for (int r = n - 1; r >= 0; --r) {
    double s = b[r];
    for (int j = r + 1; j < n; ++j) s -= a[r][j] * x[j];
    x[r] = s / a[r][r];
  }
  return true;
}

struct QuadricSystem {
  int dim = 0;  // ambient R^{dim}
  std::vector<std::vector<double>> mats;  // flattened symmetric matrices

  static QuadricSystem from_forms(const std::vector<SymmetricForm>& qs) {
    QuadricSystem s;
    s.dim = qs[0].dim();
    for (const auto& q : qs) s.mats.push_back(q.matrix_d());
    return s;
  }
  int k() const { return int(mats.size()); }
  double value(int i, const Vec& u) const {
    const auto& m = mats[i];
    double acc = 0;
    for (int r = 0; r < dim; ++r) {
      double row = 0;
      for (int c = 0; c < dim; ++c) row += m[size_t(r) * dim + c] * u[c];
      acc += row * u[r];
    }
    return acc;
  }
  Vec grad(int i, const Vec& u) const {
    const auto& m = mats[i];
    Vec g(dim, 0.0);
    for (int r = 0; r < dim; ++r) {
      double row = 0;
      for (int c = 0; c < dim; ++c) row += m[size_t(r) * dim + c] * u[c];
      g[r] = 2 * row;
    }
    return g;
  }
  double residual(const Vec& u) const {
    double s = 0;
    for (int i = 0; i < k(); ++i) s = std::max(s, std::fabs(value(i, u)));
    return s;
  }
};

// Gauss-Newton for (q_1..q_k, |u|^2 - 1) = 0 via normal equations.
inline bool newton_to_variety(const QuadricSystem& sys, Vec& u, double tol,
                              int iters = 60) {
  int n = sys.dim, k = sys.k();
  for (int it = 0; it < iters; ++it) {
    std::vector<double> f(k + 1);
    std::vector<Vec> J;
    for (int i = 0; i < k; ++i) {
      f[i] = sys.value(i, u);
      J.push_back(sys.grad(i, u));
    }
    f[k] = dot(u, u) - 1.0;
    Vec last(n);
    for (int i = 0; i < n; ++i) last[i] = 2 * u[i];
    J.push_back(last);
    double fn = 0;
    for (double v : f) fn = std::max(fn, std::fabs(v));
    if (fn < tol) return true;
    // normal equations J^T J dx = -J^T f
    std::vector<Vec> a(n, Vec(n, 0.0));
    Vec b(n, 0.0);
    for (int r = 0; r <= k; ++r)
      for (int i = 0; i < n; ++i) {
        b[i] -= J[r][i] * f[r];
        for (int j = 0; j < n; ++j) a[i][j] += J[r][i] * J[r][j];
      }
    for (int i = 0; i < n; ++i) a[i][i] += 1e-14;
    Vec dx;
    if (!dsolve(a, b, dx)) return false;
    double step_scale = 1.0;
    for (int bt = 0; bt < 30; ++bt) {
      Vec u2 = u;
      for (int i = 0; i < n; ++i) u2[i] += step_scale * dx[i];
      double f2 = 0;
      for (int i = 0; i < k; ++i) f2 = std::max(f2, std::fabs(sys.value(i, u2)));
      f2 = std::max(f2, std::fabs(dot(u2, u2) - 1.0));
      if (f2 < fn || step_scale < 1e-6) {
        u = u2;
        break;
      }
      step_scale /= 2;
    }
  }
  double fn = sys.residual(u);
  return fn < tol && std::fabs(dot(u, u) - 1.0) < tol;
}

// Unit tangent of the solution curve: orthogonal complement of the gradient
// rows and the radial direction; seeded with `hint` for sign continuity.
inline bool curve_tangent(const QuadricSystem& sys, const Vec& u, const Vec& hint,
                          Vec& t) {
  int n = sys.dim;
  std::vector<Vec> rows;
  for (int i = 0; i < sys.k(); ++i) rows.push_back(sys.grad(i, u));
  rows.push_back(u);
  // Gram-Schmidt the rows
  for (size_t i = 0; i < rows.size(); ++i) {
    for (size_t j = 0; j < i; ++j) {
      double p = dot(rows[i], rows[j]);
      for (int c = 0; c < n; ++c) rows[i][c] -= p * rows[j][c];
    }
    double nn = norm(rows[i]);
    if (nn < 1e-9) return false;  // rank drop
    for (auto& x : rows[i]) x /= nn;
  }
  t = hint;
  for (int pass = 0; pass < 2; ++pass)
    for (const auto& r : rows) {
      double p = dot(t, r);
      for (int c = 0; c < n; ++c) t[c] -= p * r[c];
    }
  double nn = norm(t);
  if (nn < 1e-9) return false;
  for (auto& x : t) x /= nn;
  return true;
}

inline Vec halton_direction(int index, int dim) {
  static const int primes[] = {2, 3, 5, 7, 11, 13, 17};
  Vec u(dim);
  for (int d = 0; d < dim; ++d) {
    int base = primes[d % 7];
    double f = 1.0, r = 0.0;
    int i = index + 1;
    while (i > 0) {
      f /= base;
      r += f * (i % base);
      i /= base;
    }
    u[d] = 2 * r - 1;
  }
  if (norm(u) < 1e-9) u[0] = 1;
  normalize(u);
  return u;
}

}  // namespace oracle_detail

// Counts connected components of the real zero set of k = N-1 quadrics in
// RP^N (a curve) by multistart predictor-corrector tracking on the sphere
// with antipodal identification.
inline CurveCountResult count_components_curve(const std::vector<SymmetricForm>& qs,
                                               const OracleOptions& opt = {}) {
  using namespace oracle_detail;
  QuadricSystem sys = QuadricSystem::from_forms(qs);
  int n = sys.dim;
  if (sys.k() != n - 2)
    throw InputError("count_components_curve: expected N-1 quadrics in RP^N");
  CurveCountResult out;
  int last_new_seed = -1;
  for (int sidx = 0; sidx < opt.seed_count; ++sidx) {
    Vec u = halton_direction(sidx, n);
    if (!newton_to_variety(sys, u, opt.residual_tol)) continue;
    // dedup against existing loops (antipodal aware, step-scale tolerance)
    bool known = false;
    for (const auto& loop : out.loops) {
      for (const auto& p : loop.points)
        if (dist_antipodal(u, p) < 2.5 * opt.step) {
          known = true;
          break;
        }
      if (known) break;
    }
    if (known) continue;
    // track a new loop
    TrackedLoop loop;
    Vec start = u;
    Vec t, hint(n, 0.0);
    hint[0] = 0.7;
    hint[(sidx % n)] += 0.7;
    if (!curve_tangent(sys, u, hint, t))
      throw SuspectedSingularity("count_components_curve: rank drop at seed");
    loop.points.push_back(u);
    double h = opt.step;
    int steps = 0;
    bool closed = false;
    double travelled = 0;
    while (steps < opt.max_steps) {
      Vec u2 = u;
      for (int i = 0; i < n; ++i) u2[i] += h * t[i];
      normalize(u2);
      if (!newton_to_variety(sys, u2, opt.residual_tol) ||
          dist(u2, u) > 3 * h) {
        h /= 2;
        if (h < 1e-9)
          throw NonClosure("count_components_curve: step collapse");
        continue;
      }
      Vec t2;
      if (!curve_tangent(sys, u2, t, t2))
        throw SuspectedSingularity("count_components_curve: rank drop on track");
      if (dot(t2, t) < 0.2) {
        h /= 2;
        if (h < 1e-9)
          throw NonClosure("count_components_curve: tangent reversal");
        continue;
      }
      travelled += dist(u2, u);
      u = u2;
      t = t2;
      ++steps;
      loop.points.push_back(u);
      if (h < opt.step) h = std::min(opt.step, h * 1.5);
      if (travelled > 4 * h && dist_antipodal(u, start) < 1.5 * h) {
        closed = true;
        loop.antipodal_closed = dist(u, start) > 1.5 * h;
        break;
      }
    }
    if (!closed)
      throw NonClosure("count_components_curve: step budget exhausted");
    loop.closed = true;
    loop.length = travelled;
    out.loops.push_back(std::move(loop));
    last_new_seed = sidx;
  }
  out.count = int(out.loops.size());
  if (last_new_seed >= 0 && last_new_seed > (3 * opt.seed_count) / 4)
    out.warnings.push_back("SeedSaturationWarning: components may be undercounted");
  if (!opt.collect_points)
    for (auto& l : out.loops)
      if (l.points.size() > 64) l.points.resize(64);
  return out;
}

// Zero-dimensional solves: k = N quadrics in RP^N.
inline SolutionSet solve_zero_dim(const std::vector<SymmetricForm>& qs,
                                  const OracleOptions& opt = {}) {
  using namespace oracle_detail;
  QuadricSystem sys = QuadricSystem::from_forms(qs);
  int n = sys.dim;
  if (sys.k() != n - 1)
    throw InputError("solve_zero_dim: expected N quadrics in RP^N");
  SolutionSet out;
  int last_new_seed = -1;
  for (int sidx = 0; sidx < opt.seed_count; ++sidx) {
    Vec u = halton_direction(sidx, n);
    if (!newton_to_variety(sys, u, opt.residual_tol * 1e-2)) continue;
    bool known = false;
    for (const auto& p : out.points)
      if (dist_antipodal(u, p) < opt.dedup_tol) {
        known = true;
        break;
      }
    if (known) continue;
    out.points.push_back(u);
    last_new_seed = sidx;
  }
  if (int(out.points.size()) > (1 << (n - 1)))
    throw Error(ErrorKind::internal, "solve_zero_dim: more than 2^N points");
  if (last_new_seed >= 0 && last_new_seed > (3 * opt.seed_count) / 4)
    out.warnings.push_back("SeedSaturationWarning: solutions may be missed");
  return out;
}

}  // namespace qnets
