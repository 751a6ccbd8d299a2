#pragma once

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qnets/forms.hpp"
#include "qnets/indexfn.hpp"
#include "qnets/ternary.hpp"
#include "qnets/topology.hpp"

namespace qnets {

// Orthographic two-hemisphere rendering of the index landscape: each panel
// shows one hemisphere of S^2 with cells shaded by the index value and the
// lifted spectral curve stroked on top.
class SvgRenderer {
 public:
  SvgRenderer(const Net& net, const TernaryForm& u) : net_(net), u_(u) {}

  std::string render(int grid = 120, double panel = 340) const {
    std::ostringstream svg;
    double width = 2 * panel + 3 * margin_, height = panel + 2 * margin_ + 70;
    svg << "<svg xmlns='http://www.w3.org/2000/svg' width='" << width
        << "' height='" << height << "'>\n";
    svg << "<rect width='100%' height='100%' fill='white'/>\n";
    int n1 = net_.N + 1;
    std::vector<std::vector<double>> mats;
    for (const auto& m : net_.members) mats.push_back(m.matrix_d());
    int imax = 0;
    for (int side = 0; side < 2; ++side) {
      double ox = margin_ + side * (panel + margin_);
      double oy = margin_;
      double r = panel / 2;
      double cx = ox + r, cy = oy + r;
      double cell = panel / grid;
      for (int gy = 0; gy < grid; ++gy)
        for (int gx = 0; gx < grid; ++gx) {
          double px = (gx + 0.5) / grid * 2 - 1;
          double py = (gy + 0.5) / grid * 2 - 1;
          double rr = px * px + py * py;
          if (rr > 1) continue;
          double z = std::sqrt(std::max(0.0, 1 - rr)) * (side == 0 ? 1 : -1);
          double x[3] = {px, -py, z};
          int ind = negative_index_d(mats, n1, x);
          imax = std::max(imax, ind);
          svg << "<rect x='" << ox + gx * cell << "' y='" << oy + gy * cell
              << "' width='" << cell + 0.5 << "' height='" << cell + 0.5
              << "' fill='" << color(ind) << "'/>\n";
        }
      // curve: marching on the grid of det values
      svg << "<g stroke='black' stroke-width='1.2' fill='none'>\n";
      for (int gy = 0; gy < grid; ++gy)
        for (int gx = 0; gx < grid; ++gx) {
          double vals[4];
          double pts[4][2];
          bool in = true;
          for (int k = 0; k < 4; ++k) {
            int dx = k == 1 || k == 2 ? 1 : 0;
            int dy = k >= 2 ? 1 : 0;
            double px = double(gx + dx) / grid * 2 - 1;
            double py = double(gy + dy) / grid * 2 - 1;
            if (px * px + py * py >= 1) {
              in = false;
              break;
            }
            double z = std::sqrt(1 - px * px - py * py) * (side == 0 ? 1 : -1);
            vals[k] = u_.eval_d(px, -py, z);
            pts[k][0] = ox + (px + 1) / 2 * panel;
            pts[k][1] = oy + (py + 1) / 2 * panel;
          }
          if (!in) continue;
          // edge crossings of the sign change
          std::vector<std::pair<double, double>> cross;
          for (int k = 0; k < 4; ++k) {
            int k2 = (k + 1) % 4;
            if ((vals[k] > 0) == (vals[k2] > 0)) continue;
            double t = vals[k] / (vals[k] - vals[k2]);
            cross.push_back({pts[k][0] + t * (pts[k2][0] - pts[k][0]),
                             pts[k][1] + t * (pts[k2][1] - pts[k][1])});
          }
          if (cross.size() == 2)
            svg << "<line x1='" << cross[0].first << "' y1='" << cross[0].second
                << "' x2='" << cross[1].first << "' y2='" << cross[1].second
                << "'/>\n";
        }
      svg << "</g>\n";
      svg << "<circle cx='" << cx << "' cy='" << cy << "' r='" << r
          << "' fill='none' stroke='gray' stroke-dasharray='4 3'/>\n";
      svg << "<text x='" << cx << "' y='" << oy + panel + 18
          << "' text-anchor='middle' font-size='13'>"
          << (side == 0 ? "upper hemisphere (x2 &gt; 0)" : "lower hemisphere (x2 &lt; 0)")
          << "</text>\n";
    }
    // legend; hemispheres are antipodal: ind(lower point) = N+1 - ind(upper)
    double ly = panel + margin_ + 36;
    svg << "<text x='" << margin_ << "' y='" << ly
        << "' font-size='13'>index:</text>\n";
    for (int v = 0; v <= net_.N + 1; ++v) {
      double lx = margin_ + 60 + v * 64;
      svg << "<rect x='" << lx << "' y='" << ly - 12 << "' width='16' height='16' fill='"
          << color(v) << "'/>\n";
      svg << "<text x='" << lx + 20 << "' y='" << ly << "' font-size='13'>" << v
          << "</text>\n";
    }
    svg << "<text x='" << margin_ << "' y='" << ly + 22
        << "' font-size='12'>panels are antipodal images: ind(-x) = N+1-ind(x) off the curve</text>\n";
    svg << "</svg>\n";
    return svg.str();
  }

  void render_to_file(const std::string& path, int grid = 120) const {
    std::ofstream os(path);
    if (!os) throw InputError("cannot write " + path);
    os << render(grid);
  }

 private:
  const Net& net_;
  const TernaryForm& u_;
  double margin_ = 24;

  // floating negative inertia index via symmetric elimination with pivoting
  static int negative_index_d(const std::vector<std::vector<double>>& mats, int n,
                              const double* x) {
    std::vector<double> a(size_t(n) * n, 0.0);
    for (size_t m = 0; m < mats.size(); ++m)
      for (int i = 0; i < n * n; ++i) a[i] += x[m] * mats[m][i];
    std::vector<int> act(n);
    std::iota(act.begin(), act.end(), 0);
    int neg = 0;
    double tol = 1e-11;
    while (!act.empty()) {
      int piv = -1;
      double best = tol;
      for (int i : act)
        if (std::fabs(a[size_t(i) * n + i]) > best) {
          best = std::fabs(a[size_t(i) * n + i]);
          piv = i;
        }
      if (piv < 0) {
        // off-diagonal hyperbolic block or numerically zero rest
        int bi = -1, bj = -1;
        double bb = tol;
        for (size_t s = 0; s < act.size(); ++s)
          for (size_t t = s + 1; t < act.size(); ++t)
            if (std::fabs(a[size_t(act[s]) * n + act[t]]) > bb) {
              bb = std::fabs(a[size_t(act[s]) * n + act[t]]);
              bi = act[s];
              bj = act[t];
            }
        if (bi < 0) break;
        neg += 1;  // hyperbolic pair contributes one negative
        std::vector<int> rest;
        for (int i : act)
          if (i != bi && i != bj) rest.push_back(i);
        double inv = 1.0 / a[size_t(bi) * n + bj];
        for (int r : rest)
          for (int c : rest)
            a[size_t(r) * n + c] -= (a[size_t(r) * n + bi] * a[size_t(bj) * n + c] +
                                     a[size_t(r) * n + bj] * a[size_t(bi) * n + c]) *
                                    inv;
        act = rest;
        continue;
      }
      if (a[size_t(piv) * n + piv] < 0) ++neg;
      std::vector<int> rest;
      for (int i : act)
        if (i != piv) rest.push_back(i);
      double inv = 1.0 / a[size_t(piv) * n + piv];
      for (int r : rest)
        for (int c : rest)
          a[size_t(r) * n + c] -= a[size_t(r) * n + piv] * a[size_t(piv) * n + c] * inv;
      act = rest;
    }
    return neg;
  }

  static std::string color(int ind) {
    static const char* palette[] = {"#2166ac", "#67a9cf", "#d1e5f0", "#fddbc7",
                                    "#ef8a62", "#b2182b", "#67001f"};
    int k = ind < 0 ? 0 : (ind > 6 ? 6 : ind);
    return palette[k];
  }
};

}  // namespace qnets
