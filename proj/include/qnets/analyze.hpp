#pragma once

#include <optional>
#include <string>

#include "qnets/indexfn.hpp"
#include "qnets/jsonio.hpp"
#include "qnets/laws.hpp"
#include "qnets/oracle.hpp"
#include "qnets/spectral.hpp"
#include "qnets/topology.hpp"

namespace qnets {

enum class ConsistencyVerdict { consistent, inconsistent, not_checked };

inline const char* to_string(ConsistencyVerdict v) {
  switch (v) {
    case ConsistencyVerdict::consistent: return "consistent";
    case ConsistencyVerdict::inconsistent: return "inconsistent";
    default: return "not-checked";
  }
}

struct AnalyzeOptions {
  bool run_oracle = true;
  OracleOptions oracle;
};

// Everything the analyze pipeline produces, plus cross-check verdicts.
struct AnalysisResult {
  Net net;
  TernaryForm spectral;
  SphericalArrangement arrangement;
  IndexMap index;
  Filtration filt;
  E2Table e2;
  PredictionReport prediction;
  IndexOrientation orientation;
  int chi = 0;

  std::optional<int> oracle_b0;        // components (N=4) or points (N=3)
  std::optional<int> oracle_chi;       // chi(RP^N \ V_R) derived from counts
  ConsistencyVerdict prediction_verdict = ConsistencyVerdict::not_checked;
  ConsistencyVerdict chi_verdict = ConsistencyVerdict::not_checked;
  ConsistencyVerdict quartic_law_verdict = ConsistencyVerdict::not_checked;
  std::vector<std::string> oracle_warnings;
};

// Hilb(N+1) values known from the literature table, rendered as context in
// reports; entries are closed ranges.
inline std::optional<std::pair<int, int>> hilb_table(int N) {
  switch (N) {
    case 3: return std::make_pair(4, 4);
    case 4: return std::make_pair(6, 6);
    case 5: return std::make_pair(9, 9);
    case 6: return std::make_pair(13, 13);
    case 7: return std::make_pair(17, 18);
    default: return std::nullopt;
  }
}

inline AnalysisResult analyze(const Net& net, const AnalyzeOptions& opt = {}) {
  AnalysisResult res;
  res.net = net;
  net.validate();
  res.spectral = spectral_form(net);
  if (certify_nonsingular(res.spectral) != Verdict::nonsingular)
    throw SingularInput("analyze: spectral curve is singular");
  res.arrangement = ArrangementBuilder(res.spectral).build();
  res.index = index_map(net, res.arrangement);
  verify_axioms(res.index, res.arrangement, net);
  res.filt = filtration(res.index, res.arrangement);
  res.e2 = e2_table(res.filt, res.index);
  check_deep_nest(res.index, res.arrangement, res.filt);
  res.chi = chi_Lplus(res.e2);
  res.prediction = predict_b0(res.index, res.arrangement, res.arrangement.topo);
  res.orientation = index_orientation(res.index, res.arrangement);

  if (opt.run_oracle && net.r == 2 && (net.N == 3 || net.N == 4)) {
    if (net.N == 3) {
      SolutionSet sol = solve_zero_dim(net.members, opt.oracle);
      res.oracle_b0 = sol.count();
      res.oracle_warnings = sol.warnings;
      // chi(RP^3 minus m points) = m
      res.oracle_chi = sol.count();
      EmptyOvalLawResult law = empty_oval_law_check(net, opt.oracle);
      res.quartic_law_verdict = law.holds ? ConsistencyVerdict::consistent
                                          : ConsistencyVerdict::inconsistent;
    } else {
      CurveCountResult cc = count_components_curve(net.members, opt.oracle);
      res.oracle_b0 = cc.count;
      res.oracle_warnings = cc.warnings;
      // chi(RP^4 minus a disjoint union of circles) = chi(RP^4) = 1
      res.oracle_chi = 1;
    }
    res.prediction_verdict = (res.prediction.b0_lower <= *res.oracle_b0 &&
                              *res.oracle_b0 <= res.prediction.b0_upper)
                                 ? ConsistencyVerdict::consistent
                                 : ConsistencyVerdict::inconsistent;
    res.chi_verdict = res.chi == *res.oracle_chi ? ConsistencyVerdict::consistent
                                                 : ConsistencyVerdict::inconsistent;
  }
  return res;
}

inline Json analysis_to_json(const AnalysisResult& res) {
  Json j;
  j["net"] = net_to_json(res.net);
  j["spectral_form"] = ternary_to_json(res.spectral);
  Json topo;
  topo["ovals"] = int(res.arrangement.topo.ovals.size());
  topo["one_sided"] = res.arrangement.topo.has_one_sided;
  NestSummary ns = nest_queries(res.arrangement.topo);
  topo["d_max"] = ns.d_max;
  topo["max_nest_depth"] = ns.max_nest_depth;
  topo["beta"] = ns.beta;
  Json census = Json::object();
  for (int dep = 1; dep < int(ns.count_at_depth.size()); ++dep)
    if (ns.count_at_depth[dep])
      census[std::to_string(dep)] = ns.count_at_depth[dep];
  topo["depth_census"] = census;
  j["topology"] = topo;
  j["arrangement"] = arrangement_to_json(res.arrangement);
  Json idx;
  idx["i_max"] = res.index.i_max;
  idx["i_min"] = res.index.i_min;
  idx["regions"] = res.index.region_ind;
  Json inner = Json::object();
  for (auto& [cid, v] : res.index.inner_index) inner[std::to_string(cid)] = v;
  idx["inner_index"] = inner;
  j["index"] = idx;
  Json filt = Json::array();
  for (const auto& lv : res.filt.levels) {
    Json fj;
    fj["i"] = lv.level;
    fj["b0"] = lv.b0;
    fj["b1"] = lv.b1;
    fj["regions"] = int(lv.regions.size());
    filt.push_back(fj);
  }
  j["filtration"] = filt;
  j["prediction"] = prediction_to_json(res.prediction);
  j["chi_L_plus"] = res.chi;
  Json orient = Json::object();
  for (auto& [oid, inward] : res.orientation.inward_canon)
    orient[std::to_string(oid)] = inward ? "inward" : "outward";
  j["index_orientation"] = orient;
  if (res.oracle_b0) {
    Json o;
    o["b0"] = *res.oracle_b0;
    o["chi"] = *res.oracle_chi;
    o["warnings"] = res.oracle_warnings;
    j["oracle"] = o;
  }
  j["verdicts"] = Json{{"prediction_vs_oracle", to_string(res.prediction_verdict)},
                       {"euler_vs_oracle", to_string(res.chi_verdict)},
                       {"quartic_law", to_string(res.quartic_law_verdict)}};
  // context: the bracketing of the maximal component count by the Hilbert
  // number, and the general bounds, rendered for this N
  int N = res.net.N;
  Json bounds;
  if (auto h = hilb_table(N)) {
    bounds["hilb_known"] = Json::array({h->first, h->second});
    bounds["max_b0_lower_via_hilb"] = h->first;      // Hilb(N+1) <= MAX(2,N)
    bounds["max_b0_upper_via_hilb"] = h->second + 1; // MAX(2,N) <= Hilb(N+1)+1
  }
  if (N >= 4) {
    int k = N / 2 + 1;
    bounds["lower_quarter"] = (N - 1) * (N + 5) / 4 - 2;    // strict lower bound
    bounds["upper_petrovsky"] = 3 * k * (k - 1) / 2 + 2;
  }
  j["bound_table"] = bounds;
  return j;
}

}  // namespace qnets
