#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "qnets/constructions.hpp"
#include "qnets/dixon.hpp"
#include "qnets/forms.hpp"
#include "qnets/indexfn.hpp"
#include "qnets/laws.hpp"
#include "qnets/oracle.hpp"
#include "qnets/ternary.hpp"
#include "qnets/topology.hpp"

namespace qnets {

using Json = nlohmann::ordered_json;

// ---- rationals: emitted as canonical "p/q" strings (or "p" for integers)

inline Json rat_json(const Rational& q) { return to_string(q); }

inline Rational rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(long(j.get<long long>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InputError("expected a rational as integer or \"p/q\" string");
}

// ---- nets

inline Json net_to_json(const Net& net) {
  Json j;
  j["N"] = net.N;
  j["r"] = net.r;
  Json mats = Json::array();
  for (const auto& m : net.members) {
    Json rows = Json::array();
    for (int i = 0; i < m.dim(); ++i) {
      Json row = Json::array();
      for (int k = 0; k < m.dim(); ++k) row.push_back(rat_json(m.at(i, k)));
      rows.push_back(row);
    }
    mats.push_back(rows);
  }
  j["matrices"] = mats;
  return j;
}

inline Net net_from_json(const Json& j) {
  Net net;
  if (!j.contains("N") || !j.contains("r") || !j.contains("matrices"))
    throw InputError("net json: missing N, r or matrices");
  net.N = j.at("N").get<int>();
  net.r = j.at("r").get<int>();
  for (const auto& mj : j.at("matrices")) {
    int n = int(mj.size());
    SymmetricForm f(n);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        Rational v = rat_from_json(mj.at(i).at(k));
        if (k >= i) {
          if (k > i && !(rat_from_json(mj.at(k).at(i)) == v))
            throw InputError("net json: matrix not symmetric");
          f.set(i, k, v);
        }
      }
    net.members.push_back(f);
  }
  net.validate();
  return net;
}

// ---- ternary forms: {"d": int, "coeffs": {"a,b,c": "p/q"}}, keys in
// lexicographic exponent order (std::map order)

inline Json ternary_to_json(const TernaryForm& f) {
  Json j;
  j["d"] = f.degree();
  Json coeffs = Json::object();
  for (const auto& [e, c] : f.coeffs()) {
    std::ostringstream key;
    key << e[0] << "," << e[1] << "," << e[2];
    coeffs[key.str()] = rat_json(c);
  }
  j["coeffs"] = coeffs;
  return j;
}

inline TernaryForm ternary_from_json(const Json& j) {
  TernaryForm f;
  for (const auto& [key, val] : j.at("coeffs").items()) {
    Exponent e{};
    std::istringstream is(key);
    char comma;
    is >> e[0] >> comma >> e[1] >> comma >> e[2];
    if (is.fail()) throw InputError("ternary json: bad exponent key " + key);
    f.add_term(e, rat_from_json(val));
  }
  if (!f.is_zero() && j.contains("d") && f.degree() != j.at("d").get<int>())
    throw InputError("ternary json: degree mismatch");
  return f;
}

// ---- spherical arrangement dump

inline Json arrangement_to_json(const SphericalArrangement& arr) {
  Json j;
  j["degree"] = arr.d;
  j["euler"] = arr.euler_characteristic();
  j["vertices"] = arr.total_vertices;
  j["edges"] = arr.total_edges;
  Json regions = Json::array();
  for (const auto& r : arr.regions) {
    Json rj;
    rj["id"] = r.id;
    rj["involution"] = r.involution;
    rj["circles"] = r.circles;
    Json sample = Json::array();
    for (const auto& c : r.sample) sample.push_back(rat_json(c));
    rj["sample"] = sample;
    rj["tropical"] = r.tropical;
    regions.push_back(rj);
  }
  j["regions"] = regions;
  Json circles = Json::array();
  for (const auto& c : arr.circles) {
    Json cj;
    cj["id"] = c.id;
    cj["involution"] = c.involution;
    cj["sides"] = Json::array({c.region_below, c.region_above});
    cj["one_sided"] = c.one_sided;
    cj["planar_component"] = c.planar_id;
    cj["vertices"] = c.n_vertices;
    circles.push_back(cj);
  }
  j["circles"] = circles;
  j["equator"] = arr.equator_circle;
  Json ovals = Json::array();
  for (const auto& o : arr.topo.ovals) {
    Json oj;
    oj["id"] = o.id;
    oj["parent"] = o.parent;
    oj["depth"] = o.depth;
    oj["lifts"] = Json::array({o.lift1, o.lift2});
    ovals.push_back(oj);
  }
  j["ovals"] = ovals;
  j["one_sided"] = arr.topo.has_one_sided;
  return j;
}

// ---- index / prediction

inline Json prediction_to_json(const PredictionReport& rep) {
  Json j;
  j["case"] = rep.case_tag;
  j["b0_lower"] = rep.b0_lower;
  j["b0_upper"] = rep.b0_upper;
  j["beta"] = rep.beta;
  j["i_max"] = rep.i_max;
  Json omega = Json::array();
  for (const auto& ob : rep.omega_betti) omega.push_back(Json::array({ob[0], ob[1]}));
  j["omega_betti"] = omega;
  Json e2 = Json::array();
  for (int q = 0; q <= rep.e2.N + 1; ++q)
    e2.push_back(Json::array(
        {rep.e2.entry(0, q), rep.e2.entry(1, q), rep.e2.entry(2, q)}));
  j["e2"] = e2;
  j["notes"] = rep.notes;
  return j;
}

// ---- dixon roundtrip

inline Json roundtrip_to_json(const RoundtripReport& rep) {
  Json j;
  j["c"] = rat_json(rep.c);
  j["identities_ok"] = rep.identities_ok;
  j["beta_matches_net"] = rep.beta_matches_net;
  Json beta = Json::array();
  for (const auto& row : rep.beta.beta) {
    Json rj = Json::array();
    for (const auto& f : row) {
      // linear form as its coefficient triple
      rj.push_back(Json::array({rat_json(f.coeff({1, 0, 0})),
                                rat_json(f.coeff({0, 1, 0})),
                                rat_json(f.coeff({0, 0, 1}))}));
    }
    beta.push_back(rj);
  }
  j["beta"] = beta;
  j["spectral_form"] = ternary_to_json(rep.u);
  return j;
}

// ---- oracle reports

inline Json oracle_to_json(const CurveCountResult& r, const OracleOptions& opt,
                           bool dump_points = false) {
  Json j;
  j["count"] = r.count;
  j["warnings"] = r.warnings;
  j["seed"] = opt.seed;
  j["tolerances"] =
      Json{{"residual", opt.residual_tol}, {"dedup", opt.dedup_tol}, {"step", opt.step}};
  Json loops = Json::array();
  for (const auto& l : r.loops) {
    Json lj;
    lj["closed"] = l.closed;
    lj["antipodal"] = l.antipodal_closed;
    lj["length"] = l.length;
    if (dump_points) {
      Json pts = Json::array();
      for (const auto& p : l.points) pts.push_back(p);
      lj["points"] = pts;
    }
    loops.push_back(lj);
  }
  j["loops"] = loops;
  return j;
}

inline Json solutions_to_json(const SolutionSet& s, const OracleOptions& opt) {
  Json j;
  j["count"] = s.count();
  j["warnings"] = s.warnings;
  j["seed"] = opt.seed;
  Json pts = Json::array();
  for (const auto& p : s.points) pts.push_back(p);
  j["points"] = pts;
  return j;
}

// ---- constructions

inline Json hilbert_to_json(const HilbertResult& r) {
  Json j;
  j["degree"] = r.curve.degree();
  j["curve"] = ternary_to_json(r.curve);
  j["submaximal_depth"] = r.submaximal_depth;
  j["submaximal_count"] = r.submaximal_count;
  Json stages = Json::array();
  for (const auto& st : r.stages) {
    Json sj;
    sj["degree"] = st.degree;
    sj["epsilon"] = rat_json(st.epsilon);
    Json ch = Json::array();
    for (const auto& c : st.chords) ch.push_back(rat_json(c));
    sj["chords"] = ch;
    sj["ovals"] = st.oval_count;
    Json census = Json::object();
    for (auto& [d, c] : st.depth_census) census[std::to_string(d)] = c;
    sj["depth_census"] = census;
    stages.push_back(sj);
  }
  j["stages"] = stages;
  return j;
}

inline Json harnack_to_json(const HarnackResult& r, const OracleOptions& opt) {
  Json j;
  j["N"] = r.N;
  j["components"] = r.components;
  j["expected"] = harnack_component_count(r.N);
  j["genus"] = genus_check(r.N);
  Json stages = Json::array();
  for (const auto& st : r.stages) {
    Json sj;
    sj["N"] = st.N;
    sj["epsilon"] = rat_json(st.epsilon);
    sj["delta"] = rat_json(st.delta);
    sj["components"] = st.components;
    stages.push_back(sj);
  }
  j["stages"] = stages;
  Json forms = Json::array();
  for (const auto& q : r.forms) {
    Json rows = Json::array();
    for (int i = 0; i < q.dim(); ++i) {
      Json row = Json::array();
      for (int k = 0; k < q.dim(); ++k) row.push_back(rat_json(q.at(i, k)));
      rows.push_back(row);
    }
    forms.push_back(rows);
  }
  j["forms"] = forms;
  j["oracle"] = oracle_to_json(r.final_count, opt);
  return j;
}

inline void write_json_file(const std::string& path, const Json& j) {
  std::ofstream os(path);
  if (!os) throw InputError("cannot write " + path);
  os << j.dump(2) << "\n";
}

inline Json read_json_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw InputError("cannot read " + path);
  Json j;
  try {
    is >> j;
  } catch (const std::exception& e) {
    throw InputError(std::string("json parse error: ") + e.what());
  }
  return j;
}

}  // namespace qnets
