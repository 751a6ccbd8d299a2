// Command-line front end: analyze nets end to end, emit the extremal
// constructions, run determinantal roundtrips and numerical oracles, render
// index landscapes.
//
// Exit codes: 0 ok, 2 input error, 3 singular/degenerate input,
// 4 search exhausted, 5 internal assertion.

#include <CLI11.hpp>
#include <iostream>

#include "qnets/analyze.hpp"
#include "qnets/constructions.hpp"
#include "qnets/dixon.hpp"
#include "qnets/jsonio.hpp"
#include "qnets/svg.hpp"

using namespace qnets;

namespace {

struct CommonOut {
  std::string json_out;
  void emit(const Json& j) const {
    if (json_out.empty())
      std::cout << j.dump(2) << std::endl;
    else
      write_json_file(json_out, j);
  }
};

int run(int argc, char** argv) {
  CLI::App app{"real nets of quadrics: spectral curves, index topology, "
               "component-count predictions and oracles"};
  app.require_subcommand(1);

  // ---- analyze
  auto* analyze_cmd = app.add_subcommand("analyze", "full pipeline on a net file");
  std::string net_path, svg_out;
  CommonOut out;
  uint64_t seed = 20240808;
  bool oracle_on = true;
  double tol_residual = 1e-10, tol_dedup = 1e-6, tol_step = 1e-2;
  analyze_cmd->add_option("net", net_path, "net JSON file")->required();
  analyze_cmd->add_option("--json-out", out.json_out, "write the report here");
  analyze_cmd->add_option("--svg-out", svg_out, "write an SVG rendering here");
  analyze_cmd->add_option("--seed", seed, "oracle seed");
  analyze_cmd->add_option("--oracle", oracle_on, "run the numerical oracle (on/off)");
  analyze_cmd->add_option("--residual-tol", tol_residual, "oracle residual tolerance");
  analyze_cmd->add_option("--dedup-tol", tol_dedup, "oracle dedup tolerance");
  analyze_cmd->add_option("--step-tol", tol_step, "oracle tracking step");

  // ---- construct
  auto* construct_cmd = app.add_subcommand("construct", "emit extremal examples");
  std::string kind;
  int degree = 6, dimension = 4;
  double epsilon_floor_log2 = 62;
  std::string artifact_out;
  construct_cmd->add_option("kind", kind, "hilbert | harnack")->required();
  construct_cmd->add_option("--degree", degree, "curve degree (hilbert)");
  construct_cmd->add_option("--dimension", dimension, "ambient dimension (harnack)");
  construct_cmd->add_option("--epsilon-floor", epsilon_floor_log2,
                            "log2 of the smallest epsilon tried");
  construct_cmd->add_option("--seed", seed, "oracle seed (harnack validation)");
  construct_cmd->add_option("--json-out", out.json_out, "write the record here");
  construct_cmd->add_option("--artifact-out", artifact_out,
                            "write the curve/net JSON here");

  // ---- dixon
  auto* dixon_cmd = app.add_subcommand("dixon", "determinantal roundtrip on a net");
  dixon_cmd->add_option("net", net_path, "net JSON file")->required();
  dixon_cmd->add_option("--json-out", out.json_out, "write the report here");

  // ---- oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "numerical component counts");
  std::string mode = "auto";
  oracle_cmd->add_option("net", net_path, "net JSON file")->required();
  oracle_cmd->add_option("--mode", mode, "curve | points | auto");
  oracle_cmd->add_option("--seed", seed, "oracle seed");
  oracle_cmd->add_option("--json-out", out.json_out, "write the report here");

  // ---- render
  auto* render_cmd = app.add_subcommand("render", "SVG of the index landscape");
  render_cmd->add_option("net", net_path, "net JSON file")->required();
  render_cmd->add_option("--svg-out", svg_out, "output SVG path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;  // usage problems are input errors
  }

  OracleOptions oopt;
  oopt.seed = seed;
  oopt.residual_tol = tol_residual;
  oopt.dedup_tol = tol_dedup;
  oopt.step = tol_step;

  if (app.got_subcommand(analyze_cmd)) {
    Net net = net_from_json(read_json_file(net_path));
    AnalyzeOptions aopt;
    aopt.run_oracle = oracle_on;
    aopt.oracle = oopt;
    AnalysisResult res = analyze(net, aopt);
    out.emit(analysis_to_json(res));
    if (!svg_out.empty())
      SvgRenderer(res.net, res.spectral).render_to_file(svg_out);
    return 0;
  }
  if (app.got_subcommand(construct_cmd)) {
    if (kind == "hilbert") {
      HilbertOptions hopt;
      if (epsilon_floor_log2 < 1 || epsilon_floor_log2 > 2000)
        throw InputError("construct: bad epsilon floor");
      hopt.epsilon_floor = Rational(1, Integer(1) << int(epsilon_floor_log2));
      HilbertResult r = hilbert_curve(degree, hopt);
      out.emit(hilbert_to_json(r));
      if (!artifact_out.empty()) write_json_file(artifact_out, ternary_to_json(r.curve));
      return 0;
    }
    if (kind == "harnack") {
      HarnackOptions hopt;
      hopt.oracle = oopt;
      HarnackResult r = harnack_intersection(dimension, hopt);
      out.emit(harnack_to_json(r, oopt));
      if (!artifact_out.empty()) {
        if (dimension >= 4 && r.forms.size() == 3) {
          Net net;
          net.N = dimension;
          net.r = 2;
          net.members = r.forms;
          write_json_file(artifact_out, net_to_json(net));
        } else {
          Json j = harnack_to_json(r, oopt);
          write_json_file(artifact_out, j["forms"]);
        }
      }
      return 0;
    }
    throw InputError("construct: kind must be hilbert or harnack");
  }
  if (app.got_subcommand(dixon_cmd)) {
    Net net = net_from_json(read_json_file(net_path));
    RoundtripReport rep = verify_roundtrip(net);
    out.emit(roundtrip_to_json(rep));
    return 0;
  }
  if (app.got_subcommand(oracle_cmd)) {
    Net net = net_from_json(read_json_file(net_path));
    if (mode == "auto") mode = net.N == net.r + 1 ? "points" : "curve";
    if (mode == "points") {
      SolutionSet s = solve_zero_dim(net.members, oopt);
      out.emit(solutions_to_json(s, oopt));
    } else {
      CurveCountResult c = count_components_curve(net.members, oopt);
      out.emit(oracle_to_json(c, oopt));
    }
    return 0;
  }
  if (app.got_subcommand(render_cmd)) {
    Net net = net_from_json(read_json_file(net_path));
    TernaryForm u = spectral_form(net);
    SvgRenderer(net, u).render_to_file(svg_out);
    return 0;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return e.exit_code();
  } catch (const CLI::ParseError&) {
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << std::endl;
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << std::endl;
    return 5;
  }
}
