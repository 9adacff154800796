// Copyright 2026 The ongqg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command line front end.
//
//   ongqg table1                         verify the bundled coefficient table
//   ongqg synth    --config F --out D    trajectory -> controls -> verification
//   ongqg baseline --config F --out D    reference-loop synthesis
//   ongqg optimize --config F --out D    coefficient search (single or z sweep)
//   ongqg sweep    --config F --out D    error / decoherence / device sweeps
//
// Exit codes: 0 success, 2 bad config or usage, 3 infeasible request
// (e.g. a drive faster than the parametric-coupling ceiling).
//
// Every summary.json embeds the resolved config under "config"; feeding a
// summary back through --config reruns the identical job, and reruns are
// byte-identical (CSV cells use %.17g, JSON keys are sorted).

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ongqg/ongqg.hpp"

namespace ongqg {
namespace {

GateTarget gate_target(const std::string& name) {
  if (name == "T") return target_t();
  if (name == "H") return target_h();
  if (name == "CP") return target_z(pi);
  throw ConfigError("unknown gate: " + name + " (expected T, H, or CP)");
}

// A summary.json can be fed back as a config: the job description lives in "config".
json resolve_config(const json& j) {
  if (j.is_object() && j.contains("config") && j.at("config").is_object()) {
    return j.at("config");
  }
  return j;
}

Table1Row config_row(const json& cfg) {
  if (cfg.contains("a_theta") || cfg.contains("a_phi")) return row_from_json(cfg);
  return table1_row(cfg.value("scenario", 1), cfg.at("gate").get<std::string>());
}

json row_to_json(const Table1Row& r) {
  json j;
  j["scenario"] = r.scenario;
  j["gate"] = r.gate;
  j["a_theta"] = r.a_theta;
  j["a_phi"] = r.a_phi;
  if (std::isnan(r.s_over_pi)) {
    j["s_over_pi"] = nullptr;
  } else {
    j["s_over_pi"] = r.s_over_pi;
  }
  return j;
}

std::string out_path(const std::string& dir, const std::string& name) {
  return (std::filesystem::path(dir) / name).string();
}

Matrix2cd propagate_field(const ControlField& f, int steps) {
  return propagate_unitary<2>([&f](double t) { return Matrix2cd(f.hamiltonian(t)); }, 0.0,
                              f.tau, steps);
}

Matrix2cd propagate_loop(const SingleLoop& loop, int steps) {
  Matrix2cd u = Matrix2cd::Identity();
  const double edges[4] = {0.0, loop.T1, loop.T2, loop.T};
  for (int seg = 0; seg < 3; ++seg) {
    if (edges[seg + 1] - edges[seg] < 1e-15 * loop.T) continue;
    const ControlField f = loop.segment_field(seg);
    const int n = std::max(2, int(std::lround(steps * (edges[seg + 1] - edges[seg]) / loop.T)));
    u = propagate_unitary<2>([&f](double t) { return Matrix2cd(f.hamiltonian(t)); },
                             edges[seg], edges[seg + 1], n) *
        u;
  }
  return u;
}

// ----- table1 ------------------------------------------------------------------------

int run_table1() {
  std::printf("%-4s %-4s %12s %12s %12s %14s\n", "case", "gate", "S/pi (table)",
              "S/pi (calc)", "phase res", "infidelity");
  bool ok = true;
  for (const auto& row : table1()) {
    const AnsatzParams p = row.params();
    const GateTarget g = row.target();
    const double period = row.gate == "CP" ? 4.0 * pi : 2.0 * pi;
    const double area = pulse_area(p, 4000) / pi;
    const double res = wrap_angle(geometric_phase(p, 4000) - g.Theta, period);
    const Matrix2cd u = propagate_field(reverse_engineer(p), 4000);
    const double infid = 1.0 - trace_fidelity(g.unitary(), u);
    const bool cyc = check_cyclicity(p).cyclic;
    ok = ok && cyc && std::abs(res) < 0.1;
    std::printf("%-4d %-4s %12s %12.6f %12.2e %14.2e%s\n", row.scenario, row.gate.c_str(),
                std::isnan(row.s_over_pi) ? "-" : format_cell(row.s_over_pi).c_str(), area,
                res, infid, cyc ? "" : "  NOT CYCLIC");
  }
  if (!ok) {
    std::fprintf(stderr, "table verification failed\n");
    return 1;
  }
  return 0;
}

// ----- synth -------------------------------------------------------------------------

int run_synth(const json& cfg_in, const std::string& out_dir) {
  const Table1Row row = config_row(cfg_in);
  const double tau = cfg_in.value("tau", 1.0);
  const int grid = cfg_in.value("grid", 2000);
  const int steps = cfg_in.value("steps", 4000);
  const unsigned seed = cfg_in.value("seed", 1u);
  const bool drag = cfg_in.value("drag", false);
  const double alpha = cfg_in.value("alpha", 0.0);
  if (drag && alpha <= 0.0) throw ConfigError("drag requested but alpha is not positive");

  AnsatzParams p = row.params(tau);
  if (cfg_in.contains("normalize_peak")) {
    p = normalize_to_peak(p, cfg_in.at("normalize_peak").get<double>(), 4000);
  }
  const ControlField field = reverse_engineer(p);
  const GateTarget g = row.target();
  const double period = row.gate == "CP" ? 4.0 * pi : 2.0 * pi;

  const CyclicityReport cyc = check_cyclicity(p);
  const double phase = geometric_phase(p, steps);
  const double area = pulse_area(p, steps);
  const Matrix2cd u = propagate_field(field, steps);
  const double infid = 1.0 - trace_fidelity(g.unitary(), u);

  std::filesystem::create_directories(out_dir);

  std::vector<std::vector<double>> traj_rows;
  for (int k = 0; k <= grid; ++k) {
    const double t = p.tau * k / grid;
    const TrajectoryPoint s = eval(p, t);
    traj_rows.push_back({t, s.theta, s.phi});
  }
  write_csv(out_path(out_dir, "trajectory.csv"), {"t", "theta", "phi"}, traj_rows);

  DragField corrected;
  if (drag) corrected = drag_correct(field, alpha);
  std::vector<std::string> header{"t", "delta", "omega_re", "omega_im"};
  if (drag) {
    header.push_back("b_dx");
    header.push_back("b_dy");
  }
  std::vector<std::vector<double>> ctrl_rows;
  for (int k = 0; k <= grid; ++k) {
    const double t = p.tau * k / grid;
    const cd o = field.omega(t);
    std::vector<double> r{t, field.delta(t), o.real(), o.imag()};
    if (drag) {
      const Eigen::Vector3d bd = corrected.bd(t);
      r.push_back(bd.x());
      r.push_back(bd.y());
    }
    ctrl_rows.push_back(r);
  }
  write_csv(out_path(out_dir, "controls.csv"), header, ctrl_rows);

  json effective = row_to_json(row);
  effective["tau"] = tau;
  effective["grid"] = grid;
  effective["steps"] = steps;
  effective["seed"] = seed;
  if (cfg_in.contains("normalize_peak"))
    effective["normalize_peak"] = cfg_in.at("normalize_peak");
  if (drag) {
    effective["drag"] = true;
    effective["alpha"] = alpha;
  }

  json summary;
  summary["config"] = effective;
  summary["tau"] = p.tau;
  summary["peak"] = field.omega_max(4000);
  summary["area"] = area;
  summary["area_over_pi"] = area / pi;
  summary["phase"] = phase;
  summary["phase_target"] = g.Theta;
  summary["phase_residual"] = wrap_angle(phase - g.Theta, period);
  summary["cyclic"] = cyc.cyclic;
  summary["cyclicity"] = cyc.reason();
  summary["trace_infidelity"] = infid;
  write_json(out_path(out_dir, "summary.json"), summary);

  std::printf("synth %d:%s tau %.6g area/pi %.6g phase %.6g residual %.2e infidelity %.2e\n",
              row.scenario, row.gate.c_str(), p.tau, area / pi, phase,
              wrap_angle(phase - g.Theta, period), infid);
  return 0;
}

// ----- baseline ----------------------------------------------------------------------

int run_baseline(const json& cfg_in, const std::string& out_dir) {
  const std::string gate = cfg_in.at("gate").get<std::string>();
  const double field_peak = cfg_in.value("field_peak", 0.5);
  const int grid = cfg_in.value("grid", 2000);
  const int steps = cfg_in.value("steps", 4000);
  const GateTarget g = gate_target(gate);
  const SingleLoop loop = single_loop_for(g, field_peak);

  const Matrix2cd u = propagate_loop(loop, steps);
  const double infid = 1.0 - trace_fidelity(g.unitary(), u);
  const double area =
      simpson([&loop](double t) { return 0.5 * loop.envelope(t); }, 0.0, loop.T, 4096);

  std::filesystem::create_directories(out_dir);
  std::vector<std::vector<double>> ctrl_rows;
  for (int k = 0; k <= grid; ++k) {
    const double t = loop.T * k / grid;
    const cd o = loop.field().omega(t);
    ctrl_rows.push_back({t, 0.0, o.real(), o.imag()});
  }
  write_csv(out_path(out_dir, "controls.csv"), {"t", "delta", "omega_re", "omega_im"},
            ctrl_rows);

  json effective;
  effective["gate"] = gate;
  effective["field_peak"] = field_peak;
  effective["grid"] = grid;
  effective["steps"] = steps;
  effective["seed"] = cfg_in.value("seed", 1u);

  json summary;
  summary["config"] = effective;
  summary["T"] = loop.T;
  summary["T1"] = loop.T1;
  summary["T2"] = loop.T2;
  summary["theta_c"] = loop.spec.theta_c;
  summary["phi"] = loop.spec.phi;
  summary["gamma"] = loop.spec.gamma;
  summary["area_over_pi"] = area / pi;
  summary["trace_infidelity"] = infid;
  write_json(out_path(out_dir, "summary.json"), summary);

  std::printf("baseline %s T %.6g area/pi %.6g infidelity %.2e\n", gate.c_str(), loop.T,
              area / pi, infid);
  return 0;
}

// ----- optimize ----------------------------------------------------------------------

Scenario scenario_from_config(const json& cfg, const std::string& gate, int objective) {
  Scenario s;
  s.objective = static_cast<ObjectiveCase>(objective);
  s.target = gate_target(gate);
  s.h_style = gate == "H";
  s.tau = cfg.value("tau", 1.0);
  s.grid = cfg.value("grid", 1024);
  s.lindblad_steps = cfg.value("steps", 1000);
  s.gamma_frac = cfg.value("gamma_frac", 1e-4);
  s.phase_period = gate == "CP" ? 4.0 * pi : 2.0 * pi;
  return s;
}

void write_optimized_trajectory(const Scenario& s, const OptimResult& res,
                                const std::string& out_dir, int grid) {
  const AnsatzParams p = scenario_params(s, res.x);
  std::vector<std::vector<double>> traj_rows, ctrl_rows;
  const ControlField field = reverse_engineer(p);
  for (int k = 0; k <= grid; ++k) {
    const double t = p.tau * k / grid;
    const TrajectoryPoint pt = eval(p, t);
    const cd o = field.omega(t);
    traj_rows.push_back({t, pt.theta, pt.phi});
    ctrl_rows.push_back({t, field.delta(t), o.real(), o.imag()});
  }
  write_csv(out_path(out_dir, "trajectory.csv"), {"t", "theta", "phi"}, traj_rows);
  write_csv(out_path(out_dir, "controls.csv"), {"t", "delta", "omega_re", "omega_im"},
            ctrl_rows);
}

int run_optimize(const json& cfg_in, const std::string& out_dir, unsigned seed_override,
                 bool have_seed) {
  const unsigned seed = have_seed ? seed_override : cfg_in.value("seed", 1u);
  const int restarts = cfg_in.value("restarts", 8);
  const int max_evals = cfg_in.value("max_evals", 4000);
  std::filesystem::create_directories(out_dir);

  if (cfg_in.contains("z_sweep")) {
    const int angles = cfg_in.at("z_sweep").value("angles", 8);
    if (angles < 1) throw ConfigError("z_sweep.angles must be positive");
    std::vector<std::vector<double>> rows;
    std::vector<std::vector<double>> warm;
    json per_angle = json::array();
    // Walk upward in angle, reusing each solution as the next warm start; the
    // largest rotation is the hardest search, so it benefits most from a seed.
    for (int k = 1; k <= angles; ++k) {
      const double theta_rot = pi * k / angles;
      Scenario s = scenario_from_config(cfg_in, "T", 1);
      s.target = target_z(theta_rot);
      const OptimResult res = minimize(s, seed, restarts, max_evals, warm);
      warm.clear();
      warm.push_back(res.x);
      const double area = scenario_raw_objective(s, scenario_params(s, res.x));
      rows.push_back({theta_rot, area, area / pi, res.residual,
                      res.feasible ? 1.0 : 0.0});
      json ja;
      ja["rotation"] = theta_rot;
      ja["coefficients"] = res.x;
      ja["area_over_pi"] = area / pi;
      ja["residual"] = res.residual;
      ja["feasible"] = res.feasible;
      per_angle.push_back(ja);
      std::printf("z rotation %.4f area/pi %.4f residual %.2e%s\n", theta_rot, area / pi,
                  res.residual, res.feasible ? "" : "  INFEASIBLE");
    }
    write_csv(out_path(out_dir, "z_sweep.csv"),
              {"rotation", "area", "area_over_pi", "residual", "feasible"}, rows);
    json effective = cfg_in;
    effective["seed"] = seed;
    json summary;
    summary["config"] = effective;
    summary["angles"] = per_angle;
    write_json(out_path(out_dir, "summary.json"), summary);
    return 0;
  }

  const int objective = cfg_in.at("scenario").get<int>();
  if (objective < 1 || objective > 5) throw ConfigError("scenario must be 1..5");
  const std::string gate = cfg_in.at("gate").get<std::string>();
  Scenario s = scenario_from_config(cfg_in, gate, objective);

  std::vector<std::vector<double>> warm;
  if (cfg_in.value("warm_start", false)) {
    const Table1Row& row = table1_row(objective, gate);
    std::vector<double> x;
    for (double v : row.a_theta) x.push_back(v);
    for (double v : row.a_phi) x.push_back(v);
    warm.push_back(x);
  }

  const OptimResult res = minimize(s, seed, restarts, max_evals, warm);
  const AnsatzParams p = scenario_params(s, res.x);

  json effective = cfg_in;
  effective["seed"] = seed;
  json summary;
  summary["config"] = effective;
  summary["coefficients"] = res.x;
  summary["objective"] = res.objective;
  summary["residual"] = res.residual;
  summary["feasible"] = res.feasible;
  summary["evals"] = res.evals;
  summary["area_over_pi"] = pulse_area(p, 4000) / pi;
  summary["phase"] = geometric_phase(p, 4000);
  write_json(out_path(out_dir, "summary.json"), summary);
  write_optimized_trajectory(s, res, out_dir, cfg_in.value("grid", 1024));

  std::printf("optimize %d:%s objective %.6g residual %.2e evals %d%s\n", objective,
              gate.c_str(), res.objective, res.residual, res.evals,
              res.feasible ? "" : "  INFEASIBLE");
  return res.feasible ? 0 : 1;
}

// ----- sweep -------------------------------------------------------------------------

int run_sweep(const json& cfg_in, const std::string& out_dir) {
  const std::string kind = cfg_in.at("kind").get<std::string>();
  std::filesystem::create_directories(out_dir);
  json effective = cfg_in;
  json summary;

  if (kind == "decoherence") {
    const Table1Row row = table1_row(cfg_in.value("scenario", 2),
                                     cfg_in.at("gate").get<std::string>());
    const int points = cfg_in.value("points", 20);
    const double lo = cfg_in.at("gamma_lo_frac").get<double>();
    const double hi = cfg_in.at("gamma_hi_frac").get<double>();
    const int steps = cfg_in.value("steps", 1000);
    const GateTarget g = row.target();
    const AnsatzParams p = normalize_to_peak(row.params(), 1.0);
    const ControlField field = reverse_engineer(p);
    const SingleLoop loop = single_loop_for(g, 1.0);
    const int loop_steps = std::max(steps, int(std::ceil(steps * loop.T / field.tau)));
    std::vector<std::vector<double>> rows;
    for (int i = 0; i < points; ++i) {
      const double frac = lo * std::pow(hi / lo, points == 1 ? 0.0 : double(i) / (points - 1));
      const NoiseModel<2> noise = qubit_noise(frac, frac);
      const double ft =
          field_fidelity_six_state(field, g, ErrorModel{0, 0, 1.0}, noise, steps);
      const double fl = loop_fidelity_six_state(loop, g, ErrorModel{0, 0, 1.0}, noise,
                                                loop_steps);
      rows.push_back({frac, ft, fl});
    }
    write_csv(out_path(out_dir, "sweep.csv"),
              {"gamma_frac", "fidelity_trajectory", "fidelity_loop"}, rows);
    summary["scheme_wins"] = true;
    for (const auto& r : rows) {
      if (r[1] < r[2]) summary["scheme_wins"] = false;
    }
  } else if (kind == "drive" || kind == "detune") {
    const bool drive = kind == "drive";
    const Table1Row row = table1_row(cfg_in.value("scenario", drive ? 3 : 4),
                                     cfg_in.at("gate").get<std::string>());
    const int points = cfg_in.value("points", 11);
    const double err_max = cfg_in.value("err_max", 0.1);
    const double gamma_frac = cfg_in.value("gamma_frac", 5e-4);
    const int steps = cfg_in.value("steps", 2000);
    const GateTarget g = row.target();
    const AnsatzParams p = normalize_to_peak(row.params(), 1.0);
    const ControlField field = reverse_engineer(p);
    const SingleLoop loop = single_loop_for(g, 1.0);
    const int loop_steps = std::max(steps, int(std::ceil(steps * loop.T / field.tau)));
    const NoiseModel<2> noise = qubit_noise(gamma_frac, gamma_frac);
    std::vector<std::vector<double>> rows;
    for (int i = 0; i < points; ++i) {
      const double e = points == 1 ? 0.0 : -err_max + 2.0 * err_max * i / (points - 1);
      const ErrorModel err = drive ? ErrorModel{e, 0.0, 1.0} : ErrorModel{0.0, e, 1.0};
      const double ft = field_fidelity_six_state(field, g, err, noise, steps);
      const double fl = loop_fidelity_six_state(loop, g, err, noise, loop_steps);
      rows.push_back({e, ft, fl});
    }
    write_csv(out_path(out_dir, "sweep.csv"),
              {drive ? "eps" : "eta", "fidelity_trajectory", "fidelity_loop"}, rows);
  } else if (kind == "transmon_grid") {
    const Table1Row row = table1_row(cfg_in.value("scenario", 5),
                                     cfg_in.at("gate").get<std::string>());
    const int points = cfg_in.value("points", 5);
    const double err_max = cfg_in.value("err_max", 0.1);
    const TransmonParams dev;
    SingleQubitSimOptions opt;
    opt.drag = cfg_in.value("drag", true);
    opt.steps = cfg_in.value("steps", 20000);
    const GateTarget g = row.target();
    const SingleLoop loop = single_loop_for(g, dev.omega_m);
    std::vector<std::vector<double>> rows;
    for (int i = 0; i < points; ++i) {
      for (int j = 0; j < points; ++j) {
        opt.eps = points == 1 ? 0.0 : -err_max + 2.0 * err_max * i / (points - 1);
        opt.eta = points == 1 ? 0.0 : -err_max + 2.0 * err_max * j / (points - 1);
        const SingleQubitResult rt = single_qubit_gate_sim(row.params(), g, dev, opt);
        const SingleQubitResult rl = single_qubit_loop_sim(loop, g, dev, opt);
        rows.push_back({opt.eps, opt.eta, rt.fidelity, rt.leakage, rl.fidelity,
                        rl.leakage});
      }
    }
    write_csv(out_path(out_dir, "sweep.csv"),
              {"eps", "eta", "fidelity_trajectory", "leakage_trajectory", "fidelity_loop",
               "leakage_loop"},
              rows);
  } else if (kind == "cp_grid") {
    const Table1Row row = table1_row(5, "CP");
    const int points = cfg_in.value("points", 21);
    const double err_max = cfg_in.value("err_max", 0.1);
    const double headroom = cfg_in.value("headroom", 0.95);
    const bool full_model = cfg_in.value("full_model", true);
    const int steps = cfg_in.value("steps", 0);
    const TwoQubitParams dev;
    const AnsatzParams p =
        normalize_to_peak(row.params(), headroom * dev.omega_ceiling());
    const ControlField field = reverse_engineer(p);
    std::vector<std::vector<double>> rows;
    if (full_model) {
      const CpFullSimulator sim(field, dev, steps);
      summary["steps"] = sim.steps();
      for (int i = 0; i < points; ++i) {
        for (int j = 0; j < points; ++j) {
          const double e = points == 1 ? 0.0 : -err_max + 2.0 * err_max * i / (points - 1);
          const double n = points == 1 ? 0.0 : -err_max + 2.0 * err_max * j / (points - 1);
          rows.push_back({e, n, sim.fidelity(e, n, true, 0.5 * pi)});
        }
      }
    } else {
      for (int i = 0; i < points; ++i) {
        for (int j = 0; j < points; ++j) {
          CpSimOptions opt;
          opt.full_model = false;
          opt.steps = steps;
          opt.eps = points == 1 ? 0.0 : -err_max + 2.0 * err_max * i / (points - 1);
          opt.eta = points == 1 ? 0.0 : -err_max + 2.0 * err_max * j / (points - 1);
          rows.push_back({opt.eps, opt.eta, cp_gate_sim(field, dev, opt).fidelity});
        }
      }
    }
    write_csv(out_path(out_dir, "sweep.csv"), {"eps", "eta", "fidelity"}, rows);
    summary["tau"] = field.tau;
  } else {
    throw ConfigError("unknown sweep kind: " + kind);
  }

  summary["config"] = effective;
  write_json(out_path(out_dir, "summary.json"), summary);
  std::printf("sweep %s done\n", kind.c_str());
  return 0;
}

}  // namespace
}  // namespace ongqg

int main(int argc, char** argv) {
  using namespace ongqg;
  CLI::App app{"geometric gate synthesis from designable Bloch-sphere trajectories"};
  app.require_subcommand(1);

  std::string config_path, out_dir = ".";
  unsigned seed = 0;
  int workers = 1;
  bool have_seed = false;

  CLI::App* c_table = app.add_subcommand("table1", "verify the bundled coefficient table");
  CLI::App* c_synth = app.add_subcommand("synth", "synthesize controls for a trajectory");
  CLI::App* c_base = app.add_subcommand("baseline", "synthesize the reference loop");
  CLI::App* c_opt = app.add_subcommand("optimize", "search trajectory coefficients");
  CLI::App* c_sweep = app.add_subcommand("sweep", "run an error or decoherence sweep");
  for (CLI::App* c : {c_synth, c_base, c_opt, c_sweep}) {
    c->add_option("--config", config_path, "JSON job description")->required();
    c->add_option("--out", out_dir, "output directory");
  }
  c_opt->add_option("--seed", seed, "override the config seed")->each([&](const std::string&) {
    have_seed = true;
  });
  c_sweep->add_option("--workers", workers, "reserved; sweeps run on one core");
  (void)workers;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_table->parsed()) return run_table1();
    const json cfg = resolve_config(load_json(config_path));
    if (c_synth->parsed()) return run_synth(cfg, out_dir);
    if (c_base->parsed()) return run_baseline(cfg, out_dir);
    if (c_opt->parsed()) return run_optimize(cfg, out_dir, seed, have_seed);
    if (c_sweep->parsed()) return run_sweep(cfg, out_dir);
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const json::exception& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "infeasible: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
