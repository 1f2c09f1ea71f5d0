// Command-line front end: every subcommand is a thin adapter over the
// library operations. Exit codes: 0 success, 1 validation/config error,
// 2 numerical failure (blow-up, lost convergence, CFL) with the reached
// time on stderr.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "lt2d/bounds/augmented.hpp"
#include "lt2d/bounds/comparison.hpp"
#include "lt2d/bounds/picard.hpp"
#include "lt2d/bounds/thresholds.hpp"
#include "lt2d/common/errors.hpp"
#include "lt2d/common/io.hpp"
#include "lt2d/experiments/crossval.hpp"
#include "lt2d/experiments/manifest.hpp"
#include "lt2d/experiments/sim_vs_bound.hpp"
#include "lt2d/experiments/sweep.hpp"
#include "lt2d/spectral/simulate.hpp"
#include "lt2d/spectral/snapshot_io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitNumerical = 2;

json threshold_report_json(const lt2d::bounds::ThresholdReport& rep) {
  json j;
  j["log_eps1"] = rep.log_eps1;
  j["log_eps2"] = rep.log_eps2;
  j["eps0"] = rep.eps0;
  j["lipschitz_log"] = rep.lipschitz_log;
  j["m_bound"] = rep.m_bound;
  j["overflow_flag"] = rep.overflow_flag;
  return j;
}

void write_trajectory_csv(const fs::path& path,
                          const lt2d::bounds::Trajectory& tr) {
  lt2d::CsvWriter csv(path, "t,value");
  for (std::size_t i = 0; i < tr.size(); ++i)
    csv.row({tr.times[i], tr.values[i]});
}

// Applies --set key=value overrides onto a JSON config object. Keys must
// already exist or be known to the target parser (strictness is enforced
// by the parser itself); values are parsed as JSON scalars with a string
// fallback.
json apply_overrides(json config, const std::vector<std::string>& overrides) {
  for (const auto& kv : overrides) {
    const auto pos = kv.find('=');
    if (pos == std::string::npos)
      throw std::invalid_argument("override '" + kv + "' is not key=value");
    const std::string key = kv.substr(0, pos);
    const std::string value = kv.substr(pos + 1);
    try {
      config[key] = json::parse(value);
    } catch (const json::exception&) {
      config[key] = value;  // bare string
    }
  }
  return config;
}

json load_config(const std::string& path,
                 const std::vector<std::string>& overrides) {
  if (!fs::exists(path))
    throw std::invalid_argument("config file not found: " + path);
  return apply_overrides(json::parse(lt2d::read_text_file(path)), overrides);
}

struct RunDir {
  fs::path dir;
  lt2d::experiments::RunManifest manifest;

  explicit RunDir(const std::string& out) : dir(out) {
    fs::create_directories(dir);
    manifest.started_at = lt2d::experiments::iso8601_utc_now();
  }
  void add(const std::string& rel) { manifest.outputs.push_back(rel); }
  void finish() {
    manifest.finished_at = lt2d::experiments::iso8601_utc_now();
    lt2d::experiments::write_manifest(dir, manifest);
  }
};

int cmd_thresholds(double c, double t, double m_ball, double b,
                   const std::string& out) {
  lt2d::bounds::ModelConstants mc;
  mc.c_const = c;
  mc.horizon = t;
  mc.b_const = b;
  const auto rep = lt2d::bounds::thresholds(m_ball / 2.0, mc);
  const json j = threshold_report_json(rep);
  std::cout << j.dump(2) << "\n";
  if (!out.empty()) {
    RunDir run(out);
    run.manifest.config_hash = lt2d::experiments::fnv1a_hex(j.dump());
    lt2d::write_text_file(run.dir / "thresholds.json", j.dump(2) + "\n");
    run.add("thresholds.json");
    run.finish();
  }
  return kExitOk;
}

int cmd_bound(const std::string& system, double eps, double z0, double c,
              double t, double b, double rel_tol, double abs_tol,
              std::size_t samples, const std::string& out) {
  lt2d::bounds::ModelConstants mc;
  mc.c_const = c;
  mc.horizon = t;
  mc.b_const = b;
  mc.epsilon = eps;
  const auto sol = lt2d::bounds::integrate_bound(
      lt2d::bounds::bound_system_from_string(system), z0, mc, rel_tol, abs_tol,
      samples);
  if (!out.empty()) {
    RunDir run(out);
    run.manifest.config_hash = lt2d::experiments::fnv1a_hex(
        system + "," + lt2d::format_double(eps) + "," + lt2d::format_double(z0) +
        "," + lt2d::format_double(c) + "," + lt2d::format_double(t));
    write_trajectory_csv(run.dir / "trajectory.csv", sol.trajectory);
    run.add("trajectory.csv");
    run.manifest.checks["completed"] = !sol.blew_up;
    run.finish();
  }
  if (sol.blew_up) {
    std::cerr << "blow-up before the horizon: reached t = "
              << lt2d::format_double(sol.t_reached) << "\n";
    return kExitNumerical;
  }
  std::cout << "z(" << lt2d::format_double(sol.t_reached)
            << ") = " << lt2d::format_double(sol.trajectory.values.back())
            << "\n";
  return kExitOk;
}

int cmd_picard(double w0, double eps, double c, double t, double b,
               std::size_t grid_n, double tol, std::size_t max_iter,
               const std::string& out) {
  lt2d::bounds::ModelConstants mc;
  mc.c_const = c;
  mc.horizon = t;
  mc.b_const = b;
  mc.epsilon = eps;
  const auto res = lt2d::bounds::picard_solve(w0, mc, grid_n, tol, max_iter);
  std::cout << "iterations = " << res.iterations
            << ", contraction = " << lt2d::format_double(res.contraction_estimate)
            << ", w(T) = " << lt2d::format_double(res.w.values.back()) << "\n";
  if (res.regime_warning)
    std::cerr << "warning: eps is at or above the contraction threshold eps2\n";
  if (!out.empty()) {
    RunDir run(out);
    write_trajectory_csv(run.dir / "trajectory.csv", res.w);
    run.add("trajectory.csv");
    run.manifest.checks["contractive"] = res.contraction_estimate < 1.0;
    run.finish();
  }
  return kExitOk;
}

int cmd_simulate(const std::string& config_path,
                 const std::vector<std::string>& overrides,
                 const std::string& out, bool snapshots) {
  const json cfg_json = load_config(config_path, overrides);
  const auto cfg = lt2d::spectral::sim_config_from_json_text(cfg_json.dump());

  const auto res = lt2d::spectral::run_simulation(cfg);

  RunDir run(out);
  run.manifest.seed = cfg.seed;
  const std::string canonical = lt2d::spectral::sim_config_to_json_text(cfg);
  run.manifest.config_hash = lt2d::experiments::fnv1a_hex(canonical);
  lt2d::write_text_file(run.dir / "config.json", canonical);
  run.add("config.json");
  {
    lt2d::CsvWriter csv(run.dir / "series.csv",
                        lt2d::spectral::diagnostics_csv_header());
    for (const auto& r : res.history)
      csv.row(lt2d::spectral::diagnostics_csv_row(r));
  }
  run.add("series.csv");
  if (snapshots) {
    const lt2d::spectral::Grid2D g(cfg.n, cfg.length);
    lt2d::spectral::Fft2D fft(cfg.n);
    const auto om = lt2d::spectral::to_physical(res.final_field.omega_hat, fft);
    const auto ph = lt2d::spectral::to_physical(res.final_field.phi_hat, fft);
    lt2d::spectral::write_snapshot(run.dir / "omega_final", "omega", om, g,
                                   res.final_field.time);
    lt2d::spectral::write_snapshot(run.dir / "phi_final", "phi", ph, g,
                                   res.final_field.time);
    for (const char* f : {"omega_final.bin", "omega_final.json",
                          "phi_final.bin", "phi_final.json"})
      run.add(f);
  }
  run.manifest.checks["finite_diagnostics"] = true;
  run.finish();
  std::cout << "steps = " << res.steps
            << ", y(T) = " << lt2d::format_double(res.history.back().y_norm)
            << "\n";
  return kExitOk;
}

int cmd_sweep(const std::string& config_path,
              const std::vector<std::string>& overrides,
              const std::string& out) {
  const json cfg_json = load_config(config_path, overrides);
  const auto spec =
      lt2d::experiments::sweep_spec_from_json_text(cfg_json.dump());
  const auto result = lt2d::experiments::run_sweep(spec);

  RunDir run(out);
  const std::string canonical = lt2d::experiments::sweep_spec_to_json_text(spec);
  run.manifest.config_hash = lt2d::experiments::fnv1a_hex(canonical);
  lt2d::write_text_file(run.dir / "config.json", canonical);
  run.add("config.json");
  lt2d::experiments::write_sweep_summary(run.dir, result);
  run.add("summary.csv");
  if (result.regression) {
    run.add("regression.json");
    std::cout << "regression: slope = "
              << lt2d::format_double(result.regression->slope)
              << ", intercept = "
              << lt2d::format_double(result.regression->intercept)
              << ", points = " << result.regression->points << "\n";
  }
  run.finish();
  std::cout << "points = " << result.rows.size() << "\n";
  return kExitOk;
}

int cmd_compare(const std::string& config_path,
                const std::vector<std::string>& overrides,
                const std::string& out, bool calibrate, double c_const,
                double z0_offset) {
  const json cfg_json = load_config(config_path, overrides);
  const auto cfg = lt2d::spectral::sim_config_from_json_text(cfg_json.dump());
  lt2d::bounds::ModelConstants mc;
  mc.c_const = c_const;

  const auto rep =
      lt2d::experiments::sim_vs_bound(cfg, mc, calibrate, z0_offset);

  RunDir run(out);
  run.manifest.seed = cfg.seed;
  const std::string canonical = lt2d::spectral::sim_config_to_json_text(cfg);
  run.manifest.config_hash = lt2d::experiments::fnv1a_hex(canonical);
  lt2d::write_text_file(run.dir / "config.json", canonical);
  run.add("config.json");

  {
    lt2d::CsvWriter csv(run.dir / "series.csv", "t,value");
    for (std::size_t i = 0; i < rep.y_curve.size(); ++i)
      csv.row({rep.y_curve.times[i], rep.y_curve.values[i]});
  }
  run.add("series.csv");

  {
    // Both curves resampled onto the union grid over the shared span.
    std::vector<double> grid;
    const double t_hi = std::min(rep.y_curve.t_end(), rep.z_curve.t_end());
    for (double t : rep.y_curve.times)
      if (t <= t_hi) grid.push_back(t);
    for (double t : rep.z_curve.times)
      if (t <= t_hi) grid.push_back(t);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    lt2d::CsvWriter csv(run.dir / "comparison.csv", "t,y,z");
    for (double t : grid)
      csv.row({t, rep.y_curve.interpolate(t), rep.z_curve.interpolate(t)});
  }
  run.add("comparison.csv");

  {
    lt2d::bounds::ModelConstants tmc;
    tmc.c_const = rep.c_used;
    tmc.horizon = cfg.t_end;
    const double w0 = 1.0 + std::log(rep.y_curve.values.front() + z0_offset);
    const json tj = threshold_report_json(lt2d::bounds::thresholds(w0, tmc));
    lt2d::write_text_file(run.dir / "thresholds.json", tj.dump(2) + "\n");
    run.add("thresholds.json");
  }

  json verdict;
  verdict["holds"] = rep.holds;
  if (rep.first_crossing) verdict["first_crossing"] = *rep.first_crossing;
  verdict["c_used"] = rep.c_used;
  verdict["calibrated"] = rep.calibrated;
  verdict["c_floored"] = rep.c_floored;
  verdict["bound_blew_up"] = rep.bound_blew_up;
  if (rep.bound_blew_up) verdict["bound_t_reached"] = rep.bound_t_reached;
  lt2d::write_text_file(run.dir / "verdict.json", verdict.dump(2) + "\n");
  run.add("verdict.json");

  run.manifest.checks["holds"] = rep.holds;
  run.finish();
  std::cout << verdict.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Long-time bound equations and desk-scale 2D spectral runs"};
  app.require_subcommand(1);

  // thresholds
  double th_c = 1.0, th_t = 1.0, th_m = 2.0, th_b = lt2d::bounds::kDefaultB;
  std::string th_out;
  auto* th = app.add_subcommand("thresholds", "smallness thresholds (log-domain)");
  th->add_option("--C", th_c, "generic constant");
  th->add_option("--T", th_t, "horizon");
  th->add_option("--M", th_m, "ball radius M = 2 m_tilde");
  th->add_option("--b", th_b, "substitution constant");
  th->add_option("--out", th_out, "output directory");

  // bound
  std::string bd_system = "boussinesq", bd_out;
  double bd_eps = 0.0, bd_z0 = 2.0, bd_c = 1.0, bd_t = 1.0,
         bd_b = lt2d::bounds::kDefaultB, bd_rtol = 1e-10, bd_atol = 1e-12;
  std::size_t bd_samples = 256;
  auto* bd = app.add_subcommand("bound", "integrate a bound equation");
  bd->add_option("--system", bd_system, "boussinesq|nh_euler");
  bd->add_option("--eps", bd_eps, "perturbation size");
  bd->add_option("--z0", bd_z0, "initial value (> 1)");
  bd->add_option("--C", bd_c, "generic constant");
  bd->add_option("--T", bd_t, "horizon");
  bd->add_option("--b", bd_b, "substitution constant");
  bd->add_option("--rel-tol", bd_rtol, "relative tolerance");
  bd->add_option("--abs-tol", bd_atol, "absolute tolerance");
  bd->add_option("--samples", bd_samples, "output samples");
  bd->add_option("--out", bd_out, "output directory");

  // picard
  double pc_w0 = 2.0, pc_eps = 0.01, pc_c = 1.0, pc_t = 0.1,
         pc_b = lt2d::bounds::kDefaultB, pc_tol = 1e-10;
  std::size_t pc_grid = 1000, pc_maxit = 100;
  std::string pc_out;
  auto* pc = app.add_subcommand("picard", "mild-form fixed point");
  pc->add_option("--w0", pc_w0, "initial value (> 1)");
  pc->add_option("--eps", pc_eps, "perturbation size");
  pc->add_option("--C", pc_c, "generic constant");
  pc->add_option("--T", pc_t, "horizon");
  pc->add_option("--b", pc_b, "substitution constant");
  pc->add_option("--grid-n", pc_grid, "grid intervals");
  pc->add_option("--tol", pc_tol, "fixed-point tolerance");
  pc->add_option("--max-iter", pc_maxit, "iteration cap");
  pc->add_option("--out", pc_out, "output directory");

  // simulate
  std::string sim_config, sim_out = "run";
  std::vector<std::string> sim_sets;
  bool sim_snapshots = false;
  auto* sim = app.add_subcommand("simulate", "pseudo-spectral run");
  sim->add_option("--config", sim_config, "JSON config")->required();
  sim->add_option("--set", sim_sets, "key=value override");
  sim->add_option("--out", sim_out, "output directory");
  sim->add_flag("--snapshots", sim_snapshots, "write final field snapshots");

  // sweep
  std::string sw_config, sw_out = "sweep";
  std::vector<std::string> sw_sets;
  auto* sw = app.add_subcommand("sweep", "threshold/crossval sweeps");
  sw->add_option("--config", sw_config, "JSON sweep spec")->required();
  sw->add_option("--set", sw_sets, "key=value override");
  sw->add_option("--out", sw_out, "output directory");

  // compare
  std::string cm_config, cm_out = "compare";
  std::vector<std::string> cm_sets;
  bool cm_calibrate = false;
  double cm_c = 1.0, cm_offset = 1.0;
  auto* cm = app.add_subcommand("compare", "simulation vs bound equation");
  cm->add_option("--config", cm_config, "JSON sim config")->required();
  cm->add_option("--set", cm_sets, "key=value override");
  cm->add_option("--out", cm_out, "output directory");
  cm->add_flag("--calibrate-c", cm_calibrate, "fit C from the run");
  cm->add_option("--C", cm_c, "generic constant when not calibrating");
  cm->add_option("--z0-offset", cm_offset, "z0 = y(0) + offset");

  try {
    app.parse(argc, argv);
    if (th->parsed()) return cmd_thresholds(th_c, th_t, th_m, th_b, th_out);
    if (bd->parsed())
      return cmd_bound(bd_system, bd_eps, bd_z0, bd_c, bd_t, bd_b, bd_rtol,
                       bd_atol, bd_samples, bd_out);
    if (pc->parsed())
      return cmd_picard(pc_w0, pc_eps, pc_c, pc_t, pc_b, pc_grid, pc_tol,
                        pc_maxit, pc_out);
    if (sim->parsed())
      return cmd_simulate(sim_config, sim_sets, sim_out, sim_snapshots);
    if (sw->parsed()) return cmd_sweep(sw_config, sw_sets, sw_out);
    if (cm->parsed())
      return cmd_compare(cm_config, cm_sets, cm_out, cm_calibrate, cm_c,
                         cm_offset);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitValidation;
  } catch (const lt2d::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what();
    if (!std::isnan(e.t_reached()))
      std::cerr << " (reached t = " << lt2d::format_double(e.t_reached()) << ")";
    std::cerr << "\n";
    return kExitNumerical;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitValidation;
  } catch (const json::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitValidation;
}
