#include "lt2d/spectral/simulate.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <set>
#include <stdexcept>

#include "lt2d/common/errors.hpp"
#include "lt2d/spectral/init.hpp"

namespace lt2d::spectral {

using nlohmann::json;

std::string_view to_string(System s) {
  return s == System::boussinesq ? "boussinesq" : "nh_euler";
}

System system_from_string(std::string_view name) {
  if (name == "boussinesq") return System::boussinesq;
  if (name == "nh_euler") return System::nh_euler;
  throw std::invalid_argument("unknown system '" + std::string(name) + "'");
}

std::string_view to_string(InitKind k) {
  switch (k) {
    case InitKind::taylor_green: return "taylor_green";
    case InitKind::single_mode: return "single_mode";
    default: return "random_band";
  }
}

InitKind init_kind_from_string(std::string_view name) {
  if (name == "taylor_green") return InitKind::taylor_green;
  if (name == "single_mode") return InitKind::single_mode;
  if (name == "random_band") return InitKind::random_band;
  throw std::invalid_argument("unknown init kind '" + std::string(name) + "'");
}

void SimConfig::validate() const {
  Grid2D probe(n, length);  // enforces n, length invariants
  (void)probe;
  if (!(dt > 0.0) || !std::isfinite(dt))
    throw std::invalid_argument("SimConfig: dt must be positive");
  if (!(t_end >= 0.0) || !std::isfinite(t_end))
    throw std::invalid_argument("SimConfig: t_end must be >= 0");
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon))
    throw std::invalid_argument("SimConfig: epsilon must be >= 0");
  if (!(pressure_tol > 0.0))
    throw std::invalid_argument("SimConfig: pressure_tol must be positive");
  if (pressure_max_iter < 1)
    throw std::invalid_argument("SimConfig: pressure_max_iter must be >= 1");
  if (!(target_u_h3 >= 0.0) || !(target_phi_h3 >= 0.0))
    throw std::invalid_argument("SimConfig: targets must be >= 0");
  if (!(cfl_limit > 0.0))
    throw std::invalid_argument("SimConfig: cfl_limit must be positive");
  if (sample_every < 1)
    throw std::invalid_argument("SimConfig: sample_every must be >= 1");
}

SimConfig sim_config_from_json_text(const std::string& text) {
  const json j = json::parse(text);
  if (!j.is_object())
    throw std::invalid_argument("config: top-level JSON object expected");
  static const std::set<std::string> known = {
      "n",           "length",       "dt",
      "t_end",       "epsilon",      "system",
      "pressure_tol", "pressure_max_iter", "seed",
      "init",        "target_u_h3",  "target_phi_h3",
      "nonneg_phi",  "cfl_limit",    "sample_every"};
  for (const auto& [key, _] : j.items())
    if (!known.count(key))
      throw std::invalid_argument("config: unknown key '" + key + "'");

  SimConfig cfg;
  if (j.contains("n")) cfg.n = j.at("n").get<int>();
  if (j.contains("length")) cfg.length = j.at("length").get<double>();
  if (j.contains("dt")) cfg.dt = j.at("dt").get<double>();
  if (j.contains("t_end")) cfg.t_end = j.at("t_end").get<double>();
  if (j.contains("epsilon")) cfg.epsilon = j.at("epsilon").get<double>();
  if (j.contains("system"))
    cfg.system = system_from_string(j.at("system").get<std::string>());
  if (j.contains("pressure_tol"))
    cfg.pressure_tol = j.at("pressure_tol").get<double>();
  if (j.contains("pressure_max_iter"))
    cfg.pressure_max_iter = j.at("pressure_max_iter").get<int>();
  if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("init"))
    cfg.init = init_kind_from_string(j.at("init").get<std::string>());
  if (j.contains("target_u_h3"))
    cfg.target_u_h3 = j.at("target_u_h3").get<double>();
  if (j.contains("target_phi_h3"))
    cfg.target_phi_h3 = j.at("target_phi_h3").get<double>();
  if (j.contains("nonneg_phi")) cfg.nonneg_phi = j.at("nonneg_phi").get<bool>();
  if (j.contains("cfl_limit")) cfg.cfl_limit = j.at("cfl_limit").get<double>();
  if (j.contains("sample_every"))
    cfg.sample_every = j.at("sample_every").get<int>();
  cfg.validate();
  return cfg;
}

std::string sim_config_to_json_text(const SimConfig& cfg) {
  json j;
  j["n"] = cfg.n;
  j["length"] = cfg.length;
  j["dt"] = cfg.dt;
  j["t_end"] = cfg.t_end;
  j["epsilon"] = cfg.epsilon;
  j["system"] = std::string(to_string(cfg.system));
  j["pressure_tol"] = cfg.pressure_tol;
  j["pressure_max_iter"] = cfg.pressure_max_iter;
  j["seed"] = cfg.seed;
  j["init"] = std::string(to_string(cfg.init));
  j["target_u_h3"] = cfg.target_u_h3;
  j["target_phi_h3"] = cfg.target_phi_h3;
  j["nonneg_phi"] = cfg.nonneg_phi;
  j["cfl_limit"] = cfg.cfl_limit;
  j["sample_every"] = cfg.sample_every;
  return j.dump(2) + "\n";
}

SimResult run_simulation(const SimConfig& cfg, FlowField initial) {
  cfg.validate();
  Stepper stepper(cfg);
  const Fft2D& fft = stepper.fft();

  if (cfg.system == System::nh_euler && cfg.epsilon > 0.0) {
    // Admissibility: eps <= min{1, 1/(2 max phi0)} keeps 2/3 <= 1/rho <= 1.
    const RVec phi0 = to_physical(initial.phi_hat, fft);
    double phi_min = phi0[0], phi_max = phi0[0];
    for (double v : phi0) {
      phi_min = std::min(phi_min, v);
      phi_max = std::max(phi_max, v);
    }
    if (phi_min < -1e-12)
      throw std::invalid_argument(
          "nh_euler: initial scalar perturbation must be pointwise >= 0");
    const double eps_max =
        phi_max > 0.0 ? std::min(1.0, 1.0 / (2.0 * phi_max)) : 1.0;
    if (cfg.epsilon > eps_max * (1.0 + 1e-12))
      throw std::invalid_argument(
          "nh_euler: epsilon exceeds the admissible bound min{1, 1/(2 max phi0)} = " +
          std::to_string(eps_max));
  }

  SimResult res;
  res.final_field = std::move(initial);
  res.history.push_back(diagnostics(res.final_field, cfg, fft));

  const long long n_steps =
      static_cast<long long>(std::ceil(cfg.t_end / cfg.dt - 1e-9));
  for (long long s = 0; s < n_steps; ++s) {
    const double remaining = cfg.t_end - res.final_field.time;
    const double dt = std::min(cfg.dt, remaining);
    const StepStats st = stepper.step(res.final_field, dt);
    res.worst.max_speed = std::max(res.worst.max_speed, st.max_speed);
    res.worst.pressure_iterations =
        std::max(res.worst.pressure_iterations, st.pressure_iterations);
    res.worst.pressure_residual =
        std::max(res.worst.pressure_residual, st.pressure_residual);
    ++res.steps;
    if ((s + 1) % cfg.sample_every == 0 || s + 1 == n_steps)
      res.history.push_back(diagnostics(res.final_field, cfg, fft));
  }
  return res;
}

SimResult run_simulation(const SimConfig& cfg) {
  cfg.validate();
  Grid2D g(cfg.n, cfg.length);
  Fft2D fft(cfg.n);
  FlowField f0 = init_fields(cfg.init, g, cfg.seed, cfg.target_u_h3,
                             cfg.target_phi_h3, cfg.nonneg_phi, fft);
  return run_simulation(cfg, std::move(f0));
}

}  // namespace lt2d::spectral
