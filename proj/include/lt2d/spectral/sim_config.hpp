#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "lt2d/spectral/grid.hpp"

namespace lt2d::spectral {

enum class System { boussinesq, nh_euler };
enum class InitKind { taylor_green, single_mode, random_band };

std::string_view to_string(System s);
System system_from_string(std::string_view name);
std::string_view to_string(InitKind k);
InitKind init_kind_from_string(std::string_view name);

struct SimConfig {
  int n = 64;
  double length = kTwoPi;
  double dt = 1.0e-3;
  double t_end = 1.0;
  double epsilon = 0.0;
  System system = System::boussinesq;
  double pressure_tol = 1.0e-12;
  int pressure_max_iter = 60;
  std::uint64_t seed = 1;

  InitKind init = InitKind::taylor_green;
  double target_u_h3 = 1.0;
  double target_phi_h3 = 1.0;
  bool nonneg_phi = false;

  double cfl_limit = 0.5;
  int sample_every = 10;  // diagnostics cadence in steps

  void validate() const;
};

/// Strict JSON round-trip for config files: unknown keys are rejected.
SimConfig sim_config_from_json_text(const std::string& text);
std::string sim_config_to_json_text(const SimConfig& cfg);

}  // namespace lt2d::spectral
