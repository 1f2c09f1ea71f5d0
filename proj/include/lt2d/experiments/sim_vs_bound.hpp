#pragma once

#include <optional>

#include "lt2d/bounds/comparison.hpp"
#include "lt2d/bounds/model.hpp"
#include "lt2d/spectral/simulate.hpp"

namespace lt2d::experiments {

struct SimVsBoundReport {
  bool holds = false;
  std::optional<double> first_crossing;
  double c_used = 0.0;      // calibrated or supplied generic constant
  bool calibrated = false;
  bool c_floored = false;   // calibration hit the positivity floor
  bool bound_blew_up = false;
  double bound_t_reached = 0.0;
  bounds::Trajectory y_curve;  // simulated continuation norm
  bounds::Trajectory z_curve;  // bound-equation majorant
};

/// Runs the configured Boussinesq simulation, extracts the continuation
/// norm y(t), integrates the bound equation from z0 = y(0) + z0_offset
/// and checks y <= z. With calibrate_c the generic constant is fitted so
/// the bound inequality holds with equality at t = 0 on the simulated
/// data (floored at c_floor when the initial slope is nonpositive).
SimVsBoundReport sim_vs_bound(const spectral::SimConfig& sim_cfg,
                              bounds::ModelConstants mc, bool calibrate_c,
                              double z0_offset = 1.0, double c_floor = 1.0e-3);

}  // namespace lt2d::experiments
