#pragma once

#include <vector>

#include "lt2d/spectral/diagnostics.hpp"
#include "lt2d/spectral/stepper.hpp"

namespace lt2d::spectral {

struct SimResult {
  std::vector<DiagnosticsRecord> history;  // t=0, every sample_every steps, final
  FlowField final_field;
  StepStats worst;  // worst-case per-step stats over the whole run
  long long steps = 0;
};

/// Runs the configured system to t_end from cfg-driven initial data.
SimResult run_simulation(const SimConfig& cfg);

/// Same with caller-supplied initial data (spectral, on cfg's grid).
SimResult run_simulation(const SimConfig& cfg, FlowField initial);

}  // namespace lt2d::spectral
