#pragma once

#include "lt2d/spectral/operators.hpp"
#include "lt2d/spectral/sim_config.hpp"

namespace lt2d::spectral {

/// Spectral state of one simulation: vorticity and the scalar
/// perturbation (temperature for Boussinesq, density for nh-Euler).
struct FlowField {
  CVec omega_hat;
  CVec phi_hat;
  double time = 0.0;
};

struct StepStats {
  double max_speed = 0.0;          // stage-1 grid max |u|
  int pressure_iterations = 0;     // worst stage (nh-Euler only)
  double pressure_residual = 0.0;  // worst stage (nh-Euler only)
};

/// Classical RK4 advance of either system with 2/3-dealiased products.
/// Owns the FFT plans and scratch buffers; one instance per simulation
/// (not shared across threads).
class Stepper {
 public:
  explicit Stepper(const SimConfig& cfg);

  /// One step of size cfg.dt (or dt_override > 0). Checks the CFL guard
  /// dt max|u| / dx <= cfl_limit before committing; throws NumericalError
  /// on violation, carrying f.time.
  StepStats step(FlowField& f, double dt_override = 0.0);

  const Grid2D& grid() const { return grid_; }
  const Fft2D& fft() const { return fft_; }

 private:
  struct Derivative {
    CVec omega;
    CVec phi;
  };

  // d/dt of the spectral state; also reports grid max |u| and, for
  // nh-Euler, the pressure solve cost of this evaluation.
  void eval_rhs(const CVec& omega_hat, const CVec& phi_hat, Derivative& out,
                StepStats& stats);

  SimConfig cfg_;
  Grid2D grid_;
  Fft2D fft_;

  // Scratch (sized once).
  CVec u1_hat_, u2_hat_, tmp_, scratch_, scratch2_, p_warm_;
  RVec u1_, u2_, da_, db_, prod_, eta_, work1_, work2_;
  Derivative k1_, k2_, k3_, k4_;
  CVec stage_omega_, stage_phi_;
  bool have_warm_pressure_ = false;
};

/// Single-step conveniences mirroring the per-operation contracts; for
/// long runs construct a Stepper once instead.
FlowField step_boussinesq(const FlowField& f, const SimConfig& cfg);
FlowField step_nh_euler(const FlowField& f, const SimConfig& cfg);

}  // namespace lt2d::spectral
