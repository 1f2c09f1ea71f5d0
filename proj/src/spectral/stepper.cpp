#include "lt2d/spectral/stepper.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>
#include <string>

#include "lt2d/common/errors.hpp"
#include "lt2d/spectral/pressure.hpp"

namespace lt2d::spectral {

Stepper::Stepper(const SimConfig& cfg)
    : cfg_(cfg), grid_(cfg.n, cfg.length), fft_(cfg.n) {
  cfg_.validate();
  const std::size_t sz = grid_.size();
  for (CVec* v : {&u1_hat_, &u2_hat_, &tmp_, &scratch_, &scratch2_, &p_warm_,
                  &stage_omega_, &stage_phi_})
    v->assign(sz, {});
  for (RVec* v : {&u1_, &u2_, &da_, &db_, &prod_, &eta_, &work1_, &work2_})
    v->assign(sz, 0.0);
  for (Derivative* d : {&k1_, &k2_, &k3_, &k4_}) {
    d->omega.assign(sz, {});
    d->phi.assign(sz, {});
  }
}

void Stepper::eval_rhs(const CVec& omega_hat, const CVec& phi_hat,
                       Derivative& out, StepStats& stats) {
  const std::size_t sz = grid_.size();
  velocity_from_vorticity_into(omega_hat, grid_, u1_hat_, u2_hat_);
  to_physical_into(u1_hat_, fft_, scratch_, u1_);
  to_physical_into(u2_hat_, fft_, scratch_, u2_);
  double speed = 0.0;
  for (std::size_t i = 0; i < sz; ++i)
    speed = std::max(speed, std::hypot(u1_[i], u2_[i]));
  stats.max_speed = std::max(stats.max_speed, speed);

  // Advection of the scalar: d/dt phi = -u . grad phi.
  derivative_into(phi_hat, grid_, 0, tmp_);
  to_physical_into(tmp_, fft_, scratch_, da_);
  derivative_into(phi_hat, grid_, 1, tmp_);
  to_physical_into(tmp_, fft_, scratch_, db_);
  for (std::size_t i = 0; i < sz; ++i)
    prod_[i] = u1_[i] * da_[i] + u2_[i] * db_[i];
  from_physical_into(prod_, fft_, out.phi);
  apply_dealias(out.phi, grid_);
  for (auto& c : out.phi) c = -c;

  // Advection of vorticity.
  derivative_into(omega_hat, grid_, 0, tmp_);
  to_physical_into(tmp_, fft_, scratch_, da_);
  derivative_into(omega_hat, grid_, 1, tmp_);
  to_physical_into(tmp_, fft_, scratch_, db_);
  for (std::size_t i = 0; i < sz; ++i)
    prod_[i] = u1_[i] * da_[i] + u2_[i] * db_[i];
  from_physical_into(prod_, fft_, out.omega);
  apply_dealias(out.omega, grid_);
  for (auto& c : out.omega) c = -c;

  if (cfg_.system == System::boussinesq) {
    // Buoyancy forcing eps d1 phi (spectral, already in-band).
    const int n = grid_.n();
    for (int iy = 0; iy < n; ++iy)
      for (int ix = 0; ix < n; ++ix) {
        const std::size_t idx = grid_.at(iy, ix);
        out.omega[idx] += cfg_.epsilon *
                          std::complex<double>(0.0, grid_.k_phys(ix)) *
                          phi_hat[idx];
      }
  } else {
    // Baroclinic source -grad^perp(eta) . grad p with eta = 1/rho - 1
    // recomputed pointwise and p from the variable-coefficient solve.
    to_physical_into(phi_hat, fft_, scratch_, work1_);
    for (std::size_t i = 0; i < sz; ++i)
      eta_[i] = 1.0 / (1.0 + cfg_.epsilon * work1_[i]) - 1.0;

    const PressureSolution ps = pressure_solve(
        u1_hat_, u2_hat_, eta_, grid_, fft_, cfg_.pressure_tol,
        cfg_.pressure_max_iter, have_warm_pressure_ ? &p_warm_ : nullptr);
    p_warm_ = ps.p_hat;
    have_warm_pressure_ = true;
    stats.pressure_iterations = std::max(stats.pressure_iterations, ps.iterations);
    stats.pressure_residual = std::max(stats.pressure_residual, ps.residual);

    from_physical_into(eta_, fft_, tmp_);
    apply_dealias(tmp_, grid_);
    derivative_into(tmp_, grid_, 1, scratch_);  // d2 eta
    // scratch_ briefly holds a spectral derivative; expand both factors.
    to_physical_into(scratch_, fft_, scratch2_, db_);
    derivative_into(tmp_, grid_, 0, scratch_);  // d1 eta
    to_physical_into(scratch_, fft_, scratch2_, da_);

    derivative_into(ps.p_hat, grid_, 0, scratch_);
    to_physical_into(scratch_, fft_, scratch2_, work1_);  // d1 p
    derivative_into(ps.p_hat, grid_, 1, scratch_);
    to_physical_into(scratch_, fft_, scratch2_, work2_);  // d2 p

    // grad^perp eta . grad p = -d2(eta) d1(p) + d1(eta) d2(p).
    for (std::size_t i = 0; i < sz; ++i)
      prod_[i] = -db_[i] * work1_[i] + da_[i] * work2_[i];
    from_physical_into(prod_, fft_, scratch_);
    apply_dealias(scratch_, grid_);
    for (std::size_t i = 0; i < sz; ++i) out.omega[i] -= scratch_[i];
  }
  set_mean_zero(out.omega);
}

StepStats Stepper::step(FlowField& f, double dt_override) {
  const double dt = dt_override > 0.0 ? dt_override : cfg_.dt;
  const std::size_t sz = grid_.size();
  if (f.omega_hat.size() != sz || f.phi_hat.size() != sz)
    throw std::invalid_argument("Stepper::step: field/grid size mismatch");

  StepStats stats;
  eval_rhs(f.omega_hat, f.phi_hat, k1_, stats);

  // CFL guard on the stage-1 velocity.
  if (dt * stats.max_speed / grid_.dx() > cfg_.cfl_limit)
    throw NumericalError(
        "CFL violation: dt*max|u|/dx = " +
            std::to_string(dt * stats.max_speed / grid_.dx()) + " > " +
            std::to_string(cfg_.cfl_limit),
        f.time);

  auto stage = [&](const Derivative& k, double c) {
    for (std::size_t i = 0; i < sz; ++i) {
      stage_omega_[i] = f.omega_hat[i] + c * dt * k.omega[i];
      stage_phi_[i] = f.phi_hat[i] + c * dt * k.phi[i];
    }
  };
  stage(k1_, 0.5);
  eval_rhs(stage_omega_, stage_phi_, k2_, stats);
  stage(k2_, 0.5);
  eval_rhs(stage_omega_, stage_phi_, k3_, stats);
  stage(k3_, 1.0);
  eval_rhs(stage_omega_, stage_phi_, k4_, stats);

  const double w = dt / 6.0;
  for (std::size_t i = 0; i < sz; ++i) {
    f.omega_hat[i] +=
        w * (k1_.omega[i] + 2.0 * k2_.omega[i] + 2.0 * k3_.omega[i] + k4_.omega[i]);
    f.phi_hat[i] +=
        w * (k1_.phi[i] + 2.0 * k2_.phi[i] + 2.0 * k3_.phi[i] + k4_.phi[i]);
  }
  set_mean_zero(f.omega_hat);
  f.time += dt;

  assert(hermitian_defect(f.omega_hat, grid_) < 1e-10);
  assert(hermitian_defect(f.phi_hat, grid_) < 1e-10);
  return stats;
}

FlowField step_boussinesq(const FlowField& f, const SimConfig& cfg) {
  if (cfg.system != System::boussinesq)
    throw std::invalid_argument("step_boussinesq: config selects nh_euler");
  Stepper st(cfg);
  FlowField g = f;
  st.step(g);
  return g;
}

FlowField step_nh_euler(const FlowField& f, const SimConfig& cfg) {
  if (cfg.system != System::nh_euler)
    throw std::invalid_argument("step_nh_euler: config selects boussinesq");
  Stepper st(cfg);
  FlowField g = f;
  st.step(g);
  return g;
}

}  // namespace lt2d::spectral
