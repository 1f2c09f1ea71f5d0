// Acceptance suite: every criterion below runs at its stated tolerance
// and prints one [PASS]/[FAIL] line. The process exits nonzero if any
// criterion fails. Expected wall time is a few minutes (criteria 5-7 run
// desk-scale simulations).

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "lt2d/bounds/augmented.hpp"
#include "lt2d/bounds/comparison.hpp"
#include "lt2d/bounds/thresholds.hpp"
#include "lt2d/experiments/crossval.hpp"
#include "lt2d/experiments/sim_vs_bound.hpp"
#include "lt2d/spectral/init.hpp"
#include "lt2d/spectral/pressure.hpp"
#include "lt2d/spectral/simulate.hpp"
#include "oracle_values.hpp"

using namespace lt2d;
namespace sp = lt2d::spectral;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& name, bool pass,
            const std::string& detail) {
  std::printf("[%s] criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL",
              criterion, name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

double rel_err(double got, double want) {
  return std::abs(got - want) / std::abs(want);
}

bounds::ModelConstants constants(double c, double eps, double t) {
  bounds::ModelConstants mc;
  mc.c_const = c;
  mc.epsilon = eps;
  mc.horizon = t;
  return mc;
}

// ---- 1. eps = 0 closed form ------------------------------------------------

void criterion1() {
  const double want = oracle::kZ1ClosedForm;  // exp(2e - 1)
  double worst = 0.0;
  bool ok = true;
  for (auto system :
       {bounds::BoundSystem::boussinesq, bounds::BoundSystem::nh_euler}) {
    const auto sol = bounds::integrate_bound(system, std::exp(1.0),
                                             constants(1.0, 0.0, 1.0), 1e-10,
                                             1e-12, 32);
    ok = ok && !sol.blew_up;
    worst = std::max(worst, rel_err(sol.trajectory.values.back(), want));
  }
  report(1, "eps=0 closed form z(1)=exp(2e-1), both systems",
         ok && worst < 1e-8, "max rel err " + fmt(worst) + " vs 1e-8");
}

// ---- 2. Picard vs augmented ODE --------------------------------------------

void criterion2() {
  const auto mc = constants(1.0, 0.01, 0.1);
  const auto rep = experiments::crossval_bounds(mc, 2.0, 2000, 1e-12);
  const auto th = bounds::thresholds(2.0, mc);  // M = 4
  const double bound = mc.epsilon * mc.horizon * std::exp(th.lipschitz_log);
  const bool ok = rep.sup_rel_discrepancy < 1e-6 &&
                  rep.contraction_estimate < bound;
  report(2, "Picard-ODE oracle equivalence and contraction certificate", ok,
         "discrepancy " + fmt(rep.sup_rel_discrepancy) +
             " vs 1e-6, contraction " + fmt(rep.contraction_estimate) +
             " vs eps*T*L = " + fmt(bound));
}

// ---- 3. Threshold log-domain correctness -----------------------------------

void criterion3() {
  const auto deep = bounds::thresholds(1.0, constants(1.0, 0.0, 1.0));
  const double log_err = rel_err(deep.log_eps1, oracle::kLogEps1_T1_M2);

  const auto mild = bounds::thresholds(1.0, constants(1.0, 0.0, 0.1));
  const double e1_err = rel_err(std::exp(mild.log_eps1), oracle::kEps1_T01_M2);
  const double e2_err = rel_err(std::exp(mild.log_eps2), oracle::kEps2_T01_M2);
  const bool ok = log_err < 1e-6 && mild.eps0 == 1.0 && e1_err < 1e-4 &&
                  e2_err < 1e-4 && !deep.overflow_flag;
  report(3, "threshold log-domain values vs precision oracle", ok,
         "log_eps1 rel " + fmt(log_err) + ", eps1 rel " + fmt(e1_err) +
             ", eps2 rel " + fmt(e2_err) + ", eps0 " + fmt(mild.eps0));
}

// ---- 4. Triple-log scaling law ----------------------------------------------

void criterion4() {
  bool increasing = true;
  double worst_ratio = 1.0;
  double prev_t = 0.0;
  for (int p = 5; p <= 100; p += 5) {
    const double eps = std::pow(10.0, -p);
    const double t = bounds::predict_horizon(eps, 1.0, 1.0);
    if (t <= prev_t) increasing = false;
    prev_t = t;
    auto mc = constants(1.0, 0.0, t);
    const double log_back = bounds::thresholds(1.0, mc).log_eps0();
    worst_ratio = std::max(worst_ratio,
                           std::exp(std::abs(log_back - std::log(eps))));
  }
  const bool ok = increasing && worst_ratio < 1.01;
  report(4, "predict_horizon strictly increasing, bisection inverse", ok,
         "worst eps0/eps factor " + fmt(worst_ratio) + " vs 1.01");
}

// ---- helpers for the simulation criteria -----------------------------------

sp::FlowField taylor_green(const sp::Grid2D& g, const sp::Fft2D& fft,
                           double omega_amp, double phi_amp) {
  sp::RVec om(g.size()), ph(g.size());
  for (int iy = 0; iy < g.n(); ++iy)
    for (int ix = 0; ix < g.n(); ++ix) {
      om[g.at(iy, ix)] = omega_amp * std::cos(g.x(ix)) * std::cos(g.y(iy));
      ph[g.at(iy, ix)] = phi_amp * std::cos(g.x(ix));
    }
  sp::FlowField f;
  f.omega_hat = sp::from_physical(om, fft);
  f.phi_hat = sp::from_physical(ph, fft);
  sp::set_mean_zero(f.omega_hat);
  return f;
}

// Scalar with a genuinely flat maximum region: a logistic plateau around
// the origin, band-limited to |k| <= 25 so the same smooth field is
// representable on every grid used below. The flat top keeps the grid
// max meaningful at the 1e-6 level while the field is advected.
sp::CVec plateau_scalar(const sp::Grid2D& g, const sp::Fft2D& fft) {
  sp::RVec ph(g.size());
  for (int iy = 0; iy < g.n(); ++iy)
    for (int ix = 0; ix < g.n(); ++ix) {
      const double d = 2.0 - std::cos(g.x(ix)) - std::cos(g.y(iy));
      ph[g.at(iy, ix)] = 1.0 / (1.0 + std::exp(-8.0 * (1.6 - d)));
    }
  sp::CVec phat = sp::from_physical(ph, fft);
  for (int iy = 0; iy < g.n(); ++iy)
    for (int ix = 0; ix < g.n(); ++ix)
      if (std::abs(g.k_index(ix)) > 25 || std::abs(g.k_index(iy)) > 25)
        phat[g.at(iy, ix)] = 0.0;
  // Band-limiting leaves a ~1e-8 undershoot below zero; lift it so the
  // field is pointwise nonnegative as the density setup requires.
  const sp::RVec trimmed = sp::to_physical(phat, fft);
  double lo = trimmed[0];
  for (double v : trimmed) lo = std::min(lo, v);
  phat[0] += -lo + 1e-9;
  return phat;
}

// Taylor-Green vorticity scaled so the velocity amplitude is gentle.
sp::CVec tg_vorticity(const sp::Grid2D& g, const sp::Fft2D& fft, double amp) {
  sp::RVec om(g.size());
  for (int iy = 0; iy < g.n(); ++iy)
    for (int ix = 0; ix < g.n(); ++ix)
      om[g.at(iy, ix)] = 2.0 * amp * std::cos(g.x(ix)) * std::cos(g.y(iy));
  auto omega = sp::from_physical(om, fft);
  sp::set_mean_zero(omega);
  return omega;
}

// ---- 5. Euler limit ----------------------------------------------------------

void criterion5() {
  sp::SimConfig cfg;
  cfg.system = sp::System::boussinesq;
  cfg.n = 64;
  cfg.dt = 1e-3;
  cfg.t_end = 1.0;
  cfg.epsilon = 0.0;
  cfg.sample_every = 100;

  sp::Grid2D g(cfg.n);
  sp::Fft2D fft(cfg.n);
  auto f0 = taylor_green(g, fft, 2.0, 1.0);
  const sp::RVec om0 = sp::to_physical(f0.omega_hat, fft);

  const auto res = sp::run_simulation(cfg, std::move(f0));
  const sp::RVec om1 = sp::to_physical(res.final_field.omega_hat, fft);
  double sup = 0.0;
  for (std::size_t i = 0; i < om0.size(); ++i)
    sup = std::max(sup, std::abs(om1[i] - om0[i]));

  const auto& first = res.history.front();
  const auto& last = res.history.back();
  const double l2_drift = rel_err(last.omega_l2, first.omega_l2);
  const double e_drift = rel_err(last.kinetic, first.kinetic);
  const bool ok = sup < 1e-6 && l2_drift < 1e-8 && e_drift < 1e-8;
  report(5, "Euler limit: Taylor-Green steady at eps=0 (n=64, T=1)", ok,
         "sup dev " + fmt(sup) + " vs 1e-6, |omega|_L2 drift " + fmt(l2_drift) +
             ", energy drift " + fmt(e_drift) + " vs 1e-8");
}

// ---- 6. Transport invariants and the vorticity forcing budget ---------------

struct Criterion6Run {
  double phi_max_drift;
  double phi_l2_drift;
  double fitted_c;
  bool finite;
};

Criterion6Run run_criterion6(int n, double dt) {
  sp::SimConfig cfg;
  cfg.system = sp::System::boussinesq;
  cfg.n = n;
  cfg.dt = dt;
  cfg.t_end = 1.0;
  cfg.epsilon = 0.1;
  cfg.sample_every = std::max(1, static_cast<int>(0.01 / dt));

  sp::Grid2D g(cfg.n);
  sp::Fft2D fft(cfg.n);
  sp::FlowField f0;
  f0.omega_hat = tg_vorticity(g, fft, 0.25);
  f0.phi_hat = plateau_scalar(g, fft);

  const auto res = sp::run_simulation(cfg, std::move(f0));
  const auto rep = sp::verify_apriori(res.history, cfg);

  Criterion6Run out{};
  double max_dev = 0.0, l2_dev = 0.0;
  const auto& first = res.history.front();
  for (const auto& r : res.history) {
    max_dev = std::max(max_dev, std::abs(r.phi_max - first.phi_max) /
                                    std::abs(first.phi_max));
    l2_dev = std::max(l2_dev,
                      std::abs(r.phi_l2 - first.phi_l2) / first.phi_l2);
  }
  out.phi_max_drift = max_dev;
  out.phi_l2_drift = l2_dev;
  const auto& fit = rep.by_name("vorticity_forcing");
  out.fitted_c = fit.fitted_c;
  out.finite = fit.finite;
  return out;
}

void criterion6() {
  const auto base = run_criterion6(128, 1e-3);
  const auto fine = run_criterion6(256, 5e-4);
  const double c_shift =
      std::abs(fine.fitted_c - base.fitted_c) / std::max(base.fitted_c, 1e-300);
  const bool ok = base.phi_max_drift < 1e-6 && base.phi_l2_drift < 1e-6 &&
                  base.finite && fine.finite && base.fitted_c > 0.0 &&
                  std::isfinite(base.fitted_c) && c_shift < 0.2;
  report(6, "transport invariants + stable forcing-budget constant", ok,
         "max phi drift " + fmt(base.phi_max_drift) + ", |phi|_L2 drift " +
             fmt(base.phi_l2_drift) + " vs 1e-6; fitted C " +
             fmt(base.fitted_c) + " -> " + fmt(fine.fitted_c) + " (shift " +
             fmt(c_shift * 100.0) + "% vs 20%)");
}

// ---- 7. nh-Euler conservation and pressure ----------------------------------

void criterion7() {
  sp::SimConfig cfg;
  cfg.system = sp::System::nh_euler;
  cfg.n = 128;
  cfg.dt = 1e-3;
  cfg.t_end = 0.5;
  cfg.epsilon = 0.3;  // max phi0 ~ 1, admissible bound is 0.5
  cfg.sample_every = 1;
  cfg.pressure_tol = 1e-13;
  cfg.pressure_max_iter = 20;

  sp::Grid2D g(cfg.n);
  sp::Fft2D fft(cfg.n);
  sp::FlowField f0;
  f0.omega_hat = tg_vorticity(g, fft, 0.25);
  f0.phi_hat = plateau_scalar(g, fft);

  const auto res = sp::run_simulation(cfg, std::move(f0));
  const auto& first = res.history.front();
  double kin_drift = 0.0;
  double irho_lo = 1.0, irho_hi = 1.0;
  for (const auto& r : res.history) {
    kin_drift = std::max(kin_drift,
                         std::abs(r.kinetic - first.kinetic) / first.kinetic);
    irho_lo = std::min(irho_lo, r.inv_rho_min);
    irho_hi = std::max(irho_hi, r.inv_rho_max);
  }
  const bool bounds_ok = irho_lo >= 2.0 / 3.0 - 1e-9 && irho_hi <= 1.0 + 1e-9;
  const bool pressure_ok = res.worst.pressure_iterations <= 20 &&
                           res.worst.pressure_residual < 1e-9;

  // Taylor-Green constant-density pressure against the closed form.
  const auto tg = taylor_green(g, fft, 2.0, 0.0);
  auto [v1, v2] = sp::velocity_from_vorticity(tg.omega_hat, g);
  const sp::RVec eta0(g.size(), 0.0);
  const auto ps = sp::pressure_solve(v1, v2, eta0, g, fft, 1e-13, 20);
  const sp::RVec p = sp::to_physical(ps.p_hat, fft);
  double tg_err = 0.0;
  for (int iy = 0; iy < g.n(); ++iy)
    for (int ix = 0; ix < g.n(); ++ix) {
      const double want =
          -0.25 * (std::cos(2.0 * g.x(ix)) + std::cos(2.0 * g.y(iy)));
      tg_err = std::max(tg_err, std::abs(p[g.at(iy, ix)] - want));
    }

  const bool ok = kin_drift < 1e-5 && bounds_ok && pressure_ok && tg_err < 1e-10;
  report(7, "nh-Euler energy, 1/rho bounds, pressure convergence", ok,
         "kinetic drift " + fmt(kin_drift) + " vs 1e-5; 1/rho in [" +
             fmt(irho_lo) + ", " + fmt(irho_hi) + "]; pressure iters " +
             fmt(res.worst.pressure_iterations) + " residual " +
             fmt(res.worst.pressure_residual) + "; TG pressure err " +
             fmt(tg_err));
}

// ---- 8. Comparison structure --------------------------------------------------

void criterion8() {
  // Monotonicity of the bound equation in eps on a shared grid.
  bool monotone = true;
  const std::vector<double> epss = {0.001, 0.01, 0.05, 0.2};
  std::vector<bounds::Trajectory> runs;
  for (double e : epss)
    runs.push_back(bounds::integrate_bound(bounds::BoundSystem::boussinesq, 2.0,
                                           constants(1.0, e, 1.0), 1e-10, 1e-12,
                                           64)
                       .trajectory);
  for (std::size_t i = 1; i < runs.size(); ++i) {
    // Larger eps can blow up earlier; compare on the shared grid prefix.
    const std::size_t shared = std::min(runs[i - 1].size(), runs[i].size());
    if (shared < 2) monotone = false;
    for (std::size_t j = 0; j < shared; ++j)
      if (runs[i - 1].values[j] > runs[i].values[j] * (1.0 + 1e-12))
        monotone = false;
  }

  // Calibrated small-eps run holds; a tiny C forces a crossing whose
  // location matches sign-change interpolation.
  sp::SimConfig cfg;
  cfg.system = sp::System::boussinesq;
  cfg.n = 64;
  cfg.dt = 1e-3;
  cfg.t_end = 0.25;
  cfg.epsilon = 0.01;
  cfg.init = sp::InitKind::random_band;
  cfg.seed = 2024;
  cfg.sample_every = 10;

  bounds::ModelConstants mc;
  const auto good = experiments::sim_vs_bound(cfg, mc, /*calibrate_c=*/true);

  bounds::ModelConstants tiny;
  tiny.c_const = 1e-6;
  const auto forced =
      experiments::sim_vs_bound(cfg, tiny, /*calibrate_c=*/false, 1e-5);
  bool crossing_ok = !forced.holds && forced.first_crossing.has_value();
  if (crossing_ok) {
    const double t = *forced.first_crossing;
    const double gap = forced.y_curve.interpolate(t) -
                       forced.z_curve.interpolate(t);
    crossing_ok = t > 0.0 && t <= cfg.t_end &&
                  std::abs(gap) < 1e-8 * std::max(1.0, forced.y_curve.interpolate(t));
  }

  const bool ok = monotone && good.holds && crossing_ok;
  report(8, "comparison: eps-monotonicity, calibrated run holds, forced crossing",
         ok,
         std::string("monotone=") + (monotone ? "yes" : "no") + ", holds=" +
             (good.holds ? "yes" : "no") + " (C=" + fmt(good.c_used) +
             "), forced crossing=" +
             (crossing_ok ? fmt(*forced.first_crossing) : "missing"));
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  if (g_failures == 0) {
    std::printf("all acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d acceptance criteria FAILED\n", g_failures);
  return 1;
}
