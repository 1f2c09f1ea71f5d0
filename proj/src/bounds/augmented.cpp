#include "lt2d/bounds/augmented.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "lt2d/bounds/dormand_prince.hpp"
#include "lt2d/common/errors.hpp"

namespace lt2d::bounds {

AugmentedStateBoussinesq rhs_boussinesq_augmented(
    const AugmentedStateBoussinesq& s, const ModelConstants& mc) {
  const double exp_a = checked_exp(s.a, mc.exp_cap);
  const double one_plus_log = 1.0 + std::log(s.z);
  AugmentedStateBoussinesq d;
  d.z = mc.c_const * s.z *
        (one_plus_log + mc.epsilon * one_plus_log * s.bint + mc.epsilon * exp_a);
  d.a = s.z;
  d.bint = exp_a;
  return d;
}

AugmentedStateNhEuler rhs_nheuler_augmented(const AugmentedStateNhEuler& s,
                                            const ModelConstants& mc) {
  const double ca = mc.c_const * s.a;
  const double y = s.upsilon - 1.0;
  const double log_u = std::log(s.upsilon);
  const double exp_ca = checked_exp(ca, mc.exp_cap);
  const double z3 = checked_exp(3.0 * ca, mc.exp_cap);

  // eps^2 Z^6 assembled in the log domain so eps = 0 short-circuits
  // instead of producing 0 * inf.
  double eps2_z6 = 0.0;
  if (mc.epsilon > 0.0)
    eps2_z6 = checked_exp(2.0 * std::log(mc.epsilon) + 6.0 * ca, mc.exp_cap);

  const double h = (1.0 + log_u) * exp_ca + s.upsilon * log_u * s.i2 +
                   mc.epsilon * log_u * s.i2 * exp_ca;

  AugmentedStateNhEuler d;
  d.upsilon = mc.c_const * s.upsilon * (1.0 + log_u + mc.epsilon * h);
  d.a = y;
  d.i2 = z3 * y * (1.0 + y + eps2_z6);
  return d;
}

std::string_view to_string(BoundSystem s) {
  return s == BoundSystem::boussinesq ? "boussinesq" : "nh_euler";
}

BoundSystem bound_system_from_string(std::string_view name) {
  if (name == "boussinesq") return BoundSystem::boussinesq;
  if (name == "nh_euler") return BoundSystem::nh_euler;
  throw std::invalid_argument("unknown system '" + std::string(name) +
                              "' (expected boussinesq or nh_euler)");
}

namespace {

BoundSolution integrate_impl(BoundSystem system, double z0,
                             const ModelConstants& mc, double rel_tol,
                             double abs_tol, std::span<const double> times) {
  mc.validate();
  if (!(z0 > 1.0))
    throw std::invalid_argument("integrate_bound: z0 must exceed 1");
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
    throw std::invalid_argument("integrate_bound: tolerances must be positive");

  BoundSolution sol;
  if (mc.horizon == 0.0 || (times.size() == 1 && times.front() == 0.0)) {
    sol.trajectory.times = {0.0};
    sol.trajectory.values = {z0};
    sol.t_reached = 0.0;
    return sol;
  }

  DormandPrince5::Rhs rhs;
  if (system == BoundSystem::boussinesq) {
    rhs = [&mc](double, std::span<const double> y, std::span<double> dy) {
      const AugmentedStateBoussinesq d =
          rhs_boussinesq_augmented({y[0], y[1], y[2]}, mc);
      dy[0] = d.z;
      dy[1] = d.a;
      dy[2] = d.bint;
    };
  } else {
    rhs = [&mc](double, std::span<const double> y, std::span<double> dy) {
      const AugmentedStateNhEuler d =
          rhs_nheuler_augmented({y[0], y[1], y[2]}, mc);
      dy[0] = d.upsilon;
      dy[1] = d.a;
      dy[2] = d.i2;
    };
  }

  DormandPrince5::Options opts;
  opts.rel_tol = rel_tol;
  opts.abs_tol = abs_tol;

  sol.trajectory.times.reserve(times.size());
  sol.trajectory.values.reserve(times.size());
  const auto outcome = DormandPrince5::integrate(
      rhs, {z0, 0.0, 0.0}, 0.0, mc.horizon, times,
      [&sol](double t, std::span<const double> y) {
        sol.trajectory.times.push_back(t);
        sol.trajectory.values.push_back(y[0]);
      },
      opts,
      [](double, std::span<const double> y) { return y[0] >= 1.0; });

  sol.blew_up = outcome.status == DormandPrince5::Status::blowup;
  sol.t_reached = outcome.t_reached;
  return sol;
}

}  // namespace

BoundSolution integrate_bound(BoundSystem system, double z0,
                              const ModelConstants& mc, double rel_tol,
                              double abs_tol, std::size_t n_samples) {
  return integrate_impl(system, z0, mc, rel_tol, abs_tol,
                        uniform_grid(mc.horizon, n_samples));
}

BoundSolution integrate_bound_at(BoundSystem system, double z0,
                                 const ModelConstants& mc, double rel_tol,
                                 double abs_tol,
                                 std::span<const double> times) {
  return integrate_impl(system, z0, mc, rel_tol, abs_tol, times);
}

}  // namespace lt2d::bounds
