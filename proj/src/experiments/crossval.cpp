#include "lt2d/experiments/crossval.hpp"

#include <cmath>

#include "lt2d/bounds/augmented.hpp"
#include "lt2d/bounds/picard.hpp"

namespace lt2d::experiments {

CrossvalReport crossval_bounds(const bounds::ModelConstants& mc, double w0,
                               std::size_t grid_n, double tol) {
  CrossvalReport rep;
  const auto picard = bounds::picard_solve(w0, mc, grid_n, tol, 200);
  rep.contraction_estimate = picard.contraction_estimate;
  rep.regime_warning = picard.regime_warning;
  rep.picard_iterations = picard.iterations;

  rep.z_picard.times = picard.w.times;
  rep.z_picard.values.resize(picard.w.size());
  for (std::size_t j = 0; j < picard.w.size(); ++j)
    rep.z_picard.values[j] = std::exp(
        picard.w.values[j] * std::exp(mc.c_const * picard.w.times[j]) - 1.0);

  const double z0 = std::exp(w0 - 1.0);
  const auto ode = bounds::integrate_bound_at(
      bounds::BoundSystem::boussinesq, z0, mc, 1.0e-10, 1.0e-12,
      picard.w.times);
  rep.z_ode = ode.trajectory;

  double sup = 0.0;
  const std::size_t m = std::min(rep.z_picard.size(), rep.z_ode.size());
  for (std::size_t j = 0; j < m; ++j)
    sup = std::max(sup, std::abs(rep.z_picard.values[j] - rep.z_ode.values[j]) /
                            std::abs(rep.z_ode.values[j]));
  rep.sup_rel_discrepancy = sup;
  return rep;
}

}  // namespace lt2d::experiments
