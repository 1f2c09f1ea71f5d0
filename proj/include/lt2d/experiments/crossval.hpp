#pragma once

#include "lt2d/bounds/model.hpp"

namespace lt2d::experiments {

struct CrossvalReport {
  double sup_rel_discrepancy = 0.0;  // between the two routes, in z-space
  double contraction_estimate = 0.0;
  bool regime_warning = false;       // eps at or above the contraction bound
  std::size_t picard_iterations = 0;
  bounds::Trajectory z_picard;       // Picard fixed point mapped to z
  bounds::Trajectory z_ode;          // augmented-ODE solution at same times
};

/// Solves the Boussinesq bound equation by both independent routes --
/// Picard iteration on the mild form and error-controlled integration of
/// the augmented ODE -- maps both into z-space through z = exp(w e^{Ct} - 1)
/// and reports the sup relative discrepancy.
CrossvalReport crossval_bounds(const bounds::ModelConstants& mc, double w0,
                               std::size_t grid_n, double tol);

}  // namespace lt2d::experiments
