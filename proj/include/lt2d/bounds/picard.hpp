#pragma once

#include <cstddef>

#include "lt2d/bounds/model.hpp"

namespace lt2d::bounds {

/// Forcing of the mild-form Boussinesq bound equation dw/dt = eps F(t,w),
///
///   F(t,w) = C { w(t) * I(t) + e^{-Ct} * exp(b xi(t)) },
///   xi(s)  = integral_0^s exp(w(tau) e^{C tau}) dtau,
///   I(t)   = integral_0^t exp(b xi(s)) ds,
///
/// with both nested integrals taken by composite trapezoid on the history
/// grid. Throws std::invalid_argument if w_hist does not cover [0, t] and
/// ExponentCapError if an inner exponent exceeds mc.exp_cap.
double mild_forcing_boussinesq(double t, const Trajectory& w_hist,
                               const ModelConstants& mc);

/// F evaluated at every node of the history grid in one O(n) pass.
std::vector<double> mild_forcing_profile(const Trajectory& w_hist,
                                         const ModelConstants& mc);

struct PicardResult {
  Trajectory w;                      // fixed point on the uniform grid
  std::size_t iterations = 0;        // iterations actually performed
  double contraction_estimate = 0.0; // sup-ratio of consecutive differences
  double final_diff = 0.0;           // last successive sup-difference
  bool regime_warning = false;       // eps >= eps2(M = 2 w0): not provably
                                     // contractive, attempted anyway
};

/// Fixed point of Psi[w](t) = w0 + eps * integral_0^t F(tau, w) dtau on a
/// uniform grid of grid_n+1 nodes over [0, mc.horizon]. Stops when the
/// successive sup-difference drops below tol; throws NumericalError if
/// max_iter is reached first.
PicardResult picard_solve(double w0, const ModelConstants& mc,
                          std::size_t grid_n, double tol,
                          std::size_t max_iter);

}  // namespace lt2d::bounds
