#pragma once

#include <functional>
#include <span>

#include "lt2d/bounds/model.hpp"

namespace lt2d::bounds {

/// Read-only view of the accumulated discrete history up to and including
/// the current time (last node).
struct HistoryView {
  std::span<const double> times;
  std::span<const double> values;
};

using ScalarMap = std::function<double(double y)>;
using HistoryFunctional = std::function<double(double t, const HistoryView&)>;

/// Integrates the abstract history-dependent equation
///   dy/dt = G(y) [1 + eps * Fbar(t, history of y)]
/// on a uniform grid of grid_n+1 nodes over [0, mc.horizon] with a
/// fourth-order Runge-Kutta update whose stage evaluations extend the
/// recorded history by the predicted stage value. Fbar must be monotone
/// non-decreasing in the history (caller contract); G positive and
/// continuous on [y0, inf). Accuracy is limited to second order by the
/// trapezoid history quadrature inside typical functionals.
Trajectory solve_abstract(const ScalarMap& g, const HistoryFunctional& f_bar,
                          double y0, const ModelConstants& mc,
                          std::size_t grid_n);

/// The Boussinesq bound equation as an instance of the abstract form:
/// G(y) = C y (1 + log y) and Fbar(t) = B(t) + exp(A(t)) / (1 + log y(t))
/// with A = integral of y and B = integral of exp(A).
HistoryFunctional abstract_boussinesq_functional(const ModelConstants& mc);

/// The density-Euler bound equation as an instance: G as above and
/// Fbar = H(t, history) / (1 + log y(t)).
HistoryFunctional abstract_nheuler_functional(const ModelConstants& mc);

/// G(y) = C y (1 + log y), shared by both instances.
ScalarMap abstract_log_growth(const ModelConstants& mc);

}  // namespace lt2d::bounds
