#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "lt2d/common/math_util.hpp"

namespace lt2d::bounds {

/// Substitution constant b of the reduced bound equation, b = e^{-1}.
inline const double kDefaultB = std::exp(-1.0);

/// Parameters shared by every bound-equation computation.
///
/// c_const is the generic constant of the a priori estimates; it is not
/// fixed by the theory and is treated as a user input (see the empirical
/// calibration in experiments). b_const defaults to e^{-1} and is exposed
/// only for sensitivity studies. epsilon is the perturbation amplitude;
/// the contraction theory assumes epsilon <= 1 but larger values are
/// accepted so the non-contractive regime can be probed.
struct ModelConstants {
  double c_const = 1.0;
  double b_const = kDefaultB;
  double epsilon = 0.0;
  double horizon = 1.0;
  double exp_cap = kDefaultExpCap;

  /// Throws std::invalid_argument on out-of-range fields.
  void validate() const;
};

/// A sampled scalar curve on a strictly increasing time grid starting at 0.
struct Trajectory {
  std::vector<double> times;
  std::vector<double> values;

  std::size_t size() const { return times.size(); }
  bool empty() const { return times.empty(); }
  double t_end() const { return times.back(); }

  /// Linear interpolation; throws std::invalid_argument outside the
  /// covered span (a history gap).
  double interpolate(double t) const;

  /// Enforces the type invariants: strictly increasing times, times[0]=0,
  /// matching lengths, all values finite.
  void validate() const;
};

/// Uniform grid 0 = t_0 < ... < t_n = t_end with n+1 nodes.
std::vector<double> uniform_grid(double t_end, std::size_t n);

/// In-place cumulative trapezoid of f sampled on grid t: out[j] =
/// integral of the piecewise-linear interpolant over [t_0, t_j].
void cumulative_trapezoid(std::span<const double> t, std::span<const double> f,
                          std::span<double> out);

}  // namespace lt2d::bounds
