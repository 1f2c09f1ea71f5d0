#pragma once

#include <span>
#include <string_view>

#include "lt2d/bounds/model.hpp"

namespace lt2d::bounds {

/// State of the Boussinesq bound equation rewritten as a memoryless ODE:
/// z is the principal variable, a = integral of z, bint = integral of
/// exp(a). The reduction is exact, not an approximation.
struct AugmentedStateBoussinesq {
  double z = 1.0;
  double a = 0.0;
  double bint = 0.0;
};

/// State of the density-Euler bound equation: upsilon is the principal
/// variable, a = integral of (upsilon - 1), i2 = integral of
/// Z^3 Y (1 + Y + eps^2 Z^6) with Y = upsilon - 1 and Z = exp(C a).
struct AugmentedStateNhEuler {
  double upsilon = 1.0;
  double a = 0.0;
  double i2 = 0.0;
};

/// dz/dt = C z [(1+log z) + eps (1+log z) bint + eps exp(a)],
/// da/dt = z, dbint/dt = exp(a). Throws ExponentCapError past the cap.
AugmentedStateBoussinesq rhs_boussinesq_augmented(
    const AugmentedStateBoussinesq& s, const ModelConstants& mc);

/// dupsilon/dt = C upsilon [1 + log upsilon + eps H] with
/// H = (1+log upsilon) e^{Ca} + upsilon log(upsilon) i2
///   + eps log(upsilon) i2 e^{Ca},
/// da/dt = upsilon - 1, di2/dt = Z^3 Y (1 + Y + eps^2 Z^6).
AugmentedStateNhEuler rhs_nheuler_augmented(const AugmentedStateNhEuler& s,
                                            const ModelConstants& mc);

enum class BoundSystem { boussinesq, nh_euler };

std::string_view to_string(BoundSystem s);
BoundSystem bound_system_from_string(std::string_view name);

/// Result of integrating a bound equation. Blow-up before the horizon is
/// meaningful output (the equations do blow up for large eps); the
/// trajectory then covers [0, t_reached).
struct BoundSolution {
  Trajectory trajectory;
  bool blew_up = false;
  double t_reached = 0.0;
};

/// Error-controlled integration of the chosen augmented system over
/// [0, mc.horizon], sampling the principal variable at n_samples+1
/// uniform output times. Requires z0 > 1; aborts if the principal
/// variable ever drops below 1.
BoundSolution integrate_bound(BoundSystem system, double z0,
                              const ModelConstants& mc, double rel_tol,
                              double abs_tol, std::size_t n_samples = 256);

/// Same, with caller-chosen output times (sorted, within [0, horizon]).
BoundSolution integrate_bound_at(BoundSystem system, double z0,
                                 const ModelConstants& mc, double rel_tol,
                                 double abs_tol,
                                 std::span<const double> times);

}  // namespace lt2d::bounds
