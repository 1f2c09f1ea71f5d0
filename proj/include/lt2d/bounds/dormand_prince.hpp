#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <vector>

namespace lt2d::bounds {

/// Embedded Dormand-Prince 5(4) pair with PI step-size control and the
/// classic quartic dense-output interpolant. Blow-up is a first-class
/// outcome: when the right-hand side overflows the exponent cap (or turns
/// non-finite) the step size is driven down and, once it underflows, the
/// integration stops and reports the time reached.
struct OdeOptions {
  double rel_tol = 1.0e-10;
  double abs_tol = 1.0e-12;
  std::size_t max_steps = 10'000'000;
  double max_step = std::numeric_limits<double>::infinity();
};

enum class OdeStatus { completed, blowup };

struct OdeOutcome {
  OdeStatus status = OdeStatus::completed;
  double t_reached = 0.0;
  std::size_t steps_accepted = 0;
  std::size_t steps_rejected = 0;
};

class DormandPrince5 {
 public:
  using Rhs =
      std::function<void(double t, std::span<const double> y, std::span<double> dydt)>;
  /// Called after each accepted step; returning false aborts with
  /// NumericalError (used for invariant guards such as z >= 1).
  using StepGuard = std::function<bool(double t, std::span<const double> y)>;
  /// Receives the dense-output solution at each requested output time.
  using Emit = std::function<void(double t, std::span<const double> y)>;

  using Options = OdeOptions;
  using Status = OdeStatus;
  using Outcome = OdeOutcome;

  /// Integrates y' = f(t, y) from t0 to t1 >= t0, emitting the solution at
  /// the sorted output times (all within [t0, t1]). The guard may be null.
  static Outcome integrate(const Rhs& f, std::vector<double> y0, double t0,
                           double t1, std::span<const double> out_times,
                           const Emit& emit, const Options& opts = {},
                           const StepGuard& guard = nullptr);
};

}  // namespace lt2d::bounds
