#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace lt2d {

/// Runtime numerical failure (blow-up, lost convergence, CFL violation),
/// as opposed to input validation which throws std::invalid_argument.
/// Carries the time reached when the failure happened mid-integration.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what,
                          double t_reached = std::nan(""))
      : std::runtime_error(what), t_reached_(t_reached) {}

  /// Time up to which the computation is valid; NaN if not applicable.
  double t_reached() const { return t_reached_; }

 private:
  double t_reached_;
};

/// An intermediate exponent exceeded the configured cap. The bound
/// equations blow up in finite time for large perturbations, so this is
/// an expected outcome that callers convert into a structured result.
class ExponentCapError : public NumericalError {
 public:
  ExponentCapError(double exponent, double cap)
      : NumericalError("exponent " + std::to_string(exponent) +
                       " exceeds cap " + std::to_string(cap)),
        exponent_(exponent) {}

  double exponent() const { return exponent_; }

 private:
  double exponent_;
};

}  // namespace lt2d
