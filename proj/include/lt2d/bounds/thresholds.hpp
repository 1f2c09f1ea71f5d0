#pragma once

#include "lt2d/bounds/model.hpp"

namespace lt2d::bounds {

/// Smallness thresholds of the contraction argument, evaluated entirely
/// in the log domain. eps1 underflows any native float already for
/// moderate (T, M) -- log eps1 ~ -T exp(M e^{CT}) -- so the logs are the
/// primary representation and eps0 is exponentiated only when safe.
struct ThresholdReport {
  double log_eps1 = 0.0;       // self-map condition
  double log_eps2 = 0.0;       // contraction condition, -log(T L)
  double eps0 = 1.0;           // min{1, eps1, eps2}, 0 when it underflows
  double lipschitz_log = 0.0;  // log of the Lipschitz constant L
  double m_bound = 0.0;        // ball radius M = 2 m_tilde
  bool overflow_flag = false;  // exp(M e^{CT}) itself overflowed a double

  double log_eps0() const;
};

/// Evaluates the thresholds for ball radius M = 2 m_tilde at horizon
/// mc.horizon. mc.epsilon is not consulted. Requires m_tilde > 0 and
/// mc.horizon > 0.
ThresholdReport thresholds(double m_tilde, const ModelConstants& mc);

/// Largest horizon T (up to t_cap) with eps0(T) >= epsilon, found by
/// bisection on the monotone nonincreasing map T -> eps0(T) in the log
/// domain. Returns t_cap when epsilon <= eps0(t_cap).
double predict_horizon(double epsilon, double m_tilde, double c_const,
                       double b_const = kDefaultB, double t_cap = 16.0);

}  // namespace lt2d::bounds
