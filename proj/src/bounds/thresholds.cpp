#include "lt2d/bounds/thresholds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lt2d/common/math_util.hpp"

namespace lt2d::bounds {

double ThresholdReport::log_eps0() const {
  return std::min({0.0, log_eps1, log_eps2});
}

ThresholdReport thresholds(double m_tilde, const ModelConstants& mc) {
  if (!(m_tilde > 0.0) || !std::isfinite(m_tilde))
    throw std::invalid_argument("thresholds: m_tilde must be positive");
  if (!(mc.horizon > 0.0))
    throw std::invalid_argument("thresholds: horizon must be positive");
  if (!(mc.c_const > 0.0) || !(mc.b_const > 0.0))
    throw std::invalid_argument("thresholds: c_const and b_const must be positive");

  const double c = mc.c_const, b = mc.b_const, t = mc.horizon;
  const double m = 2.0 * m_tilde;

  ThresholdReport rep;
  rep.m_bound = m;

  // u = M e^{CT}; exp(u) is the tower term that dominates everything.
  const double u = m * std::exp(c * t);
  if (u > 709.0) {
    // exp(u) is not a double. eps1 and eps2 are far below any
    // representable positive value; report the documented sentinels.
    rep.overflow_flag = true;
    rep.log_eps1 = kLogZeroSentinel;
    rep.lipschitz_log = kLogInfSentinel;
    rep.log_eps2 = kLogZeroSentinel;
    rep.eps0 = 0.0;
    return rep;
  }

  const double exp_tower = std::exp(u);
  const double tower = t * exp_tower;  // kept as a separate real

  rep.log_eps1 = std::log(m) - std::log(2.0 * c * t * (1.0 + t * m)) - tower;

  // L = exp(b T exp(u)) [ CT + b T e^{CT} exp(u) (CMT + 1) ], log of the
  // bracket via log-sum-exp so huge exp(u) never leaves the log domain.
  const double log_bracket =
      log_add_exp(std::log(c * t),
                  std::log(b * t * (c * m * t + 1.0)) + c * t + u);
  rep.lipschitz_log = b * tower + log_bracket;
  rep.log_eps2 = -std::log(t) - rep.lipschitz_log;

  const double log_eps0 = rep.log_eps0();
  rep.eps0 = log_eps0 > -kDefaultExpCap ? std::exp(log_eps0) : 0.0;
  return rep;
}

double predict_horizon(double epsilon, double m_tilde, double c_const,
                       double b_const, double t_cap) {
  if (!(epsilon > 0.0) || !(epsilon < 1.0))
    throw std::invalid_argument("predict_horizon: epsilon must lie in (0,1)");
  if (!(t_cap > 0.0))
    throw std::invalid_argument("predict_horizon: t_cap must be positive");

  const double log_target = std::log(epsilon);
  ModelConstants mc;
  mc.c_const = c_const;
  mc.b_const = b_const;

  auto admissible = [&](double t) {
    mc.horizon = t;
    return thresholds(m_tilde, mc).log_eps0() >= log_target;
  };

  if (admissible(t_cap)) return t_cap;

  // eps0 -> 1 as T -> 0+, so the bracket [lo, hi] straddles the boundary.
  double lo = 1e-12;
  if (!admissible(lo))
    throw std::invalid_argument(
        "predict_horizon: eps0 below epsilon even at vanishing horizon");
  double hi = t_cap;
  for (int i = 0; i < 200 && (hi - lo) > 1e-15 * std::max(1.0, hi); ++i) {
    const double mid = 0.5 * (lo + hi);
    (admissible(mid) ? lo : hi) = mid;
  }
  return lo;
}

}  // namespace lt2d::bounds
