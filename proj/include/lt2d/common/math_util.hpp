#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

#include "lt2d/common/errors.hpp"

namespace lt2d {

/// Default exponent cap in natural-log units. exp(709.78) is the last
/// finite double; 700 leaves headroom for products of capped factors.
inline constexpr double kDefaultExpCap = 700.0;

/// Finite stand-ins for log(0) and log(inf) used by the threshold report
/// so that downstream arithmetic and JSON serialization stay well defined.
inline constexpr double kLogZeroSentinel = -1.0e308;
inline constexpr double kLogInfSentinel = 1.0e308;

/// exp(x) that refuses to overflow silently.
inline double checked_exp(double x, double cap = kDefaultExpCap) {
  if (x > cap) throw ExponentCapError(x, cap);
  return std::exp(x);
}

/// log(exp(a) + exp(b)) without leaving the log domain.
inline double log_add_exp(double a, double b) {
  if (a == -std::numeric_limits<double>::infinity()) return b;
  if (b == -std::numeric_limits<double>::infinity()) return a;
  const double hi = std::max(a, b);
  const double lo = std::min(a, b);
  return hi + std::log1p(std::exp(lo - hi));
}

inline bool nearly_equal(double a, double b, double rel, double abs = 0.0) {
  return std::abs(a - b) <= std::max(abs, rel * std::max(std::abs(a), std::abs(b)));
}

}  // namespace lt2d
