#pragma once

#include <optional>

#include "lt2d/bounds/model.hpp"

namespace lt2d::bounds {

struct ComparisonReport {
  bool holds = false;                    // y <= z on the whole shared span
  std::optional<double> first_crossing;  // first sign change of y - z
};

/// Checks y <= z on the union of the two time grids (restricted to the
/// shared span), resampling both curves by linear interpolation. When the
/// ordering fails, first_crossing is the first interpolated root of
/// y - z, mirroring the infimum construction of the comparison argument.
/// Requires y(0) < z(0); throws std::invalid_argument otherwise or when
/// the shared span is empty.
ComparisonReport comparison_verify(const Trajectory& y, const Trajectory& z);

}  // namespace lt2d::bounds
