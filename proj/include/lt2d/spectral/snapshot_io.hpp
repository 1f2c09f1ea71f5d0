#pragma once

#include <filesystem>
#include <string>

#include "lt2d/spectral/operators.hpp"

namespace lt2d::spectral {

/// Writes <base>.bin (row-major real64 physical values) and <base>.json
/// (sidecar with n, length, time, field).
void write_snapshot(const std::filesystem::path& base,
                    const std::string& field_name, const RVec& phys,
                    const Grid2D& g, double time);

struct Snapshot {
  RVec values;
  int n = 0;
  double length = 0.0;
  double time = 0.0;
  std::string field;
};

Snapshot read_snapshot(const std::filesystem::path& base);

}  // namespace lt2d::spectral
