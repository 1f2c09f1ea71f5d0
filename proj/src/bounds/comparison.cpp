#include "lt2d/bounds/comparison.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace lt2d::bounds {

ComparisonReport comparison_verify(const Trajectory& y, const Trajectory& z) {
  y.validate();
  z.validate();
  const double t_hi = std::min(y.t_end(), z.t_end());
  if (!(t_hi >= 0.0))
    throw std::invalid_argument("comparison_verify: empty shared time span");
  if (!(y.values.front() < z.values.front()))
    throw std::invalid_argument("comparison_verify: requires y(0) < z(0)");

  std::vector<double> grid;
  grid.reserve(y.size() + z.size());
  for (double t : y.times)
    if (t <= t_hi) grid.push_back(t);
  for (double t : z.times)
    if (t <= t_hi) grid.push_back(t);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  ComparisonReport rep;
  rep.holds = true;
  double prev_d = y.values.front() - z.values.front();
  double prev_t = grid.front();
  for (double t : grid) {
    const double d = y.interpolate(t) - z.interpolate(t);
    if (d > 0.0) {
      rep.holds = false;
      if (!rep.first_crossing) {
        // Interpolated root of the sign change in (prev_t, t].
        rep.first_crossing =
            (prev_d < 0.0 && t > prev_t)
                ? prev_t + (t - prev_t) * (-prev_d) / (d - prev_d)
                : t;
      }
    }
    prev_d = d;
    prev_t = t;
  }
  return rep;
}

}  // namespace lt2d::bounds
