#include "lt2d/bounds/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace lt2d::bounds {

void ModelConstants::validate() const {
  if (!(c_const > 0.0) || !std::isfinite(c_const))
    throw std::invalid_argument("ModelConstants: c_const must be positive");
  if (!(b_const > 0.0) || !std::isfinite(b_const))
    throw std::invalid_argument("ModelConstants: b_const must be positive");
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon))
    throw std::invalid_argument("ModelConstants: epsilon must be >= 0");
  if (!(horizon >= 0.0) || !std::isfinite(horizon))
    throw std::invalid_argument("ModelConstants: horizon must be >= 0");
  if (!(exp_cap > 0.0))
    throw std::invalid_argument("ModelConstants: exp_cap must be positive");
}

double Trajectory::interpolate(double t) const {
  if (empty()) throw std::invalid_argument("Trajectory: empty");
  if (t < times.front() || t > times.back())
    throw std::invalid_argument("Trajectory: t=" + std::to_string(t) +
                                " outside covered span [" +
                                std::to_string(times.front()) + ", " +
                                std::to_string(times.back()) + "]");
  const auto it = std::lower_bound(times.begin(), times.end(), t);
  const std::size_t hi = static_cast<std::size_t>(it - times.begin());
  if (hi == 0) return values.front();
  if (times[hi] == t) return values[hi];
  const std::size_t lo = hi - 1;
  const double w = (t - times[lo]) / (times[hi] - times[lo]);
  return values[lo] + w * (values[hi] - values[lo]);
}

void Trajectory::validate() const {
  if (times.size() != values.size())
    throw std::invalid_argument("Trajectory: times/values length mismatch");
  if (times.empty()) throw std::invalid_argument("Trajectory: empty");
  if (times.front() != 0.0)
    throw std::invalid_argument("Trajectory: times must start at 0");
  for (std::size_t i = 1; i < times.size(); ++i)
    if (!(times[i] > times[i - 1]))
      throw std::invalid_argument("Trajectory: times not strictly increasing");
  for (double v : values)
    if (!std::isfinite(v))
      throw std::invalid_argument("Trajectory: non-finite value");
}

std::vector<double> uniform_grid(double t_end, std::size_t n) {
  if (!(t_end >= 0.0)) throw std::invalid_argument("uniform_grid: t_end < 0");
  if (t_end == 0.0 || n == 0) return {0.0};
  std::vector<double> t(n + 1);
  for (std::size_t j = 0; j <= n; ++j)
    t[j] = t_end * static_cast<double>(j) / static_cast<double>(n);
  t.back() = t_end;
  return t;
}

void cumulative_trapezoid(std::span<const double> t, std::span<const double> f,
                          std::span<double> out) {
  out[0] = 0.0;
  for (std::size_t j = 1; j < t.size(); ++j)
    out[j] = out[j - 1] + 0.5 * (t[j] - t[j - 1]) * (f[j] + f[j - 1]);
}

}  // namespace lt2d::bounds
