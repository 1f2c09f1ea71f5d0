#include "lt2d/bounds/picard.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "lt2d/bounds/thresholds.hpp"
#include "lt2d/common/errors.hpp"
#include "lt2d/common/math_util.hpp"

namespace lt2d::bounds {

namespace {

// F at every node of (t, w); all nested integrals by cumulative trapezoid.
std::vector<double> forcing_on_grid(std::span<const double> t,
                                    std::span<const double> w,
                                    const ModelConstants& mc) {
  const std::size_t n = t.size();
  std::vector<double> q(n), xi(n), r(n), integral(n), f(n);
  for (std::size_t j = 0; j < n; ++j)
    q[j] = checked_exp(w[j] * std::exp(mc.c_const * t[j]), mc.exp_cap);
  cumulative_trapezoid(t, q, xi);
  for (std::size_t j = 0; j < n; ++j)
    r[j] = checked_exp(mc.b_const * xi[j], mc.exp_cap);
  cumulative_trapezoid(t, r, integral);
  for (std::size_t j = 0; j < n; ++j)
    f[j] = mc.c_const *
           (w[j] * integral[j] + std::exp(-mc.c_const * t[j]) * r[j]);
  return f;
}

}  // namespace

std::vector<double> mild_forcing_profile(const Trajectory& w_hist,
                                         const ModelConstants& mc) {
  w_hist.validate();
  return forcing_on_grid(w_hist.times, w_hist.values, mc);
}

double mild_forcing_boussinesq(double t, const Trajectory& w_hist,
                               const ModelConstants& mc) {
  w_hist.validate();
  if (t < 0.0 || t > w_hist.t_end())
    throw std::invalid_argument("mild_forcing_boussinesq: history does not cover t=" +
                                std::to_string(t));
  // Work on the sub-grid of history nodes up to t, appending t itself
  // (with interpolated w) when it falls between nodes.
  const auto end_it =
      std::upper_bound(w_hist.times.begin(), w_hist.times.end(), t);
  std::size_t m = static_cast<std::size_t>(end_it - w_hist.times.begin());
  std::vector<double> tt(w_hist.times.begin(), w_hist.times.begin() + m);
  std::vector<double> ww(w_hist.values.begin(), w_hist.values.begin() + m);
  if (tt.empty() || tt.back() < t) {
    tt.push_back(t);
    ww.push_back(w_hist.interpolate(t));
  }
  return forcing_on_grid(tt, ww, mc).back();
}

PicardResult picard_solve(double w0, const ModelConstants& mc,
                          std::size_t grid_n, double tol,
                          std::size_t max_iter) {
  mc.validate();
  if (!(w0 > 1.0))
    throw std::invalid_argument("picard_solve: w0 must exceed 1");
  if (grid_n < 2)
    throw std::invalid_argument("picard_solve: grid_n must be at least 2");
  if (!(tol > 0.0))
    throw std::invalid_argument("picard_solve: tol must be positive");

  PicardResult res;
  if (mc.horizon > 0.0) {
    const ThresholdReport rep = thresholds(w0, mc);
    res.regime_warning =
        mc.epsilon > 0.0 && std::log(mc.epsilon) >= rep.log_eps2;
  }

  const std::vector<double> grid = uniform_grid(mc.horizon, grid_n);
  const std::size_t n = grid.size();
  std::vector<double> w(n, w0), w_next(n), cum(n);
  double prev_diff = -1.0;

  for (std::size_t iter = 1; iter <= max_iter; ++iter) {
    const std::vector<double> f = forcing_on_grid(grid, w, mc);
    cumulative_trapezoid(grid, f, cum);
    double diff = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      w_next[j] = w0 + mc.epsilon * cum[j];
      diff = std::max(diff, std::abs(w_next[j] - w[j]));
    }
    w.swap(w_next);
    res.iterations = iter;
    res.final_diff = diff;
    if (prev_diff > 0.0)
      res.contraction_estimate =
          std::max(res.contraction_estimate, diff / prev_diff);
    if (diff < tol) {
      res.w.times = grid;
      res.w.values = std::move(w);
      return res;
    }
    prev_diff = diff;
  }
  throw NumericalError("picard_solve: no convergence after " +
                       std::to_string(max_iter) + " iterations (last diff " +
                       std::to_string(res.final_diff) + ")");
}

}  // namespace lt2d::bounds
