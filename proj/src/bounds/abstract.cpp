#include "lt2d/bounds/abstract.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "lt2d/common/errors.hpp"
#include "lt2d/common/math_util.hpp"

namespace lt2d::bounds {

Trajectory solve_abstract(const ScalarMap& g, const HistoryFunctional& f_bar,
                          double y0, const ModelConstants& mc,
                          std::size_t grid_n) {
  mc.validate();
  if (!g || !f_bar)
    throw std::invalid_argument("solve_abstract: g and f_bar must be callable");
  if (grid_n < 2)
    throw std::invalid_argument("solve_abstract: grid_n must be at least 2");

  Trajectory traj;
  traj.times = uniform_grid(mc.horizon, grid_n);
  traj.values.assign(1, y0);
  if (mc.horizon == 0.0) return traj;

  // Scratch history with one slot for the in-step stage point.
  std::vector<double> st(traj.times.size() + 1), sv(traj.times.size() + 1);

  auto rhs = [&](std::size_t filled, double t, double y) {
    st[filled] = t;
    sv[filled] = y;
    const HistoryView hist{{st.data(), filled + 1}, {sv.data(), filled + 1}};
    return g(y) * (1.0 + mc.epsilon * f_bar(t, hist));
  };

  try {
    for (std::size_t j = 0; j + 1 < traj.times.size(); ++j) {
      const double t = traj.times[j];
      const double h = traj.times[j + 1] - t;
      const double y = traj.values[j];
      std::copy(traj.values.begin(), traj.values.end(), sv.begin());
      std::copy(traj.times.begin(), traj.times.begin() + j + 1, st.begin());

      const double k1 = rhs(j, t, y);
      const double k2 = rhs(j + 1, t + 0.5 * h, y + 0.5 * h * k1);
      const double k3 = rhs(j + 1, t + 0.5 * h, y + 0.5 * h * k2);
      const double k4 = rhs(j + 1, t + h, y + h * k3);
      const double y_next = y + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      if (!std::isfinite(y_next))
        throw NumericalError("solve_abstract: solution blew up", t);
      traj.values.push_back(y_next);
    }
  } catch (const ExponentCapError& e) {
    throw NumericalError(std::string("solve_abstract: blow-up (") + e.what() +
                             ")",
                         traj.times[traj.values.size() - 1]);
  }
  return traj;
}

ScalarMap abstract_log_growth(const ModelConstants& mc) {
  const double c = mc.c_const;
  return [c](double y) { return c * y * (1.0 + std::log(y)); };
}

namespace {

// A(t) = integral of v, B(t) = integral of exp(A) on the history grid.
void history_integrals(const HistoryView& h, double cap, double shift,
                       double c_scale, std::vector<double>& a,
                       std::vector<double>& b) {
  const std::size_t n = h.times.size();
  a.resize(n);
  b.resize(n);
  a[0] = 0.0;
  for (std::size_t j = 1; j < n; ++j)
    a[j] = a[j - 1] + 0.5 * (h.times[j] - h.times[j - 1]) *
                          ((h.values[j] - shift) + (h.values[j - 1] - shift));
  std::vector<double> ea(n);
  for (std::size_t j = 0; j < n; ++j) ea[j] = checked_exp(c_scale * a[j], cap);
  b[0] = 0.0;
  for (std::size_t j = 1; j < n; ++j)
    b[j] = b[j - 1] + 0.5 * (h.times[j] - h.times[j - 1]) * (ea[j] + ea[j - 1]);
}

}  // namespace

HistoryFunctional abstract_boussinesq_functional(const ModelConstants& mc) {
  const double cap = mc.exp_cap;
  return [cap](double, const HistoryView& h) {
    thread_local std::vector<double> a, b;
    history_integrals(h, cap, 0.0, 1.0, a, b);
    const double y_now = h.values.back();
    return b.back() + checked_exp(a.back(), cap) / (1.0 + std::log(y_now));
  };
}

HistoryFunctional abstract_nheuler_functional(const ModelConstants& mc) {
  const double cap = mc.exp_cap;
  const double c = mc.c_const;
  const double eps = mc.epsilon;
  return [cap, c, eps](double, const HistoryView& h) {
    thread_local std::vector<double> a;
    const std::size_t n = h.times.size();
    a.resize(n);
    a[0] = 0.0;
    for (std::size_t j = 1; j < n; ++j)
      a[j] = a[j - 1] + 0.5 * (h.times[j] - h.times[j - 1]) *
                            ((h.values[j] - 1.0) + (h.values[j - 1] - 1.0));
    // i2 = integral of Z^3 Y (1 + Y + eps^2 Z^6), Z = exp(C A), Y = v - 1.
    double i2 = 0.0;
    double prev = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double y = h.values[j] - 1.0;
      const double z3 = checked_exp(3.0 * c * a[j], cap);
      double eps2_z6 = 0.0;
      if (eps > 0.0)
        eps2_z6 = checked_exp(2.0 * std::log(eps) + 6.0 * c * a[j], cap);
      const double integrand = z3 * y * (1.0 + y + eps2_z6);
      if (j > 0)
        i2 += 0.5 * (h.times[j] - h.times[j - 1]) * (integrand + prev);
      prev = integrand;
    }
    const double u = h.values.back();
    const double log_u = std::log(u);
    const double exp_ca = checked_exp(c * a.back(), cap);
    const double hfun =
        (1.0 + log_u) * exp_ca + u * log_u * i2 + eps * log_u * i2 * exp_ca;
    return hfun / (1.0 + log_u);
  };
}

}  // namespace lt2d::bounds
