#include "lt2d/bounds/dormand_prince.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lt2d/common/errors.hpp"

namespace lt2d::bounds {

namespace {

// Dormand-Prince 5(4) tableau (FSAL).
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                 a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192,
                 a75 = -2187.0 / 6784, a76 = 11.0 / 84;
// Error coefficients (5th minus embedded 4th order weights).
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
// Dense-output coefficients.
constexpr double d1 = -12715105075.0 / 11282082432.0,
                 d3 = 87487479700.0 / 32700410799.0,
                 d4 = -10690763975.0 / 1880347072.0,
                 d5 = 701980252875.0 / 199316789632.0,
                 d6 = -1453857185.0 / 822651844.0,
                 d7 = 69997945.0 / 29380423.0;

bool all_finite(std::span<const double> v) {
  for (double x : v)
    if (!std::isfinite(x)) return false;
  return true;
}

}  // namespace

OdeOutcome DormandPrince5::integrate(
    const Rhs& f, std::vector<double> y, double t0, double t1,
    std::span<const double> out_times, const Emit& emit, const OdeOptions& opts,
    const StepGuard& guard) {
  const std::size_t n = y.size();
  Outcome out;
  out.t_reached = t0;

  std::size_t next_out = 0;
  auto emit_due = [&](double t) {
    // Emit everything at or before t; call sites guarantee monotone t.
    while (next_out < out_times.size() && out_times[next_out] <= t) {
      emit(out_times[next_out], y);
      ++next_out;
    }
  };
  if (t1 <= t0) {
    emit_due(t0);
    return out;
  }

  std::vector<double> k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n);
  std::vector<double> ytmp(n), ynew(n), yerr(n);
  std::vector<double> rc1(n), rc2(n), rc3(n), rc4(n), rc5(n);

  double t = t0;

  auto eval = [&](double tt, std::span<const double> yy,
                  std::span<double> kk) -> bool {
    try {
      f(tt, yy, kk);
    } catch (const ExponentCapError&) {
      return false;
    }
    return all_finite(kk);
  };

  if (!eval(t, y, k1)) {
    out.status = Status::blowup;
    return out;
  }

  // Starting step size: conservative power-law guess refined by control.
  double d0 = 0.0, d1n = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double sc = opts.abs_tol + opts.rel_tol * std::abs(y[i]);
    d0 = std::max(d0, std::abs(y[i]) / sc);
    d1n = std::max(d1n, std::abs(k1[i]) / sc);
  }
  double h = (d0 < 1e-5 || d1n < 1e-5) ? 1e-6 : 0.01 * (d0 / d1n);
  h = std::min({h, t1 - t0, opts.max_step});

  const double safe = 0.9, beta = 0.04;
  const double expo1 = 0.2 - beta * 0.75;
  double facold = 1.0e-4;
  bool rejected = false;

  for (std::size_t step = 0; step < opts.max_steps; ++step) {
    if (t + h > t1) h = t1 - t;
    const double h_floor = 16.0 * std::numeric_limits<double>::epsilon() *
                           std::max(std::abs(t), 1.0);
    if (h < h_floor) {
      out.status = Status::blowup;
      out.t_reached = t;
      return out;
    }

    bool stage_ok = true;
    for (std::size_t i = 0; i < n; ++i) ytmp[i] = y[i] + h * a21 * k1[i];
    stage_ok = stage_ok && eval(t + c2 * h, ytmp, k2);
    if (stage_ok) {
      for (std::size_t i = 0; i < n; ++i)
        ytmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
      stage_ok = eval(t + c3 * h, ytmp, k3);
    }
    if (stage_ok) {
      for (std::size_t i = 0; i < n; ++i)
        ytmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
      stage_ok = eval(t + c4 * h, ytmp, k4);
    }
    if (stage_ok) {
      for (std::size_t i = 0; i < n; ++i)
        ytmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] +
                              a54 * k4[i]);
      stage_ok = eval(t + c5 * h, ytmp, k5);
    }
    if (stage_ok) {
      for (std::size_t i = 0; i < n; ++i)
        ytmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] +
                              a64 * k4[i] + a65 * k5[i]);
      stage_ok = eval(t + h, ytmp, k6);
    }
    if (stage_ok) {
      for (std::size_t i = 0; i < n; ++i)
        ynew[i] = y[i] + h * (a71 * k1[i] + a73 * k3[i] + a74 * k4[i] +
                              a75 * k5[i] + a76 * k6[i]);
      stage_ok = all_finite(ynew) && eval(t + h, ynew, k7);
    }

    if (!stage_ok) {
      // Overflow inside the step: retry smaller until h underflows.
      h *= 0.5;
      rejected = true;
      ++out.steps_rejected;
      continue;
    }

    double err = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      yerr[i] = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                     e6 * k6[i] + e7 * k7[i]);
      const double sc = opts.abs_tol +
                        opts.rel_tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
      err += (yerr[i] / sc) * (yerr[i] / sc);
    }
    err = std::sqrt(err / static_cast<double>(n));

    const double fac11 = std::pow(err, expo1);
    if (err <= 1.0) {
      // Accepted: prepare dense output over [t, t+h].
      for (std::size_t i = 0; i < n; ++i) {
        const double dy = ynew[i] - y[i];
        const double bspl = h * k1[i] - dy;
        rc1[i] = y[i];
        rc2[i] = dy;
        rc3[i] = bspl;
        rc4[i] = dy - h * k7[i] - bspl;
        rc5[i] = h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] +
                      d6 * k6[i] + d7 * k7[i]);
      }
      while (next_out < out_times.size() && out_times[next_out] <= t + h) {
        const double th = (out_times[next_out] - t) / h;
        const double th1 = 1.0 - th;
        for (std::size_t i = 0; i < n; ++i)
          ytmp[i] = rc1[i] +
                    th * (rc2[i] + th1 * (rc3[i] + th * (rc4[i] + th1 * rc5[i])));
        emit(out_times[next_out], ytmp);
        ++next_out;
      }

      t += h;
      y.swap(ynew);
      k1.swap(k7);  // FSAL
      ++out.steps_accepted;
      out.t_reached = t;

      if (guard && !guard(t, y))
        throw NumericalError("DormandPrince5: step guard rejected state", t);

      if (t >= t1) {
        emit_due(t1);
        return out;
      }
      const double facold_eff = std::max(err, 1.0e-4);
      double fac = fac11 / std::pow(facold, beta);
      fac = std::max(1.0 / 10.0, std::min(5.0, fac / safe));
      double hnew = h / fac;
      if (rejected) hnew = std::min(hnew, h);
      h = std::min(hnew, opts.max_step);
      facold = facold_eff;
      rejected = false;
    } else {
      h = h / std::min(1.0 / 0.1, fac11 / safe);
      rejected = true;
      ++out.steps_rejected;
    }
  }
  throw NumericalError("DormandPrince5: max_steps exceeded", t);
}

}  // namespace lt2d::bounds
