#include "lt2d/spectral/pressure.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "lt2d/common/errors.hpp"

namespace lt2d::spectral {

namespace {

// div of a physical vector field, spectral, dealiased: i k1 a1 + i k2 a2.
void divergence_of_physical(const RVec& a1, const RVec& a2, const Grid2D& g,
                            const Fft2D& fft, CVec& s1, CVec& s2, CVec& out) {
  from_physical_into(a1, fft, s1);
  from_physical_into(a2, fft, s2);
  apply_dealias(s1, g);
  apply_dealias(s2, g);
  const int n = g.n();
  out.resize(s1.size());
  for (int iy = 0; iy < n; ++iy) {
    const double k2 = g.k_phys(iy);
    for (int ix = 0; ix < n; ++ix) {
      const double k1 = g.k_phys(ix);
      const std::size_t idx = g.at(iy, ix);
      out[idx] = std::complex<double>(0.0, k1) * s1[idx] +
                 std::complex<double>(0.0, k2) * s2[idx];
    }
  }
}

}  // namespace

PressureSolution pressure_solve(const CVec& v1_hat, const CVec& v2_hat,
                                const RVec& eta, const Grid2D& g,
                                const Fft2D& fft, double tol, int max_iter,
                                const CVec* warm_start) {
  if (!(tol > 0.0) || max_iter < 1)
    throw std::invalid_argument("pressure_solve: bad tol/max_iter");
  const double eta_inf = max_abs(eta);
  if (eta_inf >= 1.0)
    throw std::invalid_argument(
        "pressure_solve: |eta|_inf = " + std::to_string(eta_inf) +
        " >= 1, fixed-point iteration would diverge");

  const int n = g.n();
  const std::size_t sz = g.size();
  CVec s1 = fft.make_buffer(), s2 = fft.make_buffer(), scratch = fft.make_buffer();
  RVec v1, v2, d1, d2, a1, a2, work(sz);

  // rhs0 = -div(v . grad v), assembled from dealiased physical products.
  to_physical_into(v1_hat, fft, scratch, v1);
  to_physical_into(v2_hat, fft, scratch, v2);
  CVec tmp = fft.make_buffer();
  derivative_into(v1_hat, g, 0, tmp);
  to_physical_into(tmp, fft, scratch, d1);  // d1 v1
  derivative_into(v1_hat, g, 1, tmp);
  to_physical_into(tmp, fft, scratch, d2);  // d2 v1
  a1.resize(sz);
  for (std::size_t i = 0; i < sz; ++i) a1[i] = v1[i] * d1[i] + v2[i] * d2[i];
  derivative_into(v2_hat, g, 0, tmp);
  to_physical_into(tmp, fft, scratch, d1);  // d1 v2
  derivative_into(v2_hat, g, 1, tmp);
  to_physical_into(tmp, fft, scratch, d2);  // d2 v2
  a2.resize(sz);
  for (std::size_t i = 0; i < sz; ++i) a2[i] = v1[i] * d1[i] + v2[i] * d2[i];

  CVec rhs0 = fft.make_buffer();
  divergence_of_physical(a1, a2, g, fft, s1, s2, rhs0);
  for (auto& c : rhs0) c = -c;

  PressureSolution sol;
  sol.p_hat = warm_start ? *warm_start : fft.make_buffer();
  CVec p_new = fft.make_buffer();
  CVec div_eta_grad = fft.make_buffer();

  auto eta_grad_div = [&](const CVec& p_hat, CVec& out) {
    // div(eta grad p), spectral.
    derivative_into(p_hat, g, 0, tmp);
    to_physical_into(tmp, fft, scratch, d1);
    derivative_into(p_hat, g, 1, tmp);
    to_physical_into(tmp, fft, scratch, d2);
    for (std::size_t i = 0; i < sz; ++i) {
      a1[i] = eta[i] * d1[i];
      a2[i] = eta[i] * d2[i];
    }
    divergence_of_physical(a1, a2, g, fft, s1, s2, out);
  };

  bool converged = false;
  for (int iter = 1; iter <= max_iter; ++iter) {
    sol.iterations = iter;
    eta_grad_div(sol.p_hat, div_eta_grad);
    // lap p_new = rhs0 - div(eta grad p)  =>  p_new = -(...)/|k|^2.
    for (int iy = 0; iy < n; ++iy) {
      const double k2 = g.k_phys(iy);
      for (int ix = 0; ix < n; ++ix) {
        const double k1 = g.k_phys(ix);
        const std::size_t idx = g.at(iy, ix);
        const double ksq = k1 * k1 + k2 * k2;
        p_new[idx] = ksq == 0.0
                         ? std::complex<double>(0.0)
                         : -(rhs0[idx] - div_eta_grad[idx]) / ksq;
      }
    }
    // Successive sup-difference on the physical grid.
    for (std::size_t i = 0; i < sz; ++i) scratch[i] = p_new[i] - sol.p_hat[i];
    fft.inverse(scratch);
    double diff = 0.0;
    for (std::size_t i = 0; i < sz; ++i)
      diff = std::max(diff, std::abs(scratch[i].real()));
    sol.p_hat.swap(p_new);
    sol.last_diff = diff;
    if (diff < tol) {
      converged = true;
      break;
    }
  }
  if (!converged)
    throw NumericalError("pressure_solve: no convergence after " +
                         std::to_string(max_iter) + " iterations (last diff " +
                         std::to_string(sol.last_diff) + ")");

  // Residual of the original variable-coefficient equation with the
  // accepted p:  |k|^2 p - div(eta grad p) - (-rhs0), grid sup.
  eta_grad_div(sol.p_hat, div_eta_grad);
  for (int iy = 0; iy < n; ++iy) {
    const double k2 = g.k_phys(iy);
    for (int ix = 0; ix < n; ++ix) {
      const double k1 = g.k_phys(ix);
      const std::size_t idx = g.at(iy, ix);
      const double ksq = k1 * k1 + k2 * k2;
      scratch[idx] = ksq * sol.p_hat[idx] - div_eta_grad[idx] + rhs0[idx];
    }
  }
  fft.inverse(scratch);
  double res = 0.0;
  for (std::size_t i = 0; i < sz; ++i)
    res = std::max(res, std::abs(scratch[i].real()));
  sol.residual = res;
  return sol;
}

}  // namespace lt2d::spectral
