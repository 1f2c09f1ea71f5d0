#include "lt2d/spectral/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace lt2d::spectral {

void velocity_from_vorticity_into(const CVec& omega_hat, const Grid2D& g,
                                  CVec& u1_hat, CVec& u2_hat) {
  const int n = g.n();
  u1_hat.resize(omega_hat.size());
  u2_hat.resize(omega_hat.size());
  for (int iy = 0; iy < n; ++iy) {
    const double k2 = g.k_phys(iy);
    for (int ix = 0; ix < n; ++ix) {
      const double k1 = g.k_phys(ix);
      const std::size_t idx = g.at(iy, ix);
      const double ksq = k1 * k1 + k2 * k2;
      if (ksq == 0.0) {
        u1_hat[idx] = 0.0;
        u2_hat[idx] = 0.0;
        continue;
      }
      // psi_hat = -omega_hat / ksq; u = (-d2 psi, d1 psi)
      const std::complex<double> psi = -omega_hat[idx] / ksq;
      u1_hat[idx] = std::complex<double>(0.0, -k2) * psi;
      u2_hat[idx] = std::complex<double>(0.0, k1) * psi;
    }
  }
}

std::pair<CVec, CVec> velocity_from_vorticity(const CVec& omega_hat,
                                              const Grid2D& g) {
  std::pair<CVec, CVec> uv;
  velocity_from_vorticity_into(omega_hat, g, uv.first, uv.second);
  return uv;
}

void derivative_into(const CVec& f_hat, const Grid2D& g, int axis, CVec& out) {
  const int n = g.n();
  out.resize(f_hat.size());
  for (int iy = 0; iy < n; ++iy) {
    for (int ix = 0; ix < n; ++ix) {
      const std::size_t idx = g.at(iy, ix);
      const double k = axis == 0 ? g.k_phys(ix) : g.k_phys(iy);
      out[idx] = std::complex<double>(0.0, k) * f_hat[idx];
    }
  }
}

void apply_dealias(CVec& f_hat, const Grid2D& g) {
  const int n = g.n();
  const int lim = g.dealias_limit();
  for (int iy = 0; iy < n; ++iy) {
    const bool y_out = std::abs(g.k_index(iy)) > lim;
    for (int ix = 0; ix < n; ++ix) {
      if (y_out || std::abs(g.k_index(ix)) > lim) f_hat[g.at(iy, ix)] = 0.0;
    }
  }
}

void set_mean_zero(CVec& f_hat) { f_hat[0] = 0.0; }

double hermitian_defect(const CVec& f_hat, const Grid2D& g) {
  const int n = g.n();
  double worst = 0.0;
  for (int iy = 0; iy < n; ++iy) {
    const int my = (n - iy) % n;
    for (int ix = 0; ix < n; ++ix) {
      const int mx = (n - ix) % n;
      const auto d = f_hat[g.at(my, mx)] - std::conj(f_hat[g.at(iy, ix)]);
      worst = std::max(worst, std::abs(d));
    }
  }
  return worst;
}

double band_leakage(const CVec& f_hat, const Grid2D& g, double tol) {
  const int n = g.n();
  double worst = 0.0;
  for (int iy = 0; iy < n; ++iy)
    for (int ix = 0; ix < n; ++ix)
      if (!g.in_band(ix, iy) && std::abs(f_hat[g.at(iy, ix)]) > tol)
        worst = std::max(worst, std::abs(f_hat[g.at(iy, ix)]));
  return worst;
}

void to_physical_into(const CVec& f_hat, const Fft2D& fft, CVec& scratch,
                      RVec& out) {
  scratch = f_hat;
  fft.inverse(scratch);
  out.resize(f_hat.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = scratch[i].real();
}

RVec to_physical(const CVec& f_hat, const Fft2D& fft) {
  CVec scratch = fft.make_buffer();
  RVec out;
  to_physical_into(f_hat, fft, scratch, out);
  return out;
}

void from_physical_into(const RVec& f, const Fft2D& fft, CVec& out) {
  out.resize(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i];
  fft.forward(out);
}

CVec from_physical(const RVec& f, const Fft2D& fft) {
  CVec out = fft.make_buffer();
  from_physical_into(f, fft, out);
  return out;
}

double max_abs(const RVec& f) {
  double m = 0.0;
  for (double v : f) m = std::max(m, std::abs(v));
  return m;
}

double l2_norm_grid(const RVec& f, const Grid2D& g) {
  double s = 0.0;
  for (double v : f) s += v * v;
  return std::sqrt(s) * g.dx();
}

double sobolev_norm(const CVec& f_hat, double s, const Grid2D& g) {
  const int n = g.n();
  double acc = 0.0;
  for (int iy = 0; iy < n; ++iy) {
    const double k2 = g.k_phys(iy);
    for (int ix = 0; ix < n; ++ix) {
      const double k1 = g.k_phys(ix);
      const double w = std::pow(1.0 + k1 * k1 + k2 * k2, s);
      acc += w * std::norm(f_hat[g.at(iy, ix)]);
    }
  }
  return std::sqrt(acc) * g.length();
}

}  // namespace lt2d::spectral
