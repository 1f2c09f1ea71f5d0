#include "lt2d/spectral/init.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "lt2d/spectral/operators.hpp"

namespace lt2d::spectral {

namespace {

// Coefficient at integer mode (kx, ky); (-k) gets the conjugate.
void set_mode(CVec& f_hat, const Grid2D& g, int kx, int ky,
              std::complex<double> c) {
  const int n = g.n();
  f_hat[g.at((ky % n + n) % n, (kx % n + n) % n)] = c;
}

void hermitian_pair(CVec& f_hat, const Grid2D& g, int kx, int ky,
                    std::complex<double> c) {
  set_mode(f_hat, g, kx, ky, c);
  set_mode(f_hat, g, -kx, -ky, std::conj(c));
}

// Random band-limited field: decaying spectrum, random phases, Hermitian
// by construction. include_zero_mode keeps k = 0 empty either way; the
// scalar may acquire one later from the nonnegativity shift.
CVec random_band_field(const Grid2D& g, std::mt19937_64& rng) {
  CVec f(g.size());
  const int kmax = g.n() / 8;
  const double sigma = g.n() / 16.0;
  std::uniform_real_distribution<double> phase(0.0, kTwoPi);
  for (int ky = -kmax; ky <= kmax; ++ky) {
    for (int kx = -kmax; kx <= kmax; ++kx) {
      // Half-plane walk so each pair is drawn exactly once.
      if (ky < 0 || (ky == 0 && kx <= 0)) continue;
      const double ksq = double(kx) * kx + double(ky) * ky;
      const double amp = std::exp(-ksq / (2.0 * sigma * sigma));
      const double th = phase(rng);
      hermitian_pair(f, g, kx, ky,
                     0.5 * amp * std::complex<double>(std::cos(th), std::sin(th)));
    }
  }
  return f;
}

double velocity_h3(const CVec& omega_hat, const Grid2D& g) {
  auto [u1, u2] = velocity_from_vorticity(omega_hat, g);
  return std::hypot(sobolev_norm(u1, 3.0, g), sobolev_norm(u2, 3.0, g));
}

void scale(CVec& f, double factor) {
  for (auto& c : f) c *= factor;
}

}  // namespace

FlowField init_fields(InitKind kind, const Grid2D& g, std::uint64_t seed,
                      double target_u_h3, double target_phi_h3,
                      bool nonneg_phi, const Fft2D& fft) {
  if (!(target_u_h3 >= 0.0) || !(target_phi_h3 >= 0.0))
    throw std::invalid_argument("init_fields: targets must be >= 0");

  FlowField f;
  f.omega_hat.assign(g.size(), {});
  f.phi_hat.assign(g.size(), {});

  switch (kind) {
    case InitKind::taylor_green:
      // omega = 2 cos x cos y, phi = cos x.
      hermitian_pair(f.omega_hat, g, 1, 1, {0.5, 0.0});
      hermitian_pair(f.omega_hat, g, 1, -1, {0.5, 0.0});
      hermitian_pair(f.phi_hat, g, 1, 0, {0.5, 0.0});
      break;
    case InitKind::single_mode:
      // omega = sin x, phi = cos x.
      hermitian_pair(f.omega_hat, g, 1, 0, {0.0, -0.5});
      hermitian_pair(f.phi_hat, g, 1, 0, {0.5, 0.0});
      break;
    case InitKind::random_band: {
      std::mt19937_64 rng(seed);
      f.omega_hat = random_band_field(g, rng);
      f.phi_hat = random_band_field(g, rng);
      break;
    }
  }
  set_mean_zero(f.omega_hat);
  apply_dealias(f.omega_hat, g);
  apply_dealias(f.phi_hat, g);

  if (target_u_h3 == 0.0) {
    f.omega_hat.assign(g.size(), {});
  } else {
    const double cur = velocity_h3(f.omega_hat, g);
    if (cur == 0.0) throw std::invalid_argument("init_fields: zero base field");
    scale(f.omega_hat, target_u_h3 / cur);
  }

  if (target_phi_h3 == 0.0) {
    f.phi_hat.assign(g.size(), {});
    return f;
  }
  if (nonneg_phi) {
    // Shift so min phi = 0; positive rescaling below preserves the sign.
    const RVec phys = to_physical(f.phi_hat, fft);
    double lo = phys[0];
    for (double v : phys) lo = std::min(lo, v);
    f.phi_hat[0] -= lo;
  }
  const double cur = sobolev_norm(f.phi_hat, 3.0, g);
  if (cur == 0.0) throw std::invalid_argument("init_fields: zero base scalar");
  scale(f.phi_hat, target_phi_h3 / cur);
  return f;
}

}  // namespace lt2d::spectral
