#pragma once

#include <utility>
#include <vector>

#include "lt2d/spectral/fft.hpp"
#include "lt2d/spectral/grid.hpp"

namespace lt2d::spectral {

using RVec = std::vector<double>;

/// Biot-Savart inversion: psi_hat = -omega_hat / |k|^2 (psi_hat(0) = 0),
/// u = (-d2 psi, d1 psi). The result is divergence-free to round-off.
/// Requires zero-mean vorticity.
void velocity_from_vorticity_into(const CVec& omega_hat, const Grid2D& g,
                                  CVec& u1_hat, CVec& u2_hat);
std::pair<CVec, CVec> velocity_from_vorticity(const CVec& omega_hat,
                                              const Grid2D& g);

/// Spectral partial derivative along axis (0 = x, 1 = y).
void derivative_into(const CVec& f_hat, const Grid2D& g, int axis, CVec& out);

/// Zeroes every mode with |k1| > n/3 or |k2| > n/3.
void apply_dealias(CVec& f_hat, const Grid2D& g);

void set_mean_zero(CVec& f_hat);

/// Max |fhat(-k) - conj(fhat(k))| over the lattice (0 for a real field).
double hermitian_defect(const CVec& f_hat, const Grid2D& g);
/// Max |k| infinity-norm outside the dealias band with nonzero coefficient
/// magnitude above tol (0 means the field is in-band).
double band_leakage(const CVec& f_hat, const Grid2D& g, double tol = 0.0);

/// Inverse transform to the physical grid, discarding the round-off
/// imaginary part. scratch must come from fft.make_buffer().
void to_physical_into(const CVec& f_hat, const Fft2D& fft, CVec& scratch,
                      RVec& out);
RVec to_physical(const CVec& f_hat, const Fft2D& fft);

void from_physical_into(const RVec& f, const Fft2D& fft, CVec& out);
CVec from_physical(const RVec& f, const Fft2D& fft);

double max_abs(const RVec& f);
/// Grid L2 norm sqrt(sum f^2 dx^2), the quadrature form of the continuum
/// L2 integral.
double l2_norm_grid(const RVec& f, const Grid2D& g);

/// Sobolev norm sqrt(sum_k (1 + |k|^2)^s |fhat_k|^2 length^2) with the
/// physical wavenumber k; for s = 0 this equals the grid L2 norm of the
/// field up to round-off (Parseval).
double sobolev_norm(const CVec& f_hat, double s, const Grid2D& g);

}  // namespace lt2d::spectral
