#pragma once

#include <cstdint>

#include "lt2d/spectral/stepper.hpp"

namespace lt2d::spectral {

/// Band-limited initial data (|k|_inf <= n/8 for random_band), rescaled
/// so that the velocity and scalar H^3 norms hit the targets. A zero
/// target produces the zero field. With nonneg_phi the scalar is shifted
/// to be pointwise >= 0 before the final (nonnegativity-preserving) norm
/// scaling. Deterministic in (kind, seed, grid).
FlowField init_fields(InitKind kind, const Grid2D& g, std::uint64_t seed,
                      double target_u_h3, double target_phi_h3,
                      bool nonneg_phi, const Fft2D& fft);

}  // namespace lt2d::spectral
