#include "lt2d/spectral/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace lt2d::spectral {

Grid2D::Grid2D(int n, double length) : n_(n), length_(length) {
  if (n < 16 || (n & (n - 1)) != 0)
    throw std::invalid_argument("Grid2D: n must be a power of two >= 16, got " +
                                std::to_string(n));
  if (!(length > 0.0) || !std::isfinite(length))
    throw std::invalid_argument("Grid2D: length must be positive");
  k_scale_ = kTwoPi / length_;
}

}  // namespace lt2d::spectral
