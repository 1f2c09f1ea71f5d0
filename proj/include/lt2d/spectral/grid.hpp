#pragma once

#include <cstddef>
#include <cstdlib>
#include <numbers>

namespace lt2d::spectral {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Uniform periodic n x n grid on [0, length)^2 with the standard FFT
/// wavenumber layout. n must be a power of two, at least 16. The dealias
/// band keeps integer wavenumbers with |k1|, |k2| <= n/3 (2/3 rule);
/// since n is a power of two the retained band is strictly alias-free
/// for quadratic products.
class Grid2D {
 public:
  explicit Grid2D(int n, double length = kTwoPi);

  int n() const { return n_; }
  double length() const { return length_; }
  std::size_t size() const { return static_cast<std::size_t>(n_) * n_; }
  double dx() const { return length_ / n_; }

  /// Signed integer wavenumber for FFT index i in [0, n).
  int k_index(int i) const { return i <= n_ / 2 - 1 ? i : i - n_; }
  /// Physical wavenumber (2 pi / length) * k.
  double k_phys(int i) const { return k_scale_ * k_index(i); }
  double k_scale() const { return k_scale_; }

  int dealias_limit() const { return n_ / 3; }
  bool in_band(int i, int j) const {
    const int lim = dealias_limit();
    return std::abs(k_index(i)) <= lim && std::abs(k_index(j)) <= lim;
  }

  /// Row-major index; ix is the fast (x) direction.
  std::size_t at(int iy, int ix) const {
    return static_cast<std::size_t>(iy) * n_ + ix;
  }
  double x(int ix) const { return dx() * ix; }
  double y(int iy) const { return dx() * iy; }

 private:
  int n_;
  double length_;
  double k_scale_;
};

}  // namespace lt2d::spectral
