#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace lt2d::spectral {

/// Allocator backed by fftw_malloc so every field buffer meets FFTW's
/// SIMD alignment and plans can be executed on any of them.
template <class T>
struct FftwAllocator {
  using value_type = T;
  FftwAllocator() = default;
  template <class U>
  FftwAllocator(const FftwAllocator<U>&) {}
  T* allocate(std::size_t n);
  void deallocate(T* p, std::size_t) noexcept;
  bool operator==(const FftwAllocator&) const { return true; }
};

/// Complex field storage, row-major n x n (used for both spectral
/// coefficients and physical-space scratch).
using CVec = std::vector<std::complex<double>, FftwAllocator<std::complex<double>>>;

/// Complex-to-complex 2D transforms of size n x n with the coefficient
/// convention f(x) = sum_k fhat_k exp(i k.x): forward() divides by n^2,
/// inverse() is the plain unnormalized backward transform. Plans are
/// created once (FFTW_ESTIMATE, so results are reproducible run to run)
/// and executed on caller buffers.
class Fft2D {
 public:
  explicit Fft2D(int n);
  ~Fft2D();
  Fft2D(const Fft2D&) = delete;
  Fft2D& operator=(const Fft2D&) = delete;

  int n() const { return n_; }
  CVec make_buffer() const;

  void forward(CVec& inout) const;
  void inverse(CVec& inout) const;

 private:
  int n_;
  void* plan_fwd_;
  void* plan_bwd_;
};

}  // namespace lt2d::spectral
