#include "lt2d/spectral/fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <stdexcept>

namespace lt2d::spectral {

template <class T>
T* FftwAllocator<T>::allocate(std::size_t n) {
  void* p = fftw_malloc(n * sizeof(T));
  if (!p) throw std::bad_alloc();
  return static_cast<T*>(p);
}

template <class T>
void FftwAllocator<T>::deallocate(T* p, std::size_t) noexcept {
  fftw_free(p);
}

template struct FftwAllocator<std::complex<double>>;

namespace {
// FFTW planning is not thread-safe; execution is.
std::mutex& plan_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

Fft2D::Fft2D(int n) : n_(n) {
  std::lock_guard<std::mutex> lock(plan_mutex());
  CVec scratch(static_cast<std::size_t>(n) * n);
  auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
  plan_fwd_ = fftw_plan_dft_2d(n, n, buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
  plan_bwd_ = fftw_plan_dft_2d(n, n, buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
  if (!plan_fwd_ || !plan_bwd_)
    throw std::runtime_error("Fft2D: FFTW planning failed");
}

Fft2D::~Fft2D() {
  std::lock_guard<std::mutex> lock(plan_mutex());
  fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
  fftw_destroy_plan(static_cast<fftw_plan>(plan_bwd_));
}

CVec Fft2D::make_buffer() const {
  return CVec(static_cast<std::size_t>(n_) * n_);
}

void Fft2D::forward(CVec& inout) const {
  auto* buf = reinterpret_cast<fftw_complex*>(inout.data());
  fftw_execute_dft(static_cast<fftw_plan>(plan_fwd_), buf, buf);
  const double scale = 1.0 / (static_cast<double>(n_) * n_);
  for (auto& c : inout) c *= scale;
}

void Fft2D::inverse(CVec& inout) const {
  auto* buf = reinterpret_cast<fftw_complex*>(inout.data());
  fftw_execute_dft(static_cast<fftw_plan>(plan_bwd_), buf, buf);
}

}  // namespace lt2d::spectral
