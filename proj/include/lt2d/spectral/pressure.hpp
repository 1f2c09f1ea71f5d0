#pragma once

#include "lt2d/spectral/operators.hpp"

namespace lt2d::spectral {

struct PressureSolution {
  CVec p_hat;           // zero-mean gauge
  int iterations = 0;
  double residual = 0.0;   // grid sup of -div((1+eta) grad p) - div(v.grad v)
  double last_diff = 0.0;  // final successive sup-difference
};

/// Solves the variable-coefficient pressure equation
///   -div((1 + eta) grad p) = div(v . grad v)
/// by the fixed-point iteration
///   lap p_(k+1) = -div(v . grad v) - div(eta grad p_k)
/// with the spectral inverse Laplacian and zero-mean gauge. The iteration
/// contracts when |eta|_inf < 1; the admissible perturbation regime keeps
/// |eta|_inf <= 1/3. Stops when the successive sup-difference drops below
/// tol; throws NumericalError when max_iter is hit first. warm_start, if
/// given, seeds the iteration (the final result does not depend on it
/// beyond the stopping tolerance).
PressureSolution pressure_solve(const CVec& v1_hat, const CVec& v2_hat,
                                const RVec& eta, const Grid2D& g,
                                const Fft2D& fft, double tol, int max_iter,
                                const CVec* warm_start = nullptr);

}  // namespace lt2d::spectral
