#pragma once

#include <span>
#include <string>
#include <vector>

#include "lt2d/spectral/sim_config.hpp"
#include "lt2d/spectral/stepper.hpp"

namespace lt2d::spectral {

/// Per-sample norm bundle. The first ten fields are the external CSV
/// contract (see diagnostics_csv_header); the remaining entries feed the
/// a priori inequality fits and the nh-Euler pointwise checks.
struct DiagnosticsRecord {
  double t = 0.0;
  double u_h3 = 0.0;
  double phi_h3 = 0.0;
  double y_norm = 0.0;   // u_h3 + eps*phi_h3 (Boussinesq), u_h3 (nh-Euler)
  double kinetic = 0.0;  // |u|_L2 (Boussinesq), |sqrt(rho) v|_L2 (nh-Euler)
  double omega_linf = 0.0;
  double omega_l2 = 0.0;
  double phi_max = 0.0;
  double phi_min = 0.0;
  double grad_u_linf = 0.0;  // grid max of the Jacobian entries

  double phi_l2 = 0.0;
  double grad_phi_l2 = 0.0;
  double grad_phi_linf = 0.0;
  double u_l2 = 0.0;
  double inv_rho_min = 1.0;  // nh-Euler only, else 1
  double inv_rho_max = 1.0;
};

std::string diagnostics_csv_header();
std::vector<double> diagnostics_csv_row(const DiagnosticsRecord& r);

DiagnosticsRecord diagnostics(const FlowField& f, const SimConfig& cfg,
                              const Fft2D& fft);

/// One a priori estimate with the smallest constant making it hold over
/// the sampled run. finite=false flags a structurally violated
/// inequality (positive left side against a vanishing right side).
struct FittedInequality {
  std::string name;
  double fitted_c = 0.0;
  bool finite = true;
};

struct AprioriReport {
  std::vector<FittedInequality> items;
  const FittedInequality& by_name(const std::string& name) const;
};

/// Fits the run against the estimates behind the bound derivation:
/// the log-potential gradient bound, its Kozono-Taniuchi refinement, the
/// scalar-gradient transport growth, and the vorticity forcing budget.
/// Requires a uniformly sampled nonempty history.
AprioriReport verify_apriori(std::span<const DiagnosticsRecord> history,
                             const SimConfig& cfg);

}  // namespace lt2d::spectral
