#include "lt2d/spectral/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "lt2d/spectral/operators.hpp"

namespace lt2d::spectral {

std::string diagnostics_csv_header() {
  return "t,u_h3,phi_h3,y_norm,kinetic,omega_linf,omega_l2,phi_max,phi_min,"
         "grad_u_linf";
}

std::vector<double> diagnostics_csv_row(const DiagnosticsRecord& r) {
  return {r.t,          r.u_h3,     r.phi_h3,  r.y_norm,  r.kinetic,
          r.omega_linf, r.omega_l2, r.phi_max, r.phi_min, r.grad_u_linf};
}

DiagnosticsRecord diagnostics(const FlowField& f, const SimConfig& cfg,
                              const Fft2D& fft) {
  const Grid2D g(cfg.n, cfg.length);
  const std::size_t sz = g.size();
  DiagnosticsRecord r;
  r.t = f.time;

  auto [u1_hat, u2_hat] = velocity_from_vorticity(f.omega_hat, g);
  r.u_h3 = std::hypot(sobolev_norm(u1_hat, 3.0, g), sobolev_norm(u2_hat, 3.0, g));
  r.phi_h3 = sobolev_norm(f.phi_hat, 3.0, g);
  r.y_norm = cfg.system == System::boussinesq ? r.u_h3 + cfg.epsilon * r.phi_h3
                                              : r.u_h3;

  const RVec u1 = to_physical(u1_hat, fft);
  const RVec u2 = to_physical(u2_hat, fft);
  const RVec om = to_physical(f.omega_hat, fft);
  const RVec ph = to_physical(f.phi_hat, fft);

  r.omega_linf = max_abs(om);
  r.omega_l2 = sobolev_norm(f.omega_hat, 0.0, g);
  r.phi_l2 = sobolev_norm(f.phi_hat, 0.0, g);
  r.u_l2 = std::hypot(l2_norm_grid(u1, g), l2_norm_grid(u2, g));

  r.phi_max = -std::numeric_limits<double>::infinity();
  r.phi_min = std::numeric_limits<double>::infinity();
  for (double v : ph) {
    r.phi_max = std::max(r.phi_max, v);
    r.phi_min = std::min(r.phi_min, v);
  }

  if (cfg.system == System::nh_euler) {
    double ksum = 0.0;
    double irho_min = std::numeric_limits<double>::infinity();
    double irho_max = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < sz; ++i) {
      const double rho = 1.0 + cfg.epsilon * ph[i];
      ksum += rho * (u1[i] * u1[i] + u2[i] * u2[i]);
      irho_min = std::min(irho_min, 1.0 / rho);
      irho_max = std::max(irho_max, 1.0 / rho);
    }
    r.kinetic = std::sqrt(ksum) * g.dx();
    r.inv_rho_min = irho_min;
    r.inv_rho_max = irho_max;
  } else {
    r.kinetic = r.u_l2;
  }

  // Jacobian entries and scalar gradient, spectral derivatives.
  CVec tmp = fft.make_buffer();
  RVec d;
  double grad_u = 0.0;
  for (const CVec* comp : {&u1_hat, &u2_hat}) {
    for (int axis : {0, 1}) {
      derivative_into(*comp, g, axis, tmp);
      fft.inverse(tmp);
      for (std::size_t i = 0; i < sz; ++i)
        grad_u = std::max(grad_u, std::abs(tmp[i].real()));
    }
  }
  r.grad_u_linf = grad_u;

  double gp_sq = 0.0, gp_inf = 0.0;
  RVec gx(sz), gy(sz);
  derivative_into(f.phi_hat, g, 0, tmp);
  fft.inverse(tmp);
  for (std::size_t i = 0; i < sz; ++i) gx[i] = tmp[i].real();
  derivative_into(f.phi_hat, g, 1, tmp);
  fft.inverse(tmp);
  for (std::size_t i = 0; i < sz; ++i) gy[i] = tmp[i].real();
  for (std::size_t i = 0; i < sz; ++i) {
    const double m2 = gx[i] * gx[i] + gy[i] * gy[i];
    gp_sq += m2;
    gp_inf = std::max(gp_inf, std::sqrt(m2));
  }
  r.grad_phi_l2 = std::sqrt(gp_sq) * g.dx();
  r.grad_phi_linf = gp_inf;
  return r;
}

const FittedInequality& AprioriReport::by_name(const std::string& name) const {
  for (const auto& it : items)
    if (it.name == name) return it;
  throw std::invalid_argument("AprioriReport: no item named " + name);
}

namespace {

double log_plus(double x) { return std::max(std::log(x), 0.0); }

}  // namespace

AprioriReport verify_apriori(std::span<const DiagnosticsRecord> history,
                             const SimConfig& cfg) {
  if (history.empty())
    throw std::invalid_argument("verify_apriori: empty history");
  const std::size_t m = history.size();
  if (m >= 3) {
    const double h0 = history[1].t - history[0].t;
    for (std::size_t i = 2; i < m; ++i)
      if (std::abs((history[i].t - history[i - 1].t) - h0) > 1e-9 * std::max(1.0, h0))
        throw std::invalid_argument("verify_apriori: nonuniform sampling");
  }

  AprioriReport rep;

  // |Du|_inf <= C [1 + (1 + log+ |u|_H3) |omega|_inf + |omega|_L2].
  {
    double c = 0.0;
    for (const auto& r : history) {
      const double rhs =
          1.0 + (1.0 + log_plus(r.u_h3)) * r.omega_linf + r.omega_l2;
      c = std::max(c, r.grad_u_linf / rhs);
    }
    rep.items.push_back({"grad_u_potential", c, true});
  }

  // Kozono-Taniuchi refinement: |Du|_inf <= C [1 + log(1+|u|_H3) |omega|_inf].
  {
    double c = 0.0;
    for (const auto& r : history) {
      const double rhs = 1.0 + std::log1p(r.u_h3) * r.omega_linf;
      c = std::max(c, r.grad_u_linf / rhs);
    }
    rep.items.push_back({"kozono_taniuchi", c, true});
  }

  // |grad phi(t)|_L2 <= C |grad phi_0|_L2 exp(int_0^t |Du|_inf).
  {
    double c = 0.0;
    bool finite = true;
    const double base = history.front().grad_phi_l2;
    double integral = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      if (i > 0)
        integral += 0.5 * (history[i].t - history[i - 1].t) *
                    (history[i].grad_u_linf + history[i - 1].grad_u_linf);
      const double rhs = base * std::exp(integral);
      if (rhs == 0.0) {
        if (history[i].grad_phi_l2 > 0.0) finite = false;
        continue;
      }
      c = std::max(c, history[i].grad_phi_l2 / rhs);
    }
    rep.items.push_back({"grad_phi_transport", c, finite});
  }

  // |omega(t)|_L2 <= |omega_0|_L2 + C eps int_0^t |grad phi|_L2.
  {
    double c = 0.0;
    bool finite = true;
    const double w0 = history.front().omega_l2;
    const double tiny = 1e-12 * std::max(1.0, w0);
    double integral = 0.0;
    for (std::size_t i = 1; i < m; ++i) {
      integral += 0.5 * (history[i].t - history[i - 1].t) *
                  (history[i].grad_phi_l2 + history[i - 1].grad_phi_l2);
      const double excess = history[i].omega_l2 - w0;
      if (excess <= tiny) continue;
      const double denom = cfg.epsilon * integral;
      if (denom == 0.0) {
        finite = false;
        continue;
      }
      c = std::max(c, excess / denom);
    }
    rep.items.push_back({"vorticity_forcing", c, finite});
  }
  return rep;
}

}  // namespace lt2d::spectral
