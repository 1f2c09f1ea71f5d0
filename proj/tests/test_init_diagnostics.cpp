#include <doctest.h>

#include <cmath>

#include "lt2d/spectral/diagnostics.hpp"
#include "lt2d/spectral/init.hpp"
#include "lt2d/spectral/simulate.hpp"

using namespace lt2d::spectral;

TEST_CASE("init_fields hits the norm targets") {
  Grid2D g(32);
  Fft2D fft(32);
  for (auto kind :
       {InitKind::taylor_green, InitKind::single_mode, InitKind::random_band}) {
    const auto f = init_fields(kind, g, 42, 1.7, 0.6, false, fft);
    auto [u1, u2] = velocity_from_vorticity(f.omega_hat, g);
    const double uh3 =
        std::hypot(sobolev_norm(u1, 3.0, g), sobolev_norm(u2, 3.0, g));
    CHECK(uh3 == doctest::Approx(1.7).epsilon(1e-12));
    CHECK(sobolev_norm(f.phi_hat, 3.0, g) == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(hermitian_defect(f.omega_hat, g) < 1e-13);
    CHECK(hermitian_defect(f.phi_hat, g) < 1e-13);
    CHECK(std::abs(f.omega_hat[0]) == 0.0);
  }
}

TEST_CASE("init_fields is deterministic in the seed") {
  Grid2D g(32);
  Fft2D fft(32);
  const auto a = init_fields(InitKind::random_band, g, 1234, 1.0, 1.0, true, fft);
  const auto b = init_fields(InitKind::random_band, g, 1234, 1.0, 1.0, true, fft);
  const auto c = init_fields(InitKind::random_band, g, 1235, 1.0, 1.0, true, fft);
  double same = 0.0, other = 0.0;
  for (std::size_t i = 0; i < a.omega_hat.size(); ++i) {
    same = std::max(same, std::abs(a.omega_hat[i] - b.omega_hat[i]));
    other = std::max(other, std::abs(a.omega_hat[i] - c.omega_hat[i]));
  }
  CHECK(same == 0.0);
  CHECK(other > 1e-6);
}

TEST_CASE("nonneg_phi produces a pointwise nonnegative scalar") {
  Grid2D g(32);
  Fft2D fft(32);
  const auto f = init_fields(InitKind::random_band, g, 7, 1.0, 2.0, true, fft);
  const RVec ph = to_physical(f.phi_hat, fft);
  double lo = ph[0];
  for (double v : ph) lo = std::min(lo, v);
  CHECK(lo >= -1e-12);
  CHECK(sobolev_norm(f.phi_hat, 3.0, g) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("random band data stays within |k| <= n/8") {
  Grid2D g(64);
  Fft2D fft(64);
  const auto f = init_fields(InitKind::random_band, g, 5, 1.0, 1.0, false, fft);
  for (int iy = 0; iy < g.n(); ++iy)
    for (int ix = 0; ix < g.n(); ++ix) {
      if (std::abs(g.k_index(ix)) > 8 || std::abs(g.k_index(iy)) > 8) {
        CHECK(std::abs(f.omega_hat[g.at(iy, ix)]) == 0.0);
        CHECK(std::abs(f.phi_hat[g.at(iy, ix)]) == 0.0);
      }
    }
}

TEST_CASE("diagnostics: continuation norm identity and field norms") {
  SimConfig cfg;
  cfg.n = 32;
  cfg.epsilon = 0.25;
  Grid2D g(cfg.n);
  Fft2D fft(cfg.n);
  const auto f0 =
      init_fields(InitKind::random_band, g, 21, 1.3, 0.7, false, fft);
  FlowField f = f0;
  const auto r = diagnostics(f, cfg, fft);
  CHECK(r.u_h3 == doctest::Approx(1.3).epsilon(1e-12));
  CHECK(r.phi_h3 == doctest::Approx(0.7).epsilon(1e-12));
  CHECK(r.y_norm == doctest::Approx(1.3 + 0.25 * 0.7).epsilon(1e-12));
  CHECK(r.kinetic == doctest::Approx(r.u_l2));
  CHECK(r.omega_linf > 0.0);
  CHECK(r.grad_u_linf > 0.0);
}

TEST_CASE("verify_apriori: conservation case and finite fits") {
  auto cfg = SimConfig{};
  cfg.n = 32;
  cfg.dt = 1e-3;
  cfg.t_end = 0.05;
  cfg.epsilon = 0.0;
  cfg.init = InitKind::random_band;
  cfg.seed = 9;
  cfg.sample_every = 5;
  const auto res = run_simulation(cfg);
  const auto rep = verify_apriori(res.history, cfg);

  // eps = 0: vorticity is transported, the forcing budget fits C = 0.
  const auto& forcing = rep.by_name("vorticity_forcing");
  CHECK(forcing.finite);
  CHECK(forcing.fitted_c == 0.0);

  for (const auto& item : rep.items) {
    CHECK(item.finite);
    CHECK(std::isfinite(item.fitted_c));
  }
  CHECK(rep.by_name("grad_u_potential").fitted_c > 0.0);
  CHECK(rep.by_name("kozono_taniuchi").fitted_c > 0.0);
  // Transport growth bound is an actual inequality (no constant): the
  // fitted ratio stays O(1).
  CHECK(rep.by_name("grad_phi_transport").fitted_c <= 1.5);
}

TEST_CASE("verify_apriori rejects nonuniform sampling") {
  SimConfig cfg;
  std::vector<DiagnosticsRecord> hist(4);
  hist[0].t = 0.0;
  hist[1].t = 0.1;
  hist[2].t = 0.3;
  hist[3].t = 0.35;
  CHECK_THROWS_AS(verify_apriori(hist, cfg), std::invalid_argument);
}
