#include <doctest.h>

#include <cmath>

#include "lt2d/bounds/augmented.hpp"
#include "lt2d/common/errors.hpp"
#include "oracle_values.hpp"

using namespace lt2d;
using namespace lt2d::bounds;

namespace {

ModelConstants constants(double c, double eps, double t) {
  ModelConstants mc;
  mc.c_const = c;
  mc.epsilon = eps;
  mc.horizon = t;
  return mc;
}

double closed_form_z(double z0, double c, double t) {
  return std::exp((1.0 + std::log(z0)) * std::exp(c * t) - 1.0);
}

}  // namespace

TEST_CASE("boussinesq rhs: direct substitutions") {
  // log 1 = 0 kills everything but the constant bracket.
  auto d = rhs_boussinesq_augmented({1.0, 0.0, 0.0}, constants(1.0, 0.0, 1.0));
  CHECK(d.z == doctest::Approx(1.0));
  CHECK(d.a == doctest::Approx(1.0));
  CHECK(d.bint == doctest::Approx(1.0));

  d = rhs_boussinesq_augmented({std::exp(1.0), 0.0, 0.0},
                               constants(1.0, 0.5, 1.0));
  CHECK(d.z == doctest::Approx(oracle::kBoussinesqRhsExample).epsilon(1e-14));

  // The history integrals always advance by (z, exp(a)).
  d = rhs_boussinesq_augmented({2.0, 1.5, 0.25}, constants(2.0, 0.1, 1.0));
  CHECK(d.a == doctest::Approx(2.0));
  CHECK(d.bint == doctest::Approx(std::exp(1.5)));
}

TEST_CASE("nh-euler rhs: direct substitutions") {
  // Upsilon = 1: log term vanishes, H = 1.
  auto d = rhs_nheuler_augmented({1.0, 0.0, 0.0}, constants(1.0, 0.3, 1.0));
  CHECK(d.upsilon == doctest::Approx(1.0 * (1.0 + 0.3)));
  CHECK(d.a == doctest::Approx(0.0));
  CHECK(d.i2 == doctest::Approx(0.0));

  d = rhs_nheuler_augmented({2.0, 0.0, 1.0}, constants(1.0, 1.0, 1.0));
  CHECK(d.upsilon == doctest::Approx(oracle::kNhEulerRhsExample).epsilon(1e-14));
}

TEST_CASE("eps = 0 closed form for both systems") {
  const auto mc = constants(1.0, 0.0, 1.0);
  for (auto system : {BoundSystem::boussinesq, BoundSystem::nh_euler}) {
    const auto sol =
        integrate_bound(system, std::exp(1.0), mc, 1e-10, 1e-12, 64);
    REQUIRE_FALSE(sol.blew_up);
    CHECK(sol.trajectory.values.back() ==
          doctest::Approx(oracle::kZ1ClosedForm).epsilon(1e-8));
    // Interior agreement with the closed form as well.
    for (std::size_t j = 0; j < sol.trajectory.size(); ++j)
      CHECK(sol.trajectory.values[j] ==
            doctest::Approx(closed_form_z(std::exp(1.0), 1.0,
                                          sol.trajectory.times[j]))
                .epsilon(1e-8));
  }
}

TEST_CASE("zero horizon returns the initial point") {
  const auto sol = integrate_bound(BoundSystem::boussinesq, std::exp(1.0),
                                   constants(1.0, 0.0, 0.0), 1e-10, 1e-12);
  REQUIRE(sol.trajectory.size() == 1);
  CHECK(sol.trajectory.times[0] == 0.0);
  CHECK(sol.trajectory.values[0] == doctest::Approx(std::exp(1.0)));
}

TEST_CASE("boussinesq and nh-euler coincide at eps = 0") {
  const auto mc = constants(0.7, 0.0, 1.5);
  const auto a =
      integrate_bound(BoundSystem::boussinesq, 2.0, mc, 1e-10, 1e-12, 33);
  const auto b =
      integrate_bound(BoundSystem::nh_euler, 2.0, mc, 1e-10, 1e-12, 33);
  REQUIRE(a.trajectory.size() == b.trajectory.size());
  for (std::size_t j = 0; j < a.trajectory.size(); ++j)
    CHECK(a.trajectory.values[j] ==
          doctest::Approx(b.trajectory.values[j]).epsilon(1e-9));
}

TEST_CASE("principal variable is increasing and above 1") {
  const auto sol = integrate_bound(BoundSystem::boussinesq, 1.2,
                                   constants(1.0, 0.02, 0.5), 1e-9, 1e-11, 128);
  REQUIRE_FALSE(sol.blew_up);
  for (std::size_t j = 1; j < sol.trajectory.size(); ++j) {
    CHECK(sol.trajectory.values[j] > sol.trajectory.values[j - 1]);
    CHECK(sol.trajectory.values[j] > 1.0);
  }
}

TEST_CASE("monotone comparison in eps on the shared grid") {
  const auto lo = integrate_bound(BoundSystem::boussinesq, 2.0,
                                  constants(1.0, 0.01, 0.5), 1e-10, 1e-12, 50);
  const auto hi = integrate_bound(BoundSystem::boussinesq, 2.0,
                                  constants(1.0, 0.05, 0.5), 1e-10, 1e-12, 50);
  const std::size_t shared =
      std::min(lo.trajectory.size(), hi.trajectory.size());
  REQUIRE(shared > 10);
  for (std::size_t j = 0; j < shared; ++j)
    CHECK(lo.trajectory.values[j] <= hi.trajectory.values[j] * (1.0 + 1e-12));
}

TEST_CASE("large eps blows up before the horizon, time reported") {
  const auto sol = integrate_bound(BoundSystem::boussinesq, 3.0,
                                   constants(1.0, 1.0, 12.0), 1e-8, 1e-10, 64);
  CHECK(sol.blew_up);
  CHECK(sol.t_reached > 0.0);
  CHECK(sol.t_reached < 12.0);
  // The emitted prefix stays below the cap and is increasing.
  for (std::size_t j = 1; j < sol.trajectory.size(); ++j)
    CHECK(sol.trajectory.values[j] >= sol.trajectory.values[j - 1]);
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(integrate_bound(BoundSystem::boussinesq, 1.0,
                                  constants(1.0, 0.0, 1.0), 1e-10, 1e-12),
                  std::invalid_argument);
  CHECK_THROWS_AS(bound_system_from_string("euler3d"), std::invalid_argument);
  CHECK(bound_system_from_string("nh_euler") == BoundSystem::nh_euler);
}
