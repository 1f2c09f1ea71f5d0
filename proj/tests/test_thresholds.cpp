#include <doctest.h>

#include <cmath>

#include "lt2d/bounds/thresholds.hpp"
#include "oracle_values.hpp"

using namespace lt2d;
using namespace lt2d::bounds;

namespace {

ModelConstants at_horizon(double t, double c = 1.0) {
  ModelConstants mc;
  mc.c_const = c;
  mc.horizon = t;
  return mc;
}

}  // namespace

TEST_CASE("thresholds at C=1, T=0.1, M=2 against the precision oracle") {
  const auto rep = thresholds(1.0, at_horizon(0.1));
  CHECK(rep.m_bound == doctest::Approx(2.0));
  CHECK_FALSE(rep.overflow_flag);
  CHECK(std::exp(rep.log_eps1) ==
        doctest::Approx(oracle::kEps1_T01_M2).epsilon(1e-12));
  CHECK(std::exp(rep.log_eps2) ==
        doctest::Approx(oracle::kEps2_T01_M2).epsilon(1e-12));
  CHECK(rep.lipschitz_log ==
        doctest::Approx(oracle::kLogL_T01_M2).epsilon(1e-12));
  // Both eps exceed 1, so eps0 clips.
  CHECK(rep.eps0 == 1.0);
}

TEST_CASE("thresholds at C=1, T=1, M=2: log-domain tower value") {
  const auto rep = thresholds(1.0, at_horizon(1.0));
  CHECK(rep.log_eps1 ==
        doctest::Approx(oracle::kLogEps1_T1_M2).epsilon(1e-12));
  CHECK(rep.log_eps2 ==
        doctest::Approx(oracle::kLogEps2_T1_M2).epsilon(1e-12));
  // eps1-dominated: far below eps2 and below the double underflow edge
  // of exp, still finite in log form.
  CHECK(rep.log_eps0() == rep.log_eps1);
  CHECK(rep.eps0 == doctest::Approx(std::exp(rep.log_eps1)));
}

TEST_CASE("tiny horizon clips eps0 at 1") {
  const auto rep = thresholds(1.0, at_horizon(1e-8));
  CHECK(rep.eps0 == 1.0);
  CHECK(rep.log_eps1 > 0.0);
  CHECK(rep.log_eps2 > 0.0);
}

TEST_CASE("tower overflow produces the documented sentinel") {
  // M e^{CT} > 709 already for T = 6, M = 2, C = 1.
  const auto rep = thresholds(1.0, at_horizon(6.0));
  CHECK(rep.overflow_flag);
  CHECK(rep.eps0 == 0.0);
  CHECK(rep.log_eps1 <= -1e300);
  CHECK(rep.log_eps2 <= -1e300);
}

TEST_CASE("eps0 is nonincreasing in horizon and in ball radius") {
  double prev = 2.0;
  for (double t : {0.01, 0.1, 0.3, 0.7, 1.0, 1.5, 2.0, 3.0, 5.0, 7.0}) {
    const double cur = thresholds(1.0, at_horizon(t)).log_eps0();
    CHECK(cur <= prev + 1e-12);
    prev = cur;
  }
  prev = 2.0;
  for (double m : {0.25, 0.5, 1.0, 2.0, 4.0, 8.0}) {
    const double cur = thresholds(m, at_horizon(0.5)).log_eps0();
    CHECK(cur <= prev + 1e-12);
    prev = cur;
  }
}

TEST_CASE("predict_horizon inverts thresholds") {
  // The eps1 value at T = 1 must map back to T = 1.
  const double eps = std::exp(oracle::kLogEps1_T1_M2);
  const double t = predict_horizon(eps, 1.0, 1.0);
  CHECK(t == doctest::Approx(1.0).epsilon(1e-9));

  // Near-1 epsilon: finite positive horizon where eps0 first dips below 1.
  const double t_edge = predict_horizon(0.999999, 1.0, 1.0);
  CHECK(t_edge > 0.0);
  CHECK(t_edge < 1.0);
  const auto mc = at_horizon(t_edge * 1.01);
  CHECK(thresholds(1.0, mc).eps0 < 1.0);
}

TEST_CASE("predict_horizon round-trip across a deep epsilon sweep") {
  for (double log10_eps = -5.0; log10_eps >= -100.0; log10_eps -= 15.0) {
    const double eps = std::pow(10.0, log10_eps);
    const double t = predict_horizon(eps, 1.0, 1.0);
    auto mc = at_horizon(t);
    const double log_back = thresholds(1.0, mc).log_eps0();
    CHECK(std::abs(log_back - std::log(eps)) < std::log(1.01));
  }
}

TEST_CASE("predict_horizon returns the cap when epsilon is admissible there") {
  // Huge allowed horizon for a minuscule ball at tiny cap.
  const double t = predict_horizon(0.5, 1.0, 1.0, kDefaultB, 0.05);
  CHECK(t == 0.05);
}

TEST_CASE("threshold validation") {
  CHECK_THROWS_AS(thresholds(0.0, at_horizon(1.0)), std::invalid_argument);
  CHECK_THROWS_AS(thresholds(1.0, at_horizon(0.0)), std::invalid_argument);
  CHECK_THROWS_AS(predict_horizon(0.0, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(predict_horizon(1.0, 1.0, 1.0), std::invalid_argument);
}
