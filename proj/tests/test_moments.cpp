#include <doctest.h>

#include <cmath>
#include <random>

#include "szk/errors.h"
#include "szk/moments.h"

using namespace szk;

TEST_CASE("raw moment examples") {
  CHECK(raw_moment({0.2, 0.1, 0.4, 9.0}, 1.3, 0) == 1.0);
  CHECK(raw_moment({0.1, 0.0, 0.0, 10.0}, 1.0, 2) == doctest::Approx(391.0 / 300.0).epsilon(1e-14));
  CHECK(raw_moment({0.0, 0.1, 0.3, 10.0}, 0.5, 1) == doctest::Approx(0.5436893203883).epsilon(1e-12));
  CHECK(raw_moment_oracle({0.0, 0.1, 0.3, 10.0}, 0.5, 1) == doctest::Approx(0.5436893203883).epsilon(1e-12));
  CHECK_THROWS_AS(raw_moment({0.0, 0.0, 0.0, 10.0}, 0.5, 4), UnsupportedOrder);
}

TEST_CASE("central moment examples") {
  CHECK(central_moment({0.0, 0.0, 0.0, 1.0}, 0.0, 2) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(central_moment_oracle({0.0, 0.0, 0.0, 1.0}, 0.0, 2) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  for (double x : {0.0, 0.4, 3.0}) {
    CHECK(central_moment({0.05, 0.0, 0.0, 20.0}, x, 1) == doctest::Approx(0.025).epsilon(1e-14));
  }
  const double phi2 = central_moment({0.01, 0.0, 0.0, 100.0}, 1.0, 2);
  CHECK(std::abs(phi2 - 0.02) < 1e-3);
  CHECK(central_moment_oracle({0.02, 0.1, 0.3, 20.0}, 0.5, 1) ==
        doctest::Approx(central_moment({0.02, 0.1, 0.3, 20.0}, 0.5, 1)).epsilon(1e-10));
  CHECK(central_moment_oracle({1e-3, 0.0, 0.0, 1e3}, 1.0, 4) * 1e6 == doctest::Approx(12.0).epsilon(0.1));
  CHECK_THROWS_AS(central_moment({0.0, 0.0, 0.0, 10.0}, 0.5, 4), UnsupportedOrder);
  CHECK_THROWS_AS(central_moment_oracle({0.0, 0.0, 0.0, 10.0}, 0.5, 7), UnsupportedOrder);
}

TEST_CASE("printed third central moment") {
  // Agrees with the series when phi = psi = 0.
  const OperatorParams plain{0.02, 0.0, 0.0, 20.0};
  CHECK(central_moment(plain, 0.5, 3) == doctest::Approx(central_moment_oracle(plain, 0.5, 3)).epsilon(1e-10));
  // With psi > 0 it does not; the report keeps the series value.
  const OperatorParams shifted{0.02, 0.1, 0.3, 20.0};
  const auto rep = moment_report(shifted, 0.5, MomentKind::central, 3);
  REQUIRE(rep.closed_form.has_value());
  CHECK(*rep.abs_discrepancy > 1e-5);
  CHECK(rep.value() == rep.oracle);
  CHECK(rep.oracle == doctest::Approx(0.0052960387).epsilon(1e-8));
}

TEST_CASE("moment reports") {
  const OperatorParams p{0.01, 0.1, 0.3, 50.0};
  const auto raw = moment_report(p, 0.7, MomentKind::raw, 2);
  REQUIRE(raw.abs_discrepancy.has_value());
  CHECK(*raw.abs_discrepancy == doctest::Approx(std::abs(*raw.closed_form - raw.oracle)));
  const auto high = moment_report(p, 0.7, MomentKind::central, 6);
  CHECK_FALSE(high.closed_form.has_value());
  CHECK_FALSE(high.abs_discrepancy.has_value());
  CHECK(high.oracle > 0.0);
}

TEST_CASE("oracle equivalence over a random grid") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const double beta = std::pow(10.0, 4.0 * u(rng));
    const double psi = u(rng);
    const OperatorParams p{u(rng) / beta, psi * u(rng), psi, beta};
    const double x = 5.0 * u(rng);
    for (int r = 0; r <= 3; ++r) {
      CHECK(raw_moment(p, x, r) == doctest::Approx(raw_moment_oracle(p, x, r)).epsilon(1e-10));
    }
    for (int m = 1; m <= 2; ++m) {
      const double oracle = central_moment_oracle(p, x, m);
      // Relative comparison against the scale of the terms that cancel.
      const double scale = std::abs(oracle) + 1e-12 * (1.0 + x * x);
      CHECK(std::abs(central_moment(p, x, m) - oracle) <= 1e-10 * scale);
    }
  }
}

TEST_CASE("asymptotic limits") {
  const auto a = asymptotic_limits(1.0, 0.0, 0.0);
  CHECK(a.first == 0.5);
  CHECK(a.second == 2.0);
  CHECK(a.fourth == 12.0);
  CHECK(a.sixth == 120.0);
  const auto z = asymptotic_limits(0.0, 0.2, 0.5);
  CHECK(z.first == doctest::Approx(0.7));
  CHECK(z.second == 0.0);
  const auto b = asymptotic_limits(0.5, 0.1, 0.3);
  CHECK(b.first == doctest::Approx(0.45));
  CHECK(b.second == doctest::Approx(1.0));
  CHECK(b.fourth == doctest::Approx(3.0));
  CHECK(b.sixth == doctest::Approx(15.0));
}

TEST_CASE("limit convergence is monotone in beta") {
  const double x = 0.5;
  const auto lim = asymptotic_limits(x, 0.1, 0.3);
  const double targets[] = {lim.first, lim.second, lim.fourth, lim.sixth};
  const int orders[] = {1, 2, 4, 6};
  for (int k = 0; k < 4; ++k) {
    double prev = INFINITY;
    for (double beta : {1e2, 1e3, 1e4}) {
      const OperatorParams p{1.0 / beta, 0.1, 0.3, beta};
      const double scaled = asymptotic_scaling(beta, orders[k]) * central_moment_oracle(p, x, orders[k]);
      const double gap = std::abs(scaled - targets[k]);
      CHECK(gap < prev);
      prev = gap;
    }
  }
}

TEST_CASE("second moment growth constant") {
  double worst = 0.0;
  for (double beta : {10.0, 1e2, 1e3, 1e4}) {
    for (double a_scale : {0.0, 0.5, 1.0}) {
      for (double psi : {0.0, 0.5, 1.0}) {
        const OperatorParams p{a_scale / beta, 0.5 * psi, psi, beta};
        for (double x = 0.0; x <= 10.0; x += 0.5) {
          worst = std::max(worst, central_moment(p, x, 2) * p.cell_scale() / ((1.0 + x) * (1.0 + x)));
        }
      }
    }
  }
  CHECK(worst < 1.0);
}
