#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "szk/errors.h"
#include "szk/functions.h"

using namespace szk;

TEST_CASE("builtin examples") {
  CHECK(builtin("exp").d1(0.0) == 1.0);
  CHECK(builtin("monomial(2)").eval(3.0) == 9.0);
  const auto s = builtin("sin");
  const double pi = std::numbers::pi;
  const auto crit = s.breakpoints(Component::f, 0.0, 2.0 * pi);
  REQUIRE(crit.size() == 2);
  CHECK(crit[0] == doctest::Approx(pi / 2));
  CHECK(crit[1] == doctest::Approx(3 * pi / 2));
  const auto dcrit = s.breakpoints(Component::d1, 0.0, 2.0 * pi);
  REQUIRE(dcrit.size() == 3);
  CHECK(dcrit[0] == doctest::Approx(0.0));
  CHECK(dcrit[1] == doctest::Approx(pi));
  CHECK(dcrit[2] == doctest::Approx(2 * pi));
  CHECK_THROWS_AS(builtin("tan"), UnknownFunction);
  CHECK_THROWS_AS(builtin("monomial(x)"), UnknownFunction);
  for (const auto& name : builtin_names()) CHECK_NOTHROW(builtin(name));
}

TEST_CASE("derivative accessor") {
  const auto k = builtin("kink");
  CHECK(k.derivative(1, 2.0) == 1.0);
  CHECK_THROWS_AS(k.derivative(2, 2.0), MissingDerivative);
  CHECK(builtin("cos").derivative(2, 0.0) == -1.0);
}

TEST_CASE("total variation examples") {
  CHECK(total_variation(builtin("exp"), Component::d1, 0.0, 1.0) == doctest::Approx(std::exp(1.0) - 1.0));
  CHECK(total_variation(builtin("identity"), Component::d1, -1.0, 4.0) == 0.0);
  CHECK(total_variation(builtin("sin"), Component::f, 0.0, std::numbers::pi) == doctest::Approx(2.0));
  CHECK(total_variation(builtin("kink"), Component::f, 0.0, 2.0) == doctest::Approx(2.0));
  // f' of the kink jumps from -1 to 1 at t = 1.
  CHECK(total_variation(builtin("kink"), Component::d1, 0.0, 2.0) == doctest::Approx(2.0));
  CHECK(total_variation(builtin("kink"), Component::d1, 0.0, 1.0) == 0.0);
  FunctionSpec bare;
  bare.name = "bare";
  bare.eval = [](double t) { return t; };
  CHECK_THROWS_AS(total_variation(bare, Component::d1, 0.0, 1.0), MissingDerivative);
}

TEST_CASE("variation additivity and monotonicity") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 8.0);
  for (const auto& name : builtin_names()) {
    const auto f = builtin(name);
    for (auto of : {Component::f, Component::d1}) {
      for (int trial = 0; trial < 50; ++trial) {
        double pts[3] = {u(rng), u(rng), u(rng)};
        std::sort(pts, pts + 3);
        const double ab = total_variation(f, of, pts[0], pts[1]);
        const double bc = total_variation(f, of, pts[1], pts[2]);
        const double ac = total_variation(f, of, pts[0], pts[2]);
        CHECK(ab >= 0.0);
        CHECK(ac >= ab);
        if (name == "kink" && of == Component::d1 && pts[1] == 1.0) continue;
        CHECK(std::abs(ac - ab - bc) <= 1e-12 * (1.0 + ac));
      }
    }
  }
}

TEST_CASE("variation matches a fine partition") {
  for (const auto& name : builtin_names()) {
    const auto f = builtin(name);
    for (auto of : {Component::f, Component::d1}) {
      const auto g = of == Component::f ? f.eval : f.d1;
      double sampled = 0.0;
      const int n = 200000;
      for (int k = 0; k < n; ++k) {
        const double a = 0.3 + 6.0 * k / n;
        const double b = 0.3 + 6.0 * (k + 1) / n;
        sampled += std::abs(g(b) - g(a));
      }
      // Partition sums approach the variation from below.
      const double tv = total_variation(f, of, 0.3, 6.3);
      CHECK(sampled <= tv * (1.0 + 1e-12));
      CHECK(tv - sampled <= 1e-4 * (1.0 + tv));
    }
  }
}

TEST_CASE("first derivative consistency") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 5.0);
  const double h = 1e-5;
  for (const auto& name : builtin_names()) {
    const auto f = builtin(name);
    for (int k = 0; k < 100; ++k) {
      const double t = u(rng);
      if (name == "kink" && std::abs(t - 1.0) < 2 * h) continue;
      const double fd = (f.eval(t + h) - f.eval(t - h)) / (2 * h);
      CHECK(fd == doctest::Approx(f.d1(t)).epsilon(1e-6).scale(1.0));
    }
  }
}

TEST_CASE("auxiliary function") {
  const auto e = builtin("exp");
  CHECK(auxiliary_fx(e, 1.0, 1.0) == 0.0);
  CHECK(auxiliary_fx(e, 1.0, 2.0) == doctest::Approx(std::exp(2.0) - std::exp(1.0)));
  CHECK(auxiliary_fx(e, 1.0, 0.5) == doctest::Approx(std::exp(0.5) - std::exp(1.0)));
  const auto k = builtin("kink");
  CHECK(auxiliary_fx(k, 1.0, 1.5, Component::d1) == 0.0);
  CHECK(auxiliary_fx(k, 1.0, 0.5, Component::d1) == 0.0);
  FunctionSpec bare = builtin("identity");
  bare.one_sided = nullptr;
  CHECK_THROWS_AS(auxiliary_fx(bare, 1.0, 0.5, Component::d1), MissingOneSided);
}

TEST_CASE("products and combinations") {
  const auto p = product(builtin("sin"), builtin("exp"));
  CHECK(p.eval(0.5) == doctest::Approx(std::sin(0.5) * std::exp(0.5)));
  CHECK(p.d1(0.5) == doctest::Approx((std::cos(0.5) + std::sin(0.5)) * std::exp(0.5)));
  CHECK(p.d2(0.5) == doctest::Approx(2.0 * std::cos(0.5) * std::exp(0.5)));
  CHECK(p.growth.kind == GrowthClass::exponential);
  const auto q = product(builtin("identity"), builtin("monomial(2)"));
  REQUIRE(q.polynomial.has_value());
  CHECK((*q.polynomial)(2.0) == doctest::Approx(8.0));
}
