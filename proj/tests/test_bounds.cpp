#include <doctest.h>

#include <cmath>

#include "szk/bounds.h"
#include "szk/errors.h"
#include "szk/moments.h"

using namespace szk;

TEST_CASE("make_report slack") {
  CHECK(make_report("a", 1.0, 1.0 - 5e-13, {}).satisfied);
  CHECK_FALSE(make_report("a", 1.0, 1.0 - 1e-11, {}).satisfied);
  CHECK_THROWS_AS(make_report("a", 0.0, 0.0, {}).term("missing"), Error);
}

TEST_CASE("steklov bound") {
  const auto c = bound_steklov({0.02, 0.1, 0.3, 50.0}, builtin("const1"), 0.5);
  CHECK(c.lhs < 1e-12);
  CHECK(c.rhs == 0.0);
  CHECK(c.satisfied);

  const OperatorParams p{0.01, 0.0, 0.0, 100.0};
  const auto id = bound_steklov(p, builtin("identity"), 1.0);
  CHECK(id.lhs == doctest::Approx(1.0 / 200.0).epsilon(1e-10));
  CHECK(id.rhs == doctest::Approx(5.0 * std::sqrt(central_moment(p, 1.0, 2))).epsilon(1e-10));
  CHECK(id.satisfied);

  CHECK(bound_steklov({1.0 / 50, 0.1, 0.3, 50.0}, builtin("sin"), 0.5).satisfied);
}

TEST_CASE("c1 bound") {
  const auto c = bound_c1({0.02, 0.1, 0.3, 50.0}, builtin("const1"), 0.5);
  CHECK(c.rhs == 0.0);
  CHECK(c.lhs < 1e-12);
  const auto id = bound_c1({0.0, 0.0, 0.0, 10.0}, builtin("identity"), 1.0);
  CHECK(id.rhs == doctest::Approx(0.05).epsilon(1e-12));
  CHECK(id.lhs == doctest::Approx(0.05).epsilon(1e-12));
  CHECK(id.satisfied);
  CHECK(bound_c1({0.01, 0.1, 0.9, 100.0}, builtin("exp"), 0.5).satisfied);
  FunctionSpec bare;
  bare.name = "bare";
  bare.eval = [](double t) { return t; };
  CHECK_THROWS_AS(bound_c1({0.0, 0.0, 0.0, 10.0}, bare, 1.0), MissingDerivative);
}

TEST_CASE("lipschitz maximal bound") {
  CHECK(bound_lipschitz_maximal({0.01, 0.1, 0.3, 100.0}, builtin("const1"), 1.0, 0.5).rhs == 0.0);
  const OperatorParams p{0.01, 0.1, 0.3, 100.0};
  const auto id = bound_lipschitz_maximal(p, builtin("identity"), 1.0, 1.0);
  CHECK(id.rhs == doctest::Approx(std::sqrt(central_moment(p, 1.0, 2))).epsilon(1e-10));
  CHECK(id.lhs == doctest::Approx(std::abs(central_moment(p, 1.0, 1))).epsilon(1e-8));
  CHECK(id.satisfied);
  CHECK(bound_lipschitz_maximal({0.01, 0.0, 0.0, 100.0}, builtin("sin"), 1.0, 0.5).satisfied);
}

TEST_CASE("lipschitz space bound") {
  CHECK(bound_lipschitz_space({0.0, 0.0, 0.0, 100.0}, builtin("const1"), 1.0, 1.0, 0.0, 1.0, 0.0).rhs == 0.0);
  const OperatorParams p{0.0, 0.0, 0.0, 100.0};
  const auto id = bound_lipschitz_space(p, builtin("identity"), 1.0, 1.0, 0.0, 1.0, 1.0);
  CHECK(id.rhs == doctest::Approx(std::sqrt(central_moment(p, 1.0, 2))).epsilon(1e-12));
  CHECK(id.satisfied);
  CHECK(lipschitz_space_constant(builtin("sin"), 0.5, 1.0, 1.0, 1.0) <= 1.0);
  CHECK(bound_lipschitz_space({0.02, 0.0, 0.0, 50.0}, builtin("sin"), 0.5, 1.0, 1.0, 1.0, 1.0).satisfied);
  CHECK_THROWS_AS(bound_lipschitz_space(p, builtin("sin"), 0.0, 1.0, 1.0, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(bound_lipschitz_space(p, builtin("sin"), 1.0, 1.0, 0.0, 0.0, 1.0), DomainError);
}

TEST_CASE("direct estimate") {
  const auto c = bound_direct({0.02, 0.1, 0.3, 50.0}, builtin("const1"), 0.5);
  CHECK(c.term("omega2_term") == 0.0);
  CHECK(c.term("omega_term") == 0.0);
  CHECK(c.term("m1_needed") == 0.0);
  const OperatorParams p{0.1, 0.0, 0.0, 10.0};
  CHECK(gamma_n(p, 1.0) == doctest::Approx(central_moment(p, 1.0, 2) + 0.0025).epsilon(1e-12));
  CHECK(eta_n(p, 1.0) == doctest::Approx(0.05).epsilon(1e-12));
  double fitted_2 = 0.0;
  double fitted_3 = 0.0;
  for (double beta : {10.0, 20.0, 50.0, 100.0, 200.0, 500.0, 1000.0}) {
    for (const char* name : {"exp", "cos"}) {
      const double m1 = bound_direct({1.0 / beta, 0.1, 0.3, beta}, builtin(name), 0.5).term("m1_needed");
      CHECK(std::isfinite(m1));
      if (beta <= 100.0) fitted_2 = std::max(fitted_2, m1);
      fitted_3 = std::max(fitted_3, m1);
    }
  }
  CHECK(std::abs(fitted_3 - fitted_2) <= 0.1 * fitted_3);
}

TEST_CASE("voronovskaya residual") {
  const auto id = voronovskaya_residual(0.0, 0.0, builtin("identity"), 0.7, {1e2, 1e3, 1e4});
  CHECK(id.approached == Limit::both);
  CHECK(id.residuals.back().second == doctest::Approx(0.5).epsilon(1e-8));

  const auto sq = voronovskaya_residual(0.0, 0.0, builtin("monomial(2)"), 1.0, {1e2, 1e3, 1e4});
  CHECK(sq.l_consistent == 3.0);
  CHECK(sq.l_paper == 5.0);
  CHECK(sq.approached == Limit::consistent);
  for (const auto& [beta, r] : sq.residuals) CHECK(r == doctest::Approx(3.0 + 1.0 / (3.0 * beta)).epsilon(1e-9));
  CHECK(std::abs(sq.residuals.back().second - 3.0) / 3.0 < 1e-3);

  const auto ex = voronovskaya_residual(0.1, 0.3, builtin("exp"), 1.0, {1e2, 1e3, 1e4});
  CHECK(ex.l_consistent == doctest::Approx(1.3 * std::exp(1.0)).epsilon(1e-12));
  CHECK(ex.approached == Limit::consistent);
  CHECK(ex.residuals.back().second == doctest::Approx(1.3 * std::exp(1.0)).epsilon(1e-3));
  CHECK_THROWS_AS(voronovskaya_residual(0.0, 0.0, builtin("kink"), 1.0, {10.0}), MissingDerivative);
}

TEST_CASE("quantitative voronovskaya") {
  for (double beta : {10.0, 100.0, 1000.0}) {
    const auto q = quantitative_voronovskaya({1.0 / beta, 0.1, 0.3, beta}, builtin("monomial(2)"), 0.7);
    CHECK(q.lhs < 1e-10);
    CHECK(q.satisfied);
  }
  CHECK(quantitative_voronovskaya({0.01, 0.1, 0.3, 100.0}, builtin("const1"), 0.7).lhs < 1e-12);
  double prev = INFINITY;
  for (double beta : {1e2, 1e3, 1e4}) {
    const auto q = quantitative_voronovskaya({1.0 / beta, 0.1, 0.3, beta}, builtin("exp"), 0.5);
    const double c = q.term("c_needed");
    CHECK(std::isfinite(c));
    CHECK(c <= prev);
    CHECK(q.satisfied);
    prev = c;
  }
}

TEST_CASE("gruss residual") {
  const auto id = gruss_residual(0.0, 0.0, builtin("identity"), builtin("identity"), 1.0, {1e2, 1e3, 1e4});
  CHECK(id.limit == 2.0);
  CHECK(id.residuals.back().second == doctest::Approx(2.0).epsilon(1e-3));
  const auto one = gruss_residual(0.1, 0.3, builtin("const1"), builtin("exp"), 0.5, {10.0, 1e3});
  for (const auto& [beta, r] : one.residuals) CHECK(std::abs(r) < 1e-9);
  const auto se = gruss_residual(0.0, 0.0, builtin("sin"), builtin("exp"), 0.5, {1e2, 1e3, 1e4});
  CHECK(se.limit == doctest::Approx(std::cos(0.5) * std::exp(0.5)).epsilon(1e-14));
  CHECK(se.residuals.back().second == doctest::Approx(se.limit).epsilon(1e-2));
}

TEST_CASE("bv rate bound") {
  const auto id = bv_rate_bound({0.0, 0.0, 0.0, 10.0}, builtin("identity"), 1.0, 1.0);
  CHECK(id.rhs == doctest::Approx(0.05).epsilon(1e-12));
  CHECK(id.lhs == doctest::Approx(0.05).epsilon(1e-12));
  CHECK(id.satisfied);
  const auto c = bv_rate_bound({0.0, 0.0, 0.0, 10.0}, builtin("const1"), 1.0, 1.0);
  CHECK(c.rhs == 0.0);
  CHECK(c.lhs < 1e-15);
  const double m = second_moment_constant();
  CHECK(m == doctest::Approx(0.5085).epsilon(1e-3));
  const auto ex = bv_rate_bound({1e-4, 0.1, 0.9, 1e4}, builtin("exp"), 1.0, m);
  CHECK(ex.satisfied);
  // The kink has a derivative jump at 1, so the jump term is active there.
  const auto k = bv_rate_bound({0.01, 0.0, 0.0, 100.0}, builtin("kink"), 1.0, m);
  CHECK(k.term("jump") > 0.0);
  CHECK(k.satisfied);
  CHECK_THROWS_AS(bv_rate_bound({0.0, 0.0, 0.0, 10.0}, builtin("exp"), 0.0, m), DomainError);
  FunctionSpec bare = builtin("exp");
  bare.one_sided = nullptr;
  CHECK_THROWS_AS(bv_rate_bound({0.0, 0.0, 0.0, 10.0}, bare, 1.0, m), MissingOneSided);
}

TEST_CASE("weighted norm error") {
  const OperatorParams p{0.0, 0.1, 0.3, 10.0};
  const auto r1 = weighted_norm_error(p, 1);
  CHECK(r1.closed_bound == doctest::Approx(1.2 / 20.6 + (1.0 - 10.0 / 10.3) * 0.5).epsilon(1e-12));
  CHECK(r1.measured <= r1.closed_bound);
  double prev = INFINITY;
  for (double beta : {10.0, 1e2, 1e3, 1e4}) {
    const double e = weighted_norm_error({0.0, 0.0, 0.0, beta}, 1).measured;
    CHECK(e < prev);
    prev = e;
  }
  CHECK(prev == doctest::Approx(1.0 / 2e4).epsilon(1e-9));
  CHECK(weighted_norm_error({1e-4, 0.1, 0.3, 1e4}, 2).measured < 1e-3);
  CHECK_THROWS_AS(weighted_norm_error(p, 3), UnsupportedOrder);
}

TEST_CASE("weighted image bound") {
  const auto a = weighted_image_bound({0.0, 0.0, 0.0, 10.0});
  CHECK(a.kappa == doctest::Approx(0.2).epsilon(1e-14));
  CHECK(a.bound == doctest::Approx(2.2).epsilon(1e-14));
  CHECK(a.satisfied);
  const auto b = weighted_image_bound({0.2, 0.1, 0.9, 5.0});
  CHECK(b.kappa == doctest::Approx(16.0 / 34.81).epsilon(1e-12));
  CHECK(b.satisfied);
  double prev = INFINITY;
  for (double beta : {10.0, 1e2, 1e3, 1e4, 1e6}) {
    const auto r = weighted_image_bound({1.0 / beta, 0.1, 0.3, beta});
    CHECK(r.kappa < prev);
    CHECK(r.satisfied);
    prev = r.kappa;
  }
  CHECK(prev < 1e-5);
}

TEST_CASE("korovkin convergence") {
  for (int r = 0; r <= 2; ++r) {
    double prev = INFINITY;
    for (double beta : {10.0, 1e2, 1e3, 1e4}) {
      const double e = korovkin_error({1.0 / beta, 0.1, 0.3, beta}, r, 0.0, 1.0);
      if (r == 0) {
        CHECK(e == 0.0);
      } else {
        CHECK(e < prev);
      }
      prev = e;
    }
    CHECK(prev < 1e-3);
  }
}
