#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>

#include "szk/bounds.h"
#include "szk/errors.h"
#include "szk/harness.h"
#include "szk/moments.h"

namespace szk {

bool SuiteResult::ok() const { return failures() == 0; }

std::size_t SuiteResult::failures() const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [](const CheckRecord& r) { return r.status == "fail"; }));
}

namespace {

void check(SuiteResult& s, std::string name, double lhs, double rhs) {
  const bool pass = std::isfinite(lhs) && std::isfinite(rhs) && lhs <= rhs;
  s.records.push_back({std::move(name), lhs, rhs, pass ? "pass" : "fail"});
}

void info(SuiteResult& s, std::string name, double lhs, double rhs) {
  s.records.push_back({std::move(name), lhs, rhs, "info"});
}

void moments_suite(SuiteResult& s, const SuiteOptions& opt) {
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double raw_err[4] = {};
  double central_err[2] = {};
  double phi3_gap = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const double beta = std::pow(10.0, 4.0 * u(rng));
    const double psi = u(rng);
    const double alpha = u(rng) / beta;
    const double phi = psi * u(rng);
    const OperatorParams p{alpha, phi, psi, beta};
    const double x = 5.0 * u(rng);
    for (int r = 0; r <= 3; ++r) {
      const double oracle = raw_moment_oracle(p, x, r);
      raw_err[r] = std::max(raw_err[r], std::abs(raw_moment(p, x, r) - oracle) / std::abs(oracle));
    }
    for (int m = 1; m <= 2; ++m) {
      double closed = central_moment(p, x, m);
      if (m == 2) closed *= 1.0 + opt.phi2_mutation;
      const double oracle = central_moment_oracle(p, x, m);
      // Central moments cancel; measure against the scale of what cancels.
      const double scale = std::abs(oracle) + 1e-12 * (1.0 + x * x);
      central_err[m - 1] = std::max(central_err[m - 1], std::abs(closed - oracle) / scale);
    }
    phi3_gap = std::max(phi3_gap, std::abs(central_moment(p, x, 3) - central_moment_oracle(p, x, 3)));
  }
  for (int r = 0; r <= 3; ++r) check(s, "moments.raw.r=" + std::to_string(r), raw_err[r], 1e-10);
  for (int m = 1; m <= 2; ++m) check(s, "moments.central.m=" + std::to_string(m), central_err[m - 1], 1e-10);
  // The printed third central moment disagrees with the series when psi > 0;
  // downstream code uses the oracle, so this is only recorded.
  info(s, "moments.central.m=3.printed_gap", phi3_gap, 0.0);
}

void asymptotics_suite(SuiteResult& s) {
  const int orders[] = {1, 2, 4, 6};
  for (double x : {0.5, 1.0}) {
    const auto lim = asymptotic_limits(x, 0.1, 0.3);
    const double targets[] = {lim.first, lim.second, lim.fourth, lim.sixth};
    for (int k = 0; k < 4; ++k) {
      double gap[2];
      int idx = 0;
      for (double beta : {1e2, 1e4}) {
        const OperatorParams p{1.0 / beta, 0.1, 0.3, beta};
        gap[idx++] = std::abs(asymptotic_scaling(beta, orders[k]) * central_moment_oracle(p, x, orders[k]) -
                              targets[k]);
      }
      check(s, "limits.m=" + std::to_string(orders[k]) + ".x=" + format_number(x), 5.0 * gap[1], gap[0]);
    }
  }

  const auto sq = voronovskaya_residual(0.0, 0.0, builtin("monomial(2)"), 1.0, {1e2, 1e3, 1e4});
  const double r = sq.residuals.back().second;
  check(s, "voronovskaya.t^2.consistent_gap", std::abs(r - sq.l_consistent), 1e-2);
  check(s, "voronovskaya.t^2.printed_gap", 1.9, std::abs(r - sq.l_paper));
  const auto ex = voronovskaya_residual(0.1, 0.3, builtin("exp"), 1.0, {1e2, 1e3, 1e4});
  info(s, "voronovskaya.exp.residual", ex.residuals.back().second, ex.l_consistent);
  check(s, "voronovskaya.exp.consistent", ex.approached == Limit::consistent ? 0.0 : 1.0, 0.0);

  const auto g = gruss_residual(0.0, 0.0, builtin("sin"), builtin("exp"), 0.5, {1e2, 1e3, 1e4});
  check(s, "gruss.sin_exp.rel_gap", std::abs(g.residuals.back().second - g.limit) / std::abs(g.limit), 0.02);

  for (int deg = 0; deg <= 2; ++deg) {
    const double coarse = korovkin_error({1e-2, 0.1, 0.3, 1e2}, deg, 0.0, 1.0);
    const double fine = korovkin_error({1e-4, 0.1, 0.3, 1e4}, deg, 0.0, 1.0);
    check(s, "korovkin.t^" + std::to_string(deg), fine, std::max(coarse, 1e-15));
  }
}

void bounds_suite(SuiteResult& s) {
  const double m = second_moment_constant();
  for (const char* name : {"sin", "cos", "exp", "monomial(2)"}) {
    const FunctionSpec f = builtin(name);
    for (double x : {0.1, 0.5, 0.9, 1.0}) {
      for (double beta : {10.0, 100.0, 1000.0}) {
        const OperatorParams p{1.0 / beta, 0.1, 0.3, beta};
        const BoundReport reports[] = {
            bound_steklov(p, f, x),
            bound_c1(p, f, x),
            bound_lipschitz_maximal(p, f, x, 1.0),
            bound_lipschitz_maximal(p, f, x, 0.5),
            bound_lipschitz_space(p, f, x, 1.0, 1.0, 1.0, lipschitz_space_constant(f, x, 1.0, 1.0, 1.0)),
            bound_lipschitz_space(p, f, x, 0.5, 0.0, 1.0, lipschitz_space_constant(f, x, 0.5, 0.0, 1.0)),
            bv_rate_bound(p, f, x, m),
            quantitative_voronovskaya(p, f, x),
        };
        for (const auto& r : reports) {
          check(s,
                "bound." + r.name + "." + name + ".x=" + format_number(x) + ".beta=" + format_number(beta),
                r.lhs, r.rhs + 1e-12);
        }
      }
    }
  }

  // Existential constants: the running sup over the beta ladder must settle.
  const double ladder[] = {10.0, 20.0, 50.0, 100.0, 200.0, 500.0, 1000.0};
  for (const char* name : {"sin", "cos", "exp"}) {
    const FunctionSpec f = builtin(name);
    double m1_upto_2 = 0.0, m1_upto_3 = 0.0, c_upto_2 = 0.0, c_upto_3 = 0.0;
    for (double beta : ladder) {
      const OperatorParams p{1.0 / beta, 0.1, 0.3, beta};
      const double m1 = bound_direct(p, f, 0.5).term("m1_needed");
      const double c = quantitative_voronovskaya(p, f, 0.5).term("c_needed");
      if (beta <= 100.0) {
        m1_upto_2 = std::max(m1_upto_2, m1);
        c_upto_2 = std::max(c_upto_2, c);
      }
      m1_upto_3 = std::max(m1_upto_3, m1);
      c_upto_3 = std::max(c_upto_3, c);
    }
    check(s, std::string("fit.direct_m1.") + name, std::abs(m1_upto_3 - m1_upto_2), 0.1 * m1_upto_3);
    check(s, std::string("fit.voronovskaya_c.") + name, std::abs(c_upto_3 - c_upto_2), 0.1 * c_upto_3);
  }

  double scaled[2];
  int idx = 0;
  for (double beta : {1e2, 1e4}) {
    const auto r = bv_rate_bound({1.0 / beta, 0.1, 0.9, beta}, builtin("exp"), 1.0, m);
    check(s, "bv.exp.beta=" + format_number(beta), r.lhs, r.rhs);
    scaled[idx++] = r.rhs * std::sqrt(beta);
  }
  check(s, "bv.exp.rhs_sqrt_beta", scaled[1], scaled[0]);

  for (double beta : {10.0, 100.0, 1000.0}) {
    const OperatorParams p{1.0 / beta, 0.1, 0.3, beta};
    for (int r = 1; r <= 2; ++r) {
      const auto w = weighted_norm_error(p, r);
      check(s, "weighted_norm.t^" + std::to_string(r) + ".beta=" + format_number(beta), w.measured, w.closed_bound);
    }
    const auto img = weighted_image_bound(p);
    check(s, "weighted_image.beta=" + format_number(beta), img.measured, img.bound);
  }
}

void tables_suite(SuiteResult& s) {
  for (int k = 1; k <= 5; ++k) {
    TableResult t = run_table(table_config(k));
    attach_reference(t, k);
    if (k == 5) {
      info(s, "table5.max_abs_dev", t.max_abs_dev(), 1e-3);
      continue;
    }
    const std::string prefix = "table" + std::to_string(k);
    check(s, prefix + ".max_abs_dev", t.max_abs_dev(), 1e-3);
    double mismatched = 0.0;
    for (std::size_t i = 0; i < t.values.size(); ++i) {
      for (std::size_t j = 0; j < t.values[i].size(); ++j) {
        if (t.values[i][j].has_value() != (*t.reference)[i][j].has_value()) mismatched += 1.0;
      }
    }
    check(s, prefix + ".absent_cells", mismatched, 0.0);
  }
}

}  // namespace

SuiteResult run_suite(const std::string& name, const SuiteOptions& options) {
  if (name != "moments" && name != "bounds" && name != "asymptotics" && name != "tables" && name != "all") {
    throw ConfigError("unknown suite '" + name + "'");
  }
  SuiteResult s{name, {}};
  const bool all = name == "all";
  if (all || name == "moments") moments_suite(s, options);
  if (all || name == "asymptotics") asymptotics_suite(s);
  if (all || name == "bounds") bounds_suite(s);
  if (all || name == "tables") tables_suite(s);
  return s;
}

void write_suite(const SuiteResult& result, std::ostream& out, char sep) {
  out << "check" << sep << "lhs" << sep << "rhs" << sep << "status\n";
  for (const auto& r : result.records) {
    out << r.check << sep << format_number(r.lhs) << sep << format_number(r.rhs) << sep << r.status << '\n';
  }
}

}  // namespace szk
