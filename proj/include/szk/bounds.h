#pragma once

#include <string>
#include <utility>
#include <vector>

#include "szk/basis.h"
#include "szk/functions.h"
#include "szk/moduli.h"

namespace szk {

/// Where a bound was evaluated.
struct BoundContext {
  OperatorParams params;
  double x = 0.0;
  std::string function;
};

/// A theorem's right-hand side next to the measured left-hand side.
struct BoundReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  bool satisfied = false;
  BoundContext context;
  /// Named intermediate quantities (moduli, moments, partial sums).
  std::vector<std::pair<std::string, double>> terms;
  /// Free-form remark, e.g. a flagged discrepancy in the printed statement.
  std::string note;

  double term(const std::string& key) const;
};

/// satisfied <=> lhs <= rhs + 1e-12.
BoundReport make_report(std::string name, double lhs, double rhs, BoundContext context);

/// |RL f - f| <= 5 omega(f, sqrt(Phi_2)) + 6.5 omega_2(f, sqrt(Phi_2)).
BoundReport bound_steklov(const OperatorParams& params, const FunctionSpec& f, double x,
                          const ModulusConfig& cfg = {});

/// |RL f - f| <= |f'(x)| (1 + 2 phi + 2 x psi) / (2 (psi + beta)) + 2 sqrt(Phi_2) omega(f', sqrt(Phi_2)).
/// Uses the printed +2 x psi numerator, a looser majorant of 2 (psi + beta) |Phi_1|.
BoundReport bound_c1(const OperatorParams& params, const FunctionSpec& f, double x, const ModulusConfig& cfg = {});

/// |RL f - f| <= varpi_j(f, x) Phi_2^(j/2).
BoundReport bound_lipschitz_maximal(const OperatorParams& params, const FunctionSpec& f, double x, double j,
                                    const ModulusConfig& cfg = {});

/// |RL f - f| <= M_f (Phi_2 / (x (nu1 x + nu2)))^(j/2). DomainError at x = 0.
BoundReport bound_lipschitz_space(const OperatorParams& params, const FunctionSpec& f, double x, double j,
                                  double nu1, double nu2, double m_f);

/// Smallest M with |f(y) - f(x)| <= M |y - x|^j / (y + nu1 x^2 + nu2 x)^(j/2) for y on the grid.
double lipschitz_space_constant(const FunctionSpec& f, double x, double j, double nu1, double nu2,
                                const ModulusConfig& cfg = {});

/// Peetre-K direct estimate M1 omega_2(f, sqrt(gamma_n)) + omega(f, eta_n), reported with the
/// given M1. Terms: gamma_n, eta_n, omega2_term, omega_term, m1_needed (smallest M1 that
/// makes the inequality hold at this point).
BoundReport bound_direct(const OperatorParams& params, const FunctionSpec& f, double x, const ModulusConfig& cfg = {},
                         double m1 = 1.0);

double gamma_n(const OperatorParams& params, double x);
double eta_n(const OperatorParams& params, double x);

/// Which candidate limit a residual sequence approaches.
enum class Limit { consistent, paper, both, neither };

std::string to_string(Limit which);

struct VoronovskayaReport {
  std::vector<std::pair<double, double>> residuals;  // (beta, beta (RL f - f))
  /// (1/2 - x psi + phi) f' + 2 x f'' as printed.
  double l_paper = 0.0;
  /// (1/2 - x psi + phi) f' + x f'', implied by beta Phi_2 -> 2x.
  double l_consistent = 0.0;
  Limit approached = Limit::neither;
};

/// beta (RL f - f)(x) along the family alpha = 1/beta.
VoronovskayaReport voronovskaya_residual(double phi, double psi, const FunctionSpec& f, double x,
                                         const std::vector<double>& betas);

/// beta |RL f - f - f' Phi_1 - f''/2 Phi_2| against Delta(f'', 1/sqrt(beta)).
/// rhs is the explicit proof coefficient 8 (1 + x^2)(beta Phi_2 + beta^3 Phi_6) times Delta;
/// the term c_needed is lhs / Delta, the smallest admissible O(1) constant.
BoundReport quantitative_voronovskaya(const OperatorParams& params, const FunctionSpec& f, double x,
                                      const ModulusConfig& cfg = {});

struct GrussReport {
  std::vector<std::pair<double, double>> residuals;  // (beta, beta (RL(fg) - RL f RL g))
  double limit = 0.0;                                // 2 x f'(x) g'(x)
};

GrussReport gruss_residual(double phi, double psi, const FunctionSpec& f, const FunctionSpec& g, double x,
                           const std::vector<double>& betas);

/// Five-term estimate for f with derivative of bounded variation. m is the second-moment
/// constant (see second_moment_constant). DomainError at x = 0; MissingOneSided.
BoundReport bv_rate_bound(const OperatorParams& params, const FunctionSpec& f, double x, double m);

/// Empirical sup of Phi_2 (beta + psi) / (1 + x)^2 over x in [0, 10], beta in
/// {10, 10^2, 10^3, 10^4}, alpha in {0, 1/(2 beta), 1/beta} and a set of phi <= psi.
double second_moment_constant();

struct WeightedNormReport {
  double measured = 0.0;  // sup |RL(t^r) - x^r| / (1 + x^2) over the grid
  double closed_bound = 0.0;
};

/// r in {1, 2}; UnsupportedOrder otherwise.
WeightedNormReport weighted_norm_error(const OperatorParams& params, int r, const ModulusConfig& cfg = {});

struct WeightedImageReport {
  double measured = 0.0;  // sup RL(1 + t^2) / (1 + x^2)
  double kappa = 0.0;
  double bound = 0.0;     // 2 + kappa
  bool satisfied = false;
};

WeightedImageReport weighted_image_bound(const OperatorParams& params, const ModulusConfig& cfg = {});

/// max over x in [a, b] (step) of |RL(t^r; x) - x^r|, r in {0, 1, 2}.
double korovkin_error(const OperatorParams& params, int r, double a, double b, double step = 1e-2);

}  // namespace szk
