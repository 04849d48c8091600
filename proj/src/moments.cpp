#include "szk/moments.h"

#include <cmath>
#include <string>

#include "szk/errors.h"
#include "szk/functions.h"
#include "szk/operators.h"

namespace szk {

double raw_moment(const OperatorParams& params, double x, int r) {
  params.validate();
  const double a = params.alpha;
  const double p = params.phi;
  const double q = params.psi;
  const double b = params.beta;
  const double s = q + b;
  switch (r) {
    case 0:
      return 1.0;
    case 1:
      return (1.0 + 2.0 * p + 2.0 * x * b) / (2.0 * s);
    case 2:
      return (1.0 + 3.0 * p + 3.0 * p * p + 6.0 * x * b + 6.0 * x * p * b + 3.0 * a * x * b * b + 3.0 * x * x * b * b) /
             (3.0 * s * s);
    case 3:
      return (1.0 + 4.0 * p + 6.0 * p * p + 4.0 * p * p * p + 2.0 * x * (7.0 + 12.0 * p + 6.0 * p * p) * b +
              6.0 * x * (x + a) * (3.0 + 2.0 * p) * b * b + 4.0 * x * (x * x + 3.0 * x * a + 2.0 * a * a) * b * b * b) /
             (4.0 * s * s * s);
    default:
      throw UnsupportedOrder("raw_moment: closed form only for r = 0..3, got " + std::to_string(r));
  }
}

double central_moment(const OperatorParams& params, double x, int m) {
  params.validate();
  const double a = params.alpha;
  const double p = params.phi;
  const double q = params.psi;
  const double b = params.beta;
  const double s = q + b;
  switch (m) {
    case 1:
      return (1.0 + 2.0 * p - 2.0 * x * q) / (2.0 * s);
    case 2:
      return (1.0 + 3.0 * p + 3.0 * p * p - 3.0 * x * q - 6.0 * x * p * q + 3.0 * x * x * q * q + 3.0 * x * b +
              3.0 * x * a * b * b) /
             (3.0 * s * s);
    case 3:
      return (1.0 + 4.0 * p * p * p - 4.0 * x * q + 6.0 * x * x * q * q - 4.0 * x * x * x * q * q * q +
              p * p * (6.0 - 12.0 * x * q) + 4.0 * p * (1.0 - 3.0 * x * q + 3.0 * x * x * q * q) +
              2.0 * x * (5.0 + 6.0 * p - 6.0 * x * q) * b + 6.0 * x * a * (3.0 + 2.0 * p + 2.0 * x * q) * b * b +
              8.0 * x * a * a * b * b * b) /
             (4.0 * s * s * s);
    default:
      throw UnsupportedOrder("central_moment: closed form only for m = 1..3, got " + std::to_string(m));
  }
}

TruncationPolicy oracle_policy() { return {1e-17, 1'000'000, 16}; }

double raw_moment_oracle(const OperatorParams& params, double x, int r, const TruncationPolicy& policy) {
  if (r < 0) throw UnsupportedOrder("raw_moment_oracle: order must be >= 0");
  return apply(params, from_polynomial("t^r", Polynomial::monomial(r)), x, policy);
}

double central_moment_oracle(const OperatorParams& params, double x, int m, const TruncationPolicy& policy) {
  if (m < 0 || m > 6) throw UnsupportedOrder("central_moment_oracle: order must be in 0..6");
  return apply(params, from_polynomial("(t-x)^m", Polynomial::centered_power(x, m)), x, policy);
}

MomentReport moment_report(const OperatorParams& params, double x, MomentKind kind, int order,
                           const TruncationPolicy& policy) {
  MomentReport rep;
  rep.kind = kind;
  rep.order = order;
  if (kind == MomentKind::raw) {
    rep.oracle = raw_moment_oracle(params, x, order, policy);
    if (order <= 3) rep.closed_form = raw_moment(params, x, order);
  } else {
    rep.oracle = central_moment_oracle(params, x, order, policy);
    if (order >= 1 && order <= 3) rep.closed_form = central_moment(params, x, order);
  }
  if (rep.closed_form) rep.abs_discrepancy = std::abs(*rep.closed_form - rep.oracle);
  return rep;
}

AsymptoticLimits asymptotic_limits(double x, double phi, double psi) {
  return {0.5 - x * psi + phi, 2.0 * x, 12.0 * x * x, 120.0 * x * x * x};
}

double asymptotic_scaling(double beta, int m) {
  switch (m) {
    case 1:
    case 2:
      return beta;
    case 4:
      return beta * beta;
    case 6:
      return beta * beta * beta;
    default:
      throw UnsupportedOrder("asymptotic_scaling: defined for m = 1, 2, 4, 6");
  }
}

}  // namespace szk
