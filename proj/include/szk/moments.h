#pragma once

#include <optional>

#include "szk/basis.h"

namespace szk {

/// RL(t^r; x) for r = 0..3 from the closed forms. Throws UnsupportedOrder.
double raw_moment(const OperatorParams& params, double x, int r);

/// Central moments Phi_m(x) = RL((t - x)^m; x) for m = 1..3 from the closed
/// forms. The m = 3 expression is the printed one and is known to disagree
/// with the series when phi or psi is nonzero; prefer central_moment_oracle.
double central_moment(const OperatorParams& params, double x, int m);

/// Truncation used by the oracles: the series is summed until the remaining
/// tail is below rounding, since (t - x)^m amplifies far cells.
TruncationPolicy oracle_policy();

/// RL(t^r; x) summed from the weight series with exact cell integrals.
double raw_moment_oracle(const OperatorParams& params, double x, int r,
                         const TruncationPolicy& policy = oracle_policy());

/// RL((t - x)^m; x), m = 0..6, summed from the weight series.
double central_moment_oracle(const OperatorParams& params, double x, int m,
                             const TruncationPolicy& policy = oracle_policy());

enum class MomentKind { raw, central };

/// Closed form (when one exists) against the series oracle.
struct MomentReport {
  MomentKind kind = MomentKind::raw;
  int order = 0;
  std::optional<double> closed_form;
  double oracle = 0.0;
  std::optional<double> abs_discrepancy;

  /// Oracle value; it is authoritative whenever the two disagree.
  double value() const noexcept { return oracle; }
};

MomentReport moment_report(const OperatorParams& params, double x, MomentKind kind, int order,
                           const TruncationPolicy& policy = oracle_policy());

/// Limits at alpha = 1/beta as beta -> infinity:
/// beta Phi_1 -> 1/2 - x psi + phi, beta Phi_2 -> 2x,
/// beta^2 Phi_4 -> 12 x^2, beta^3 Phi_6 -> 120 x^3.
struct AsymptoticLimits {
  double first = 0.0;
  double second = 0.0;
  double fourth = 0.0;
  double sixth = 0.0;
};

AsymptoticLimits asymptotic_limits(double x, double phi, double psi);

/// Scale factor beta^k paired with Phi_m in the limits above (k = 1, 1, 2, 3
/// for m = 1, 2, 4, 6).
double asymptotic_scaling(double beta, int m);

}  // namespace szk
