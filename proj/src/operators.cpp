#include "szk/operators.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "szk/errors.h"
#include "szk/summation.h"

namespace szk {

double cell_start(const OperatorParams& params, std::size_t i) {
  return (static_cast<double>(i) + params.phi) / params.cell_scale();
}

namespace {

double cell_integral(const FunctionSpec& f, double lo, double width, const QuadratureRule& quad) {
  if (f.polynomial) return f.polynomial->integrate(lo, width);
  const double v = quad.integrate(f.eval, lo, width);
  if (!std::isfinite(v)) {
    throw DomainError(f.name + " is not finite on the cell starting at " + std::to_string(lo));
  }
  return v;
}

}  // namespace

double apply(const OperatorParams& params, const FunctionSpec& f, double x, const TruncationPolicy& policy,
             const QuadratureRule& quad) {
  if (!(x >= 0.0)) throw DomainError("apply: x must be >= 0");
  const WeightSequence seq = weight_sequence(params, x, policy);
  const double scale = params.cell_scale();
  const double width = 1.0 / scale;
  CompensatedSum sum;
  for (std::size_t k = 0; k < seq.size(); ++k) {
    const double lo = cell_start(params, seq.index(k));
    sum.add(seq.weights[k] * cell_integral(f, lo, width, quad));
  }
  return scale * sum.value();
}

double apply_baseline(double alpha, double beta, const FunctionSpec& f, double x, const TruncationPolicy& policy,
                      const QuadratureRule& quad) {
  return apply(OperatorParams{alpha, 0.0, 0.0, beta}, f, x, policy, quad);
}

double kernel_cdf(const OperatorParams& params, double x, double y, const TruncationPolicy& policy) {
  if (!(x >= 0.0) || !(y >= 0.0)) throw DomainError("kernel_cdf: x and y must be >= 0");
  const WeightSequence seq = weight_sequence(params, x, policy);
  const double scale = params.cell_scale();
  CompensatedSum sum;
  for (std::size_t k = 0; k < seq.size(); ++k) {
    const std::size_t i = seq.index(k);
    const double lo = cell_start(params, i);
    if (lo >= y) break;
    const double hi = (static_cast<double>(i) + 1.0 + params.phi) / scale;
    // Fraction of the cell below y; cells have width 1/scale.
    const double covered = hi <= y ? 1.0 : (y - lo) * scale;
    sum.add(seq.weights[k] * covered);
  }
  return std::clamp(sum.value(), 0.0, 1.0);
}

}  // namespace szk
