#pragma once

#include "szk/basis.h"
#include "szk/functions.h"
#include "szk/quadrature.h"

namespace szk {

/// RL(f; x) = (beta + psi) sum_i w_i(x) int_{cell_i} f(s) ds with
/// cell_i = [(i + phi)/(beta + psi), (i + 1 + phi)/(beta + psi)].
///
/// Polynomial specs are integrated exactly per cell; everything else goes
/// through the Gauss–Legendre rule. Throws DomainError when f is not finite
/// on a visited cell and TruncationFailure from the weight series.
double apply(const OperatorParams& params, const FunctionSpec& f, double x, const TruncationPolicy& policy = {},
             const QuadratureRule& quad = QuadratureRule{});

/// The unshifted Kantorovich variant L(f; x), i.e. apply with phi = psi = 0.
double apply_baseline(double alpha, double beta, const FunctionSpec& f, double x,
                      const TruncationPolicy& policy = {}, const QuadratureRule& quad = QuadratureRule{});

/// Cumulative mass of the operator kernel, J(x, y) = int_0^y K(x, t) dt.
double kernel_cdf(const OperatorParams& params, double x, double y, const TruncationPolicy& policy = {});

/// Left edge of the i-th integration cell.
double cell_start(const OperatorParams& params, std::size_t i);

}  // namespace szk
