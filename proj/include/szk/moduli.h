#pragma once

#include <cstddef>

#include "szk/functions.h"
#include "szk/quadrature.h"

namespace szk {

/// Sampling setup for the sup-type moduli. The sup over x >= 0 is taken over
/// the grid 0, step, 2 step, ..., domain_cap; offsets h in (0, delta] are
/// sampled at `offset_samples` equally spaced points ending at delta.
/// Estimates are lower bounds of the true sup and converge as the grid is
/// refined.
struct ModulusConfig {
  double domain_cap = 10.0;
  double grid_step = 1e-3;
  std::size_t offset_samples = 64;

  void validate() const;
};

/// omega(f, delta) = sup |f(x + h) - f(x)| over x in [0, B], 0 < h <= delta.
double omega(const FunctionSpec& f, double delta, const ModulusConfig& cfg = {});

/// Same as omega applied to f' (throws MissingDerivative).
double omega_derivative(const FunctionSpec& f, double delta, const ModulusConfig& cfg = {});

/// omega_2(f, delta) = sup |f(x) - 2 f(x + h) + f(x + 2h)| over x in [0, B], 0 < h <= delta.
double omega2(const FunctionSpec& f, double delta, const ModulusConfig& cfg = {});

/// Steklov mean f_h(x) = (4/h^2) int_0^{h/2} int_0^{h/2} (2 f(x+u+v) - f(x+2(u+v))) du dv,
/// evaluated with a tensor Gauss–Legendre rule.
double steklov(const FunctionSpec& f, double h, double x, const QuadratureRule& quad = QuadratureRule{});

/// Lipschitz maximal function sup_{t != x} |f(t) - f(x)| / |t - x|^j, t on the grid of [0, B].
double lipschitz_maximal(const FunctionSpec& f, double x, double j, const ModulusConfig& cfg = {});

/// Weighted modulus sup |f(x + h) - f(x)| / ((1 + h^2)(1 + x^2)) over x in [0, B], 0 <= h <= delta.
double weighted_modulus(const FunctionSpec& f, double delta, const ModulusConfig& cfg = {});

/// Weighted modulus of f'' (throws MissingDerivative).
double weighted_modulus_second_derivative(const FunctionSpec& f, double delta, const ModulusConfig& cfg = {});

}  // namespace szk
