#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "szk/polynomial.h"

namespace szk {

enum class GrowthClass { bounded, polynomial, exponential };

/// Declared growth of a test function: |f(t)| <= K (1 + t^rate) for
/// polynomial, |f(t)| <= K e^(rate t) for exponential.
struct Growth {
  GrowthClass kind = GrowthClass::bounded;
  double rate = 0.0;
};

/// Right and left derivative at a point, f'(x+) and f'(x-).
struct OneSided {
  double right = 0.0;
  double left = 0.0;
};

using RealMap = std::function<double(double)>;
/// Sorted points of [a, b] that split a map into monotone pieces.
using PointFinder = std::function<std::vector<double>(double, double)>;

/// Selects f itself or its first derivative.
enum class Component { f, d1 };

/// A registered test function together with the analytic data the error
/// bounds need: derivatives, monotone-piece breakpoints for f and f',
/// one-sided derivatives, and an exact polynomial form when one exists.
struct FunctionSpec {
  std::string name;
  RealMap eval;
  RealMap d1;
  RealMap d2;
  Growth growth;
  PointFinder critical_points;
  PointFinder d1_critical_points;
  std::function<OneSided(double)> one_sided;
  std::optional<Polynomial> polynomial;

  double operator()(double t) const { return eval(t); }
  bool has_d1() const noexcept { return static_cast<bool>(d1); }
  bool has_d2() const noexcept { return static_cast<bool>(d2); }

  /// k-th derivative (k = 0, 1, 2); throws MissingDerivative.
  double derivative(int k, double t) const;
  /// Breakpoints of f (Component::f) or f' (Component::d1) on [a, b].
  std::vector<double> breakpoints(Component of, double a, double b) const;
};

/// Built-in registry: const1, identity, monomial(r), sin, cos, exp, and
/// kink (|t - 1|, whose derivative jumps at t = 1). Throws UnknownFunction.
FunctionSpec builtin(std::string_view name);

/// Names accepted by builtin(); monomial is listed as "monomial(2)".
std::vector<std::string> builtin_names();

FunctionSpec from_polynomial(std::string name, Polynomial p);
FunctionSpec product(const FunctionSpec& f, const FunctionSpec& g);
FunctionSpec linear_combination(double a, const FunctionSpec& f, double b, const FunctionSpec& g);

/// Total variation of f or f' over [a, b], summed over the declared monotone
/// pieces plus the jumps at interior breakpoints. Exact for registered
/// functions. Endpoint values are the one-sided limits from inside [a, b].
double total_variation(const FunctionSpec& spec, Component of, double a, double b);

/// The auxiliary function used by the bounded-variation estimate:
/// g(t) - g(x-) for t < x, 0 at t = x, g(t) - g(x+) for t > x, where g is f
/// or f'. Throws MissingOneSided when g = f' and no one-sided provider exists.
double auxiliary_fx(const FunctionSpec& spec, double x, double t, Component of = Component::f);

}  // namespace szk
