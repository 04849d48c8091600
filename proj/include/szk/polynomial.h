#pragma once

#include <vector>

namespace szk {

/// p(t) = sum_k coeffs[k] (t - center)^k.
///
/// Cell integrals use the factorisation b^(k+1) - a^(k+1) = (b - a) sum b^j a^(k-j)
/// with the cell width passed in directly, so narrow cells far from the
/// origin do not lose digits to cancellation.
struct Polynomial {
  double center = 0.0;
  std::vector<double> coeffs;

  static Polynomial monomial(int degree);
  /// (t - c)^m
  static Polynomial centered_power(double c, int m);

  int degree() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
  double operator()(double t) const;
  Polynomial derivative() const;

  /// Integral over [lo, lo + width].
  double integrate(double lo, double width) const;

  /// Re-expand around another center.
  Polynomial recentered(double c) const;
};

Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator*(double s, const Polynomial& p);

}  // namespace szk
