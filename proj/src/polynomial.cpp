#include "szk/polynomial.h"

#include <algorithm>

#include "szk/errors.h"

namespace szk {

Polynomial Polynomial::monomial(int degree) {
  if (degree < 0) throw DomainError("monomial degree must be >= 0");
  Polynomial p;
  p.coeffs.assign(static_cast<std::size_t>(degree) + 1, 0.0);
  p.coeffs.back() = 1.0;
  return p;
}

Polynomial Polynomial::centered_power(double c, int m) {
  Polynomial p = monomial(m);
  p.center = c;
  return p;
}

double Polynomial::operator()(double t) const {
  const double u = t - center;
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * u + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  Polynomial d;
  d.center = center;
  if (coeffs.size() <= 1) {
    d.coeffs = {0.0};
    return d;
  }
  d.coeffs.resize(coeffs.size() - 1);
  for (std::size_t k = 1; k < coeffs.size(); ++k) d.coeffs[k - 1] = static_cast<double>(k) * coeffs[k];
  return d;
}

double Polynomial::integrate(double lo, double width) const {
  const double a = lo - center;
  const double b = a + width;
  double total = 0.0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0.0) continue;
    // sum_{j=0..k} b^j a^(k-j)
    double s = 0.0;
    double bj = 1.0;
    for (std::size_t j = 0; j <= k; ++j) {
      double term = bj;
      for (std::size_t q = 0; q < k - j; ++q) term *= a;
      s += term;
      bj *= b;
    }
    total += coeffs[k] * width * s / static_cast<double>(k + 1);
  }
  return total;
}

Polynomial Polynomial::recentered(double c) const {
  // Taylor coefficients at c: p^(k)(c) / k!
  Polynomial out;
  out.center = c;
  out.coeffs.assign(coeffs.size(), 0.0);
  Polynomial d = *this;
  double fact = 1.0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (k > 0) fact *= static_cast<double>(k);
    out.coeffs[k] = d(c) / fact;
    d = d.derivative();
  }
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  const Polynomial bb = a.center == b.center ? b : b.recentered(a.center);
  Polynomial out;
  out.center = a.center;
  out.coeffs.assign(a.coeffs.size() + bb.coeffs.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < bb.coeffs.size(); ++j) out.coeffs[i + j] += a.coeffs[i] * bb.coeffs[j];
  return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  const Polynomial bb = a.center == b.center ? b : b.recentered(a.center);
  Polynomial out;
  out.center = a.center;
  out.coeffs.assign(std::max(a.coeffs.size(), bb.coeffs.size()), 0.0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) out.coeffs[i] += a.coeffs[i];
  for (std::size_t i = 0; i < bb.coeffs.size(); ++i) out.coeffs[i] += bb.coeffs[i];
  return out;
}

Polynomial operator*(double s, const Polynomial& p) {
  Polynomial out = p;
  for (double& c : out.coeffs) c *= s;
  return out;
}

}  // namespace szk
