#include "szk/moduli.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "szk/errors.h"

namespace szk {

void ModulusConfig::validate() const {
  if (!(domain_cap > 0.0)) throw DomainError("ModulusConfig: domain_cap must be > 0");
  if (!(grid_step > 0.0) || !(grid_step < domain_cap)) {
    throw DomainError("ModulusConfig: grid_step must lie in (0, domain_cap)");
  }
  if (offset_samples < 1) throw DomainError("ModulusConfig: offset_samples must be >= 1");
}

namespace {

std::size_t grid_count(const ModulusConfig& cfg) {
  return static_cast<std::size_t>(std::floor(cfg.domain_cap / cfg.grid_step + 1e-9)) + 1;
}

double grid_point(const ModulusConfig& cfg, std::size_t k) {
  return std::min(static_cast<double>(k) * cfg.grid_step, cfg.domain_cap);
}

void check_delta(double delta, const char* what) {
  if (!(delta > 0.0)) throw DomainError(std::string(what) + ": delta must be > 0");
}

/// sup over grid x and sampled h of |kernel(x, h)|.
template <typename Kernel>
double sup_over_offsets(double delta, const ModulusConfig& cfg, Kernel&& kernel) {
  cfg.validate();
  const std::size_t nx = grid_count(cfg);
  const std::size_t nh = cfg.offset_samples;
  double best = 0.0;
  for (std::size_t k = 0; k < nx; ++k) {
    const double x = grid_point(cfg, k);
    for (std::size_t j = 1; j <= nh; ++j) {
      const double h = delta * static_cast<double>(j) / static_cast<double>(nh);
      best = std::max(best, std::abs(kernel(x, h)));
    }
  }
  return best;
}

double omega_of(const RealMap& g, double delta, const ModulusConfig& cfg) {
  return sup_over_offsets(delta, cfg, [&](double x, double h) { return g(x + h) - g(x); });
}

double weighted_of(const RealMap& g, double delta, const ModulusConfig& cfg) {
  return sup_over_offsets(delta, cfg, [&](double x, double h) {
    return (g(x + h) - g(x)) / ((1.0 + h * h) * (1.0 + x * x));
  });
}

}  // namespace

double omega(const FunctionSpec& f, double delta, const ModulusConfig& cfg) {
  check_delta(delta, "omega");
  return omega_of(f.eval, delta, cfg);
}

double omega_derivative(const FunctionSpec& f, double delta, const ModulusConfig& cfg) {
  check_delta(delta, "omega_derivative");
  if (!f.has_d1()) throw MissingDerivative(f.name + ": first derivative not available");
  return omega_of(f.d1, delta, cfg);
}

double omega2(const FunctionSpec& f, double delta, const ModulusConfig& cfg) {
  check_delta(delta, "omega2");
  return sup_over_offsets(delta, cfg, [&](double x, double h) {
    return f.eval(x) - 2.0 * f.eval(x + h) + f.eval(x + 2.0 * h);
  });
}

double steklov(const FunctionSpec& f, double h, double x, const QuadratureRule& quad) {
  if (!(h > 0.0)) throw DomainError("steklov: h must be > 0");
  const double half = 0.5 * h;
  const auto inner = [&](double u) {
    return quad.integrate([&](double v) { return 2.0 * f.eval(x + u + v) - f.eval(x + 2.0 * (u + v)); }, 0.0, half);
  };
  return 4.0 / (h * h) * quad.integrate(inner, 0.0, half);
}

double lipschitz_maximal(const FunctionSpec& f, double x, double j, const ModulusConfig& cfg) {
  if (!(j > 0.0 && j <= 1.0)) throw DomainError("lipschitz_maximal: order j must lie in (0, 1]");
  cfg.validate();
  const double fx = f.eval(x);
  const std::size_t nt = grid_count(cfg);
  double best = 0.0;
  for (std::size_t k = 0; k < nt; ++k) {
    const double t = grid_point(cfg, k);
    if (t == x) continue;
    best = std::max(best, std::abs(f.eval(t) - fx) / std::pow(std::abs(t - x), j));
  }
  return best;
}

double weighted_modulus(const FunctionSpec& f, double delta, const ModulusConfig& cfg) {
  check_delta(delta, "weighted_modulus");
  return weighted_of(f.eval, delta, cfg);
}

double weighted_modulus_second_derivative(const FunctionSpec& f, double delta, const ModulusConfig& cfg) {
  check_delta(delta, "weighted_modulus_second_derivative");
  if (!f.has_d2()) throw MissingDerivative(f.name + ": second derivative not available");
  return weighted_of(f.d2, delta, cfg);
}

}  // namespace szk
