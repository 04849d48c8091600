#include "szk/functions.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>

#include "szk/errors.h"

namespace szk {

namespace {

constexpr double kPi = std::numbers::pi;

PointFinder no_points() {
  return [](double, double) { return std::vector<double>{}; };
}

/// offset + k*pi for all integers k with the point in [a, b].
PointFinder periodic_points(double offset) {
  return [offset](double a, double b) {
    std::vector<double> pts;
    if (b < a) return pts;
    const double k0 = std::ceil((a - offset) / kPi - 1e-12);
    for (double k = k0;; k += 1.0) {
      double p = offset + k * kPi;
      if (p > b + 1e-12) break;
      pts.push_back(std::clamp(p, a, b));
    }
    return pts;
  };
}

PointFinder single_point(double c) {
  return [c](double a, double b) {
    return (c >= a && c <= b) ? std::vector<double>{c} : std::vector<double>{};
  };
}

std::function<OneSided(double)> smooth_one_sided(RealMap d1) {
  return [d1 = std::move(d1)](double x) { return OneSided{d1(x), d1(x)}; };
}

FunctionSpec make_sin() {
  FunctionSpec s;
  s.name = "sin";
  s.eval = [](double t) { return std::sin(t); };
  s.d1 = [](double t) { return std::cos(t); };
  s.d2 = [](double t) { return -std::sin(t); };
  s.growth = {GrowthClass::bounded, 0.0};
  s.critical_points = periodic_points(kPi / 2);
  s.d1_critical_points = periodic_points(0.0);
  s.one_sided = smooth_one_sided(s.d1);
  return s;
}

FunctionSpec make_cos() {
  FunctionSpec s;
  s.name = "cos";
  s.eval = [](double t) { return std::cos(t); };
  s.d1 = [](double t) { return -std::sin(t); };
  s.d2 = [](double t) { return -std::cos(t); };
  s.growth = {GrowthClass::bounded, 0.0};
  s.critical_points = periodic_points(0.0);
  s.d1_critical_points = periodic_points(kPi / 2);
  s.one_sided = smooth_one_sided(s.d1);
  return s;
}

FunctionSpec make_exp() {
  FunctionSpec s;
  s.name = "exp";
  s.eval = [](double t) { return std::exp(t); };
  s.d1 = s.eval;
  s.d2 = s.eval;
  s.growth = {GrowthClass::exponential, 1.0};
  s.critical_points = no_points();
  s.d1_critical_points = no_points();
  s.one_sided = smooth_one_sided(s.d1);
  return s;
}

FunctionSpec make_kink() {
  // |t - 1|: continuous, derivative of bounded variation with a unit jump pair.
  FunctionSpec s;
  s.name = "kink";
  s.eval = [](double t) { return std::abs(t - 1.0); };
  s.d1 = [](double t) { return t > 1.0 ? 1.0 : (t < 1.0 ? -1.0 : 0.0); };
  s.growth = {GrowthClass::polynomial, 1.0};
  s.critical_points = single_point(1.0);
  s.d1_critical_points = single_point(1.0);
  s.one_sided = [](double x) {
    if (x > 1.0) return OneSided{1.0, 1.0};
    if (x < 1.0) return OneSided{-1.0, -1.0};
    return OneSided{1.0, -1.0};
  };
  return s;
}

std::optional<int> parse_monomial(std::string_view name) {
  constexpr std::string_view prefix = "monomial(";
  if (!name.starts_with(prefix) || !name.ends_with(")")) return std::nullopt;
  const std::string_view digits = name.substr(prefix.size(), name.size() - prefix.size() - 1);
  int r = -1;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), r);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || r < 0) return std::nullopt;
  return r;
}

}  // namespace

double FunctionSpec::derivative(int k, double t) const {
  switch (k) {
    case 0:
      return eval(t);
    case 1:
      if (!d1) throw MissingDerivative(name + ": first derivative not available");
      return d1(t);
    case 2:
      if (!d2) throw MissingDerivative(name + ": second derivative not available");
      return d2(t);
    default:
      throw MissingDerivative(name + ": derivative order " + std::to_string(k) + " not available");
  }
}

std::vector<double> FunctionSpec::breakpoints(Component of, double a, double b) const {
  const PointFinder& finder = of == Component::f ? critical_points : d1_critical_points;
  if (!finder) return {};
  return finder(a, b);
}

FunctionSpec from_polynomial(std::string name, Polynomial p) {
  FunctionSpec s;
  s.name = std::move(name);
  const Polynomial d1 = p.derivative();
  const Polynomial d2 = d1.derivative();
  s.eval = [p](double t) { return p(t); };
  s.d1 = [d1](double t) { return d1(t); };
  s.d2 = [d2](double t) { return d2(t); };
  s.growth = {GrowthClass::polynomial, static_cast<double>(std::max(p.degree(), 0))};
  s.one_sided = smooth_one_sided(s.d1);
  s.polynomial = std::move(p);
  // Monotone pieces are only tracked for the monomials below.
  return s;
}

FunctionSpec builtin(std::string_view name) {
  if (name == "sin") return make_sin();
  if (name == "cos") return make_cos();
  if (name == "exp") return make_exp();
  if (name == "kink") return make_kink();
  if (name == "const1") {
    FunctionSpec s = from_polynomial("const1", Polynomial::monomial(0));
    s.growth = {GrowthClass::bounded, 0.0};
    s.critical_points = no_points();
    s.d1_critical_points = no_points();
    return s;
  }
  if (name == "identity") {
    FunctionSpec s = from_polynomial("identity", Polynomial::monomial(1));
    s.critical_points = no_points();
    s.d1_critical_points = no_points();
    return s;
  }
  if (const auto r = parse_monomial(name)) {
    FunctionSpec s = from_polynomial(std::string(name), Polynomial::monomial(*r));
    if (*r == 0) s.growth = {GrowthClass::bounded, 0.0};
    // t^r has its only possible extremum at 0; likewise t^(r-1) for f'.
    s.critical_points = (*r >= 2 && *r % 2 == 0) ? single_point(0.0) : no_points();
    s.d1_critical_points = (*r >= 3 && *r % 2 == 1) ? single_point(0.0) : no_points();
    return s;
  }
  throw UnknownFunction("unknown function '" + std::string(name) + "'");
}

std::vector<std::string> builtin_names() {
  return {"const1", "identity", "monomial(2)", "sin", "cos", "exp", "kink"};
}

FunctionSpec product(const FunctionSpec& f, const FunctionSpec& g) {
  FunctionSpec s;
  s.name = f.name + "*" + g.name;
  s.eval = [f, g](double t) { return f.eval(t) * g.eval(t); };
  if (f.has_d1() && g.has_d1()) {
    s.d1 = [f, g](double t) { return f.d1(t) * g.eval(t) + f.eval(t) * g.d1(t); };
    s.one_sided = smooth_one_sided(s.d1);
  }
  if (f.has_d1() && g.has_d1() && f.has_d2() && g.has_d2()) {
    s.d2 = [f, g](double t) { return f.d2(t) * g.eval(t) + 2.0 * f.d1(t) * g.d1(t) + f.eval(t) * g.d2(t); };
  }
  const bool f_exp = f.growth.kind == GrowthClass::exponential;
  const bool g_exp = g.growth.kind == GrowthClass::exponential;
  if (f_exp || g_exp) {
    s.growth = {GrowthClass::exponential, (f_exp ? f.growth.rate : 0.0) + (g_exp ? g.growth.rate : 0.0) + 1e-9};
  } else {
    s.growth = {f.growth.kind == GrowthClass::bounded && g.growth.kind == GrowthClass::bounded
                    ? GrowthClass::bounded
                    : GrowthClass::polynomial,
                f.growth.rate + g.growth.rate};
  }
  if (f.polynomial && g.polynomial) s.polynomial = *f.polynomial * *g.polynomial;
  return s;
}

FunctionSpec linear_combination(double a, const FunctionSpec& f, double b, const FunctionSpec& g) {
  FunctionSpec s;
  s.name = "lincomb(" + f.name + "," + g.name + ")";
  s.eval = [=](double t) { return a * f.eval(t) + b * g.eval(t); };
  if (f.has_d1() && g.has_d1()) {
    s.d1 = [=](double t) { return a * f.d1(t) + b * g.d1(t); };
    s.one_sided = smooth_one_sided(s.d1);
  }
  if (f.has_d2() && g.has_d2()) s.d2 = [=](double t) { return a * f.d2(t) + b * g.d2(t); };
  s.growth = f.growth.kind >= g.growth.kind ? f.growth : g.growth;
  if (f.polynomial && g.polynomial) s.polynomial = a * *f.polynomial + b * *g.polynomial;
  return s;
}

namespace {

struct Limits {
  double right;
  double left;
};

Limits one_sided_values(const FunctionSpec& spec, Component of, double p) {
  if (of == Component::f) {
    const double v = spec.eval(p);
    return {v, v};
  }
  if (spec.one_sided) {
    const OneSided os = spec.one_sided(p);
    return {os.right, os.left};
  }
  if (!spec.has_d1()) throw MissingDerivative(spec.name + ": first derivative not available");
  const double v = spec.d1(p);
  return {v, v};
}

}  // namespace

double total_variation(const FunctionSpec& spec, Component of, double a, double b) {
  if (b < a) throw DomainError("total_variation: require a <= b");
  if (of == Component::d1 && !spec.has_d1()) {
    throw MissingDerivative(spec.name + ": first derivative not available");
  }
  if (a == b) return 0.0;

  std::vector<double> knots{a};
  for (double p : spec.breakpoints(of, a, b)) {
    if (p > a && p < b) knots.push_back(p);
  }
  knots.push_back(b);

  double total = 0.0;
  for (std::size_t k = 0; k + 1 < knots.size(); ++k) {
    const double start = one_sided_values(spec, of, knots[k]).right;
    const double end = one_sided_values(spec, of, knots[k + 1]).left;
    total += std::abs(end - start);
    if (k + 2 < knots.size()) {
      const Limits at = one_sided_values(spec, of, knots[k + 1]);
      total += std::abs(at.right - at.left);
    }
  }
  return total;
}

double auxiliary_fx(const FunctionSpec& spec, double x, double t, Component of) {
  if (of == Component::d1 && !spec.one_sided) {
    throw MissingOneSided(spec.name + ": one-sided derivatives not available");
  }
  if (t == x) return 0.0;
  const Limits lim = one_sided_values(spec, of, x);
  const double g = of == Component::f ? spec.eval(t) : spec.d1(t);
  return t < x ? g - lim.left : g - lim.right;
}

}  // namespace szk
