#include "szk/basis.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <boost/math/distributions/negative_binomial.hpp>
#include <boost/math/distributions/poisson.hpp>

#include "szk/errors.h"
#include "szk/summation.h"

namespace szk {

void OperatorParams::validate() const {
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) throw DomainError("alpha must be a finite value >= 0");
  if (!(beta >= 1.0) || !std::isfinite(beta)) throw DomainError("beta must be a finite value >= 1");
  if (!(phi >= 0.0) || !(psi >= 0.0)) throw DomainError("phi and psi must be >= 0");
  if (phi > psi) throw DomainError("Stancu parameters require phi <= psi");
}

bool OperatorParams::asymptotic_regime() const noexcept {
  // A relative slack of a few ulps so that alpha = 1/beta itself qualifies.
  return alpha * beta <= 1.0 + 8 * std::numeric_limits<double>::epsilon();
}

void TruncationPolicy::validate() const {
  if (!(mass_tol > 0.0 && mass_tol < 1.0)) throw DomainError("mass_tol must lie in (0, 1)");
  if (max_terms < 1) throw DomainError("max_terms must be >= 1");
}

double rising_factorial(double x, std::size_t i, double alpha) {
  double prod = 1.0;
  for (std::size_t j = 0; j < i; ++j) prod *= x + static_cast<double>(j) * alpha;
  return prod;
}

double weight_ratio(const OperatorParams& params, double x, std::size_t i) {
  const double k = static_cast<double>(i);
  // (x + i a) / ((i+1)(a + 1/b)) rewritten to avoid forming 1/b.
  return params.beta * (x + k * params.alpha) / ((k + 1.0) * (1.0 + params.alpha * params.beta));
}

double weight(const OperatorParams& params, double x, std::size_t i) {
  if (!(x >= 0.0)) throw DomainError("weight: x must be >= 0, got " + std::to_string(x));
  if (x == 0.0) return i == 0 ? 1.0 : 0.0;
  const double k = static_cast<double>(i);
  if (params.alpha == 0.0) {
    return boost::math::pdf(boost::math::poisson_distribution<double>(params.beta * x), k);
  }
  // Negative binomial with r = x/alpha successes and success probability
  // 1/(1 + alpha beta); i counts failures.
  const double r = x / params.alpha;
  const double p = 1.0 / (1.0 + params.alpha * params.beta);
  return boost::math::pdf(boost::math::negative_binomial_distribution<double>(r, p), k);
}

namespace {

std::size_t mode_index(const OperatorParams& params, double x) {
  // w(i+1) >= w(i) iff i <= beta x - 1 - alpha beta.
  const double m = std::floor(params.beta * x - params.alpha * params.beta);
  return m > 0.0 ? static_cast<std::size_t>(m) : 0;
}

}  // namespace

WeightSequence weight_sequence(const OperatorParams& params, double x, const TruncationPolicy& policy) {
  params.validate();
  policy.validate();
  if (!(x >= 0.0)) throw DomainError("weight_sequence: x must be >= 0, got " + std::to_string(x));

  WeightSequence seq;
  if (x == 0.0) {
    seq.weights = {1.0};
    seq.mass = 1.0;
    return seq;
  }

  const std::size_t mode = mode_index(params, x);
  const double w_mode = weight(params, x, mode);
  if (!(w_mode > 0.0)) throw DomainError("weight_sequence: modal weight underflows");

  const double eps = std::numeric_limits<double>::epsilon();
  std::size_t terms = 1;

  // Below the mode the step factors 1/ratio shrink as the index decreases,
  // so the first factor bounds the geometric remainder.
  std::vector<double> lower;
  double w = w_mode;
  for (std::size_t i = mode; i > 0; --i) {
    w /= weight_ratio(params, x, i - 1);
    lower.push_back(w);
    if (++terms > policy.max_terms) {
      throw TruncationFailure("weight_sequence: max_terms reached below the mode", 0.0, terms - 1);
    }
    if (i - 1 == 0) break;
    const double q = 1.0 / weight_ratio(params, x, i - 2);
    if (q < 1.0 && w * q / (1.0 - q) <= 1e-3 * policy.mass_tol) break;
  }

  seq.first = mode - lower.size();
  seq.weights.reserve(lower.size() + 64);
  seq.weights.assign(lower.rbegin(), lower.rend());
  seq.weights.push_back(w_mode);

  CompensatedSum sum;
  for (double v : seq.weights) sum.add(v);

  // Above the mode the ratios decrease towards alpha beta / (1 + alpha beta).
  const double limit_ratio = params.alpha * params.beta / (1.0 + params.alpha * params.beta);
  w = w_mode;
  std::size_t i = mode;
  std::size_t guard_left = policy.tail_guard;
  bool criterion_met = false;
  while (true) {
    if (!criterion_met) {
      if (sum.value() >= 1.0 - policy.mass_tol) {
        criterion_met = true;
      } else {
        const double q = std::max(weight_ratio(params, x, i), limit_ratio);
        // Remaining mass is below rounding of the accumulated sum.
        if (q < 1.0 && w * q / (1.0 - q) < eps * sum.value()) criterion_met = true;
      }
    }
    if (criterion_met) {
      if (guard_left == 0) break;
      --guard_left;
    }
    if (terms >= policy.max_terms) {
      if (criterion_met) break;
      throw TruncationFailure("weight_sequence: max_terms reached before the mass criterion", sum.value(), terms);
    }
    w *= weight_ratio(params, x, i);
    ++i;
    ++terms;
    seq.weights.push_back(w);
    sum.add(w);
  }
  seq.mass = sum.value();
  return seq;
}

}  // namespace szk
