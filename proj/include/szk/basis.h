#pragma once

#include <cstddef>
#include <vector>

namespace szk {

/// Parameters of the Stancu-type Szász–Mirakjan–Kantorovich operator.
///
/// `alpha` is the Jain–Pethe shape parameter (alpha = 0 is the Poisson
/// limit), `phi`/`psi` are the Stancu shift and scale, `beta` is the value
/// of the sequence beta_n at which the operator is evaluated.
struct OperatorParams {
  double alpha = 0.0;
  double phi = 0.0;
  double psi = 0.0;
  double beta = 1.0;

  /// Throws DomainError unless alpha >= 0, beta >= 1 and 0 <= phi <= psi
  /// (phi = psi = 0 allowed).
  void validate() const;

  /// alpha * beta <= 1, the regime in which the asymptotic results apply.
  bool asymptotic_regime() const noexcept;

  /// Width-scale of the integration cells, beta + psi.
  double cell_scale() const noexcept { return beta + psi; }
};

/// Controls where the infinite weight series is cut.
struct TruncationPolicy {
  double mass_tol = 1e-12;
  std::size_t max_terms = 1'000'000;
  std::size_t tail_guard = 8;

  void validate() const;
};

/// prod_{j=1..i} (x + (j-1) alpha); the empty product (i = 0) is 1.
double rising_factorial(double x, std::size_t i, double alpha);

/// The i-th basis weight
///   (1 + beta alpha)^(-x/alpha) (alpha + 1/beta)^(-i) x^(i,-alpha) / i!
/// with the Poisson weight e^(-beta x) (beta x)^i / i! at alpha = 0.
/// Throws DomainError for x < 0.
double weight(const OperatorParams& params, double x, std::size_t i);

/// w(i+1) / w(i) = (x + i alpha) / ((i + 1)(alpha + 1/beta)).
double weight_ratio(const OperatorParams& params, double x, std::size_t i);

/// A contiguous run of weights w(first), w(first+1), ... covering all but a
/// negligible part of the unit mass.
struct WeightSequence {
  std::size_t first = 0;
  std::vector<double> weights;
  /// Sum of the retained weights.
  double mass = 0.0;

  std::size_t size() const noexcept { return weights.size(); }
  std::size_t index(std::size_t k) const noexcept { return first + k; }
};

/// Weights around the mode, truncated once the retained mass reaches
/// 1 - mass_tol (plus tail_guard further terms on the upper side).
/// Throws TruncationFailure if max_terms is reached first.
WeightSequence weight_sequence(const OperatorParams& params, double x,
                               const TruncationPolicy& policy = {});

}  // namespace szk
