#pragma once

#include <cstddef>
#include <vector>

namespace szk {

/// Gauss–Legendre rule with `order` nodes; exact for polynomials of degree
/// at most 2 * order - 1.
class QuadratureRule {
 public:
  explicit QuadratureRule(std::size_t order = 8);

  std::size_t order() const noexcept { return nodes_.size(); }
  /// Nodes on [-1, 1], ascending.
  const std::vector<double>& nodes() const noexcept { return nodes_; }
  const std::vector<double>& weights() const noexcept { return weights_; }

  /// Integral of f over [lo, lo + width].
  template <typename F>
  double integrate(F&& f, double lo, double width) const {
    const double half = 0.5 * width;
    double acc = 0.0;
    for (std::size_t k = 0; k < nodes_.size(); ++k) acc += weights_[k] * f(lo + half * (1.0 + nodes_[k]));
    return half * acc;
  }

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

}  // namespace szk
