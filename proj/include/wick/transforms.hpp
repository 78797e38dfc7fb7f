// Copyright 2026 The wickcalc Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef WICK_TRANSFORMS_HPP
#define WICK_TRANSFORMS_HPP

#include <functional>
#include <span>
#include <vector>

#include "wick/chaos_expansion.hpp"

namespace wick {

// Probabilists' Hermite polynomial Heₙ(x), n <= 30, via
// He₀ = 1, He₁ = x, Heₙ₊₁ = x·Heₙ − n·Heₙ₋₁.
Complex hermite_eval(int n, Complex x);

// Gauss–Hermite rule for the standard normal density e^{−x²/2}/√(2π).
// Construction checks that the weights sum to 1 and that every monomial up to
// degree 2Q−1 is integrated to its Gaussian moment.
class QuadratureRule {
 public:
  static constexpr int kMaxOrder = 128;

  explicit QuadratureRule(int order);

  int order() const noexcept { return static_cast<int>(nodes_.size()); }
  std::span<const double> nodes() const noexcept { return nodes_; }
  std::span<const double> weights() const noexcept { return weights_; }

  // Σ wₖ f(xₖ).
  template <typename F>
  auto integrate(F &&f) const {
    decltype(f(0.0)) sum{};
    for (std::size_t k = 0; k < nodes_.size(); ++k) sum += weights_[k] * f(nodes_[k]);
    return sum;
  }

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

// Pointwise value Σ_α c_α Π_i He_{αᵢ}(xᵢ) at complex x.
Complex chaos_eval(const ChaosExpansion &a, std::span<const Complex> x);
double chaos_eval_real(const ChaosExpansion &a, std::span<const double> x);

// (Sa)(ξ) = Σ_α c_α ξ^α.
Complex s_transform_eval(const ChaosExpansion &a, std::span<const Complex> xi);

// Tensor-product quadrature of ∫ a(x + ξ) dμ(x), for dim <= 3 and
// rule.order() >= max_degree + 4.
Complex s_transform_quadrature(const ChaosExpansion &a, std::span<const double> xi,
                               const QuadratureRule &rule);

// (Ta)(ξ) = exp(−½Σξᵢ²)·(Sa)(iξ).
Complex t_transform_eval(const ChaosExpansion &a, std::span<const Complex> xi);

// Tensor-product quadrature of ∫ a(x) e^{i⟨x,ξ⟩} dμ(x), for dim <= 3 and
// rule.order() >= max_degree + 8.
Complex t_transform_quadrature(const ChaosExpansion &a, std::span<const double> xi,
                               const QuadratureRule &rule);

// Recovers the expansion of total degree <= max_degree from values of its
// S-transform on the tensor grid {0, 1, ..., max_degree}^dim by solving the
// tensor Vandermonde system axis by axis. Used to check that S is faithful
// on the truncated space; (max_degree + 1)^dim must not exceed 65536.
ChaosExpansion s_transform_interpolate(std::size_t dim, int max_degree,
                                       const std::function<Complex(std::span<const Complex>)> &sample);

}  // namespace wick

#endif  // WICK_TRANSFORMS_HPP
