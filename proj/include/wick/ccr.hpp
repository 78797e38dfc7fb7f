// Copyright 2026 The wickcalc Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef WICK_CCR_HPP
#define WICK_CCR_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wick/chaos_expansion.hpp"
#include "wick/transforms.hpp"

namespace wick {

// Annihilation (Hida derivative along basis direction i):
// c·H_α ↦ αᵢ·c·H_{α−eᵢ}; on the S-transform side, ∂/∂ξᵢ.
ChaosExpansion annihilate(std::uint32_t i, const ChaosExpansion &a);

// Creation (adjoint of annihilate): c·H_α ↦ c·H_{α+eᵢ}; on the S-transform
// side, multiplication by ξᵢ. Terms pushed above max_degree are dropped.
ChaosExpansion create(std::uint32_t i, const ChaosExpansion &a);

// (∂ᵢ∂ⱼ* − ∂ⱼ*∂ᵢ)(a). Refuses inputs of degree max_degree, where creation
// would clip and corrupt the identity.
ChaosExpansion ccr_commutator(std::uint32_t i, std::uint32_t j, const ChaosExpansion &a);

// Chaos expansion of the pointwise product a(x)·b(x), from the per-dimension
// linearization Heₘ·Heₙ = Σ_k C(m,k)·C(n,k)·k!·He_{m+n−2k}. The result cap is
// max(a.D, b.D) + headroom; by default the headroom is the smallest one that
// keeps the product exact.
ChaosExpansion pointwise_product(const ChaosExpansion &a, const ChaosExpansion &b,
                                 std::optional<int> headroom = std::nullopt);

// xᵢ·a. Requires degree(a) < max_degree; equals annihilate(i,a) + create(i,a).
ChaosExpansion multiply_coordinate(std::uint32_t i, const ChaosExpansion &a);

// ⟨⟨a, b⟩⟩ = Σ_α α!·a_α·b_α (bilinear, no conjugation).
Complex pairing(const ChaosExpansion &a, const ChaosExpansion &b);

// Dense one-variable polynomial, index = power of x.
class Polynomial1D {
 public:
  Polynomial1D() = default;
  explicit Polynomial1D(std::vector<Complex> coefficients);

  const std::vector<Complex> &coefficients() const noexcept { return coefficients_; }
  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }
  Complex operator()(Complex x) const;

  Polynomial1D derivative() const;
  // (x − d/dx) f
  Polynomial1D raise() const;

  friend Polynomial1D operator+(const Polynomial1D &a, const Polynomial1D &b);
  friend Polynomial1D operator*(const Polynomial1D &a, const Polynomial1D &b);
  friend bool operator==(const Polynomial1D &, const Polynomial1D &) = default;

 private:
  std::vector<Complex> coefficients_;
};

// One-variable polynomial with exact 64-bit integer coefficients.
class IntegerPolynomial {
 public:
  IntegerPolynomial() = default;
  explicit IntegerPolynomial(std::vector<std::int64_t> coefficients);

  const std::vector<std::int64_t> &coefficients() const noexcept { return coefficients_; }
  int degree() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }
  double operator()(double x) const;
  Polynomial1D to_polynomial() const;

  // (x − d/dx) f in exact arithmetic; throws Error(internal) on overflow.
  IntegerPolynomial raise() const;

  // "x^3 - 3*x"
  std::string to_string() const;

  friend bool operator==(const IntegerPolynomial &, const IntegerPolynomial &) = default;

 private:
  std::vector<std::int64_t> coefficients_;
};

// (x − d/dx)ⁿ 1 applied symbolically, n <= 30: the n-th Hermite polynomial.
IntegerPolynomial hermite_generate(int n);

// Both sides of ∫{(x − d/dx)f}·g dμ₁ = ∫ f·(dg/dx) dμ₁ by quadrature. Requires
// rule.order() >= (deg f + deg g + 2)/2 + 1.
std::pair<Complex, Complex> adjointness_check(const Polynomial1D &f, const Polynomial1D &g,
                                              const QuadratureRule &rule);

// One-dimensional S-transform (S₁f)(ξ) = ∫ f(x + ξ) dμ₁(x) by quadrature.
Complex s1_transform(const Polynomial1D &f, double xi, const QuadratureRule &rule);

// Coefficients of ξ ↦ (S₁f)(ξ) from the Gaussian moments, exact up to rounding.
Polynomial1D s1_polynomial(const Polynomial1D &f);

}  // namespace wick

#endif  // WICK_CCR_HPP
