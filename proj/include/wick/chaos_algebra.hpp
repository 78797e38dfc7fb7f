// Copyright 2026 The wickcalc Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef WICK_CHAOS_ALGEBRA_HPP
#define WICK_CHAOS_ALGEBRA_HPP

#include <optional>

#include "wick/chaos_expansion.hpp"

namespace wick {

// exact: the result keeps every term (max_degree = a.D + b.D, must be <= 20).
// capped: arithmetic in the degree-min(a.D, b.D) quotient ring.
enum class ProductMode { exact, capped };

enum class KernelSign { plus, minus };

// Invertibility threshold on |a_∅|.
inline constexpr double kInvertibilityThreshold = 1e-12;

ChaosExpansion wick_unit(std::size_t dim, int max_degree);

// Coefficient convolution: (a◇b)_γ = Σ_{α+β=γ} a_α b_β, i.e. the chaos
// expansion whose S-transform is Sa·Sb.
ChaosExpansion wick_product(const ChaosExpansion &a, const ChaosExpansion &b, ProductMode mode);

// a^{◇k} with exact degree growth; k = 0 gives the unit.
ChaosExpansion wick_power(const ChaosExpansion &a, int k);

// e^{c₀}·Σ_{k<=D} (a−c₀)^{◇k}/k!, exact in the degree-D quotient.
ChaosExpansion wick_exp(const ChaosExpansion &a);

// Inverse in the degree-D quotient. Throws Error(non_invertible) when
// |a_∅| <= kInvertibilityThreshold.
ChaosExpansion wick_inverse(const ChaosExpansion &a);

// Homogeneous component of minimal degree. Throws Error(zero_expansion).
ChaosExpansion lowest_part(const ChaosExpansion &a);

ChaosExpansion truncate(const ChaosExpansion &a, int new_max_degree);

// Σ_α α!·|c_α|², the second moment under the Gaussian measure.
double l2_norm_sq(const ChaosExpansion &a);

// Truncation of S⁻¹(exp(±½Σηᵢ²)); coefficient Π_i (±½)^{kᵢ}/kᵢ! on Π xᵢ^{2kᵢ}.
ChaosExpansion gaussian_kernel(std::size_t dim, int max_degree, KernelSign sign);

// The white-noise delta functional, unit of the convolution product.
ChaosExpansion delta0(std::size_t dim, int max_degree);

// a∗b = T⁻¹(Ta·Tb), realized as a◇b◇gaussian_kernel(+) in the
// degree-min(a.D, b.D) quotient.
ChaosExpansion convolution(const ChaosExpansion &a, const ChaosExpansion &b);

enum class VanishingFactor { first, second, both };

struct ProbeReport {
  bool product_is_zero = false;
  int lowest_degree_a = -1;
  int lowest_degree_b = -1;
  std::optional<VanishingFactor> vanishing_factor;
  std::optional<MultiIndex> witness;
  Complex witness_coefficient{};
  // Terms in the exact-mode product.
  std::size_t product_terms = 0;
};

// Forms a◇b in exact mode and reports whether it vanishes. A nonzero product
// comes with a witness index, taken from the lowest homogeneous part: the
// sum of the leading (graded-lex last) indices of lowest(a) and lowest(b),
// whose coefficient is a single product of two nonzero scalars.
ProbeReport zero_divisor_probe(const ChaosExpansion &a, const ChaosExpansion &b);

}  // namespace wick

#endif  // WICK_CHAOS_ALGEBRA_HPP
