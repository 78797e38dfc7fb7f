// Copyright 2026 The wickcalc Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef WICK_SAMPLING_HPP
#define WICK_SAMPLING_HPP

#include <random>

#include "wick/chaos_expansion.hpp"

namespace wick {

enum class CoefficientKind {
  gaussian_real,
  gaussian_complex,
  // Multiples of 1/4 in [-2, 2] \ {0}: products and sums of a few of them
  // stay exact in double precision.
  dyadic,
};

struct RandomExpansionSpec {
  std::size_t dim = 1;
  int max_degree = 3;
  // Terms are drawn with degree <= term_degree (defaults to max_degree).
  int term_degree = -1;
  // Only dimensions < active_dims are used (defaults to dim).
  std::size_t active_dims = 0;
  std::size_t max_terms = 8;
  CoefficientKind kind = CoefficientKind::gaussian_real;
};

// A nonzero random expansion with between 1 and max_terms distinct terms.
// Indices are drawn by picking a degree uniformly and scattering its units
// uniformly over the active dimensions.
ChaosExpansion random_expansion(const RandomExpansionSpec &spec, std::mt19937_64 &rng);

}  // namespace wick

#endif  // WICK_SAMPLING_HPP
