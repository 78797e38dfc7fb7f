// Copyright 2026 The wickcalc Authors
// SPDX-License-Identifier: Apache-2.0

#include "wick/sampling.hpp"

#include <vector>

#include "wick/error.hpp"

namespace wick {

ChaosExpansion random_expansion(const RandomExpansionSpec &spec, std::mt19937_64 &rng) {
  const int term_degree = spec.term_degree < 0 ? spec.max_degree : spec.term_degree;
  const std::size_t active = spec.active_dims == 0 ? spec.dim : spec.active_dims;
  if (term_degree > spec.max_degree || active > spec.dim || spec.max_terms == 0)
    throw Error(ErrorCode::invalid_argument, "inconsistent random expansion spec");

  ChaosExpansion out(spec.dim, spec.max_degree);
  std::uniform_int_distribution<std::size_t> term_count(1, spec.max_terms);
  std::uniform_int_distribution<int> degree_dist(0, term_degree);
  std::uniform_int_distribution<std::size_t> dim_dist(0, active - 1);
  std::uniform_int_distribution<int> dyadic(-8, 7);
  std::normal_distribution<double> normal;

  auto draw_coefficient = [&]() -> Complex {
    switch (spec.kind) {
      case CoefficientKind::gaussian_real: return normal(rng);
      case CoefficientKind::gaussian_complex: {
        const double re = normal(rng);
        return {re, normal(rng)};
      }
      case CoefficientKind::dyadic: {
        const int k = dyadic(rng);
        return (k >= 0 ? k + 1 : k) / 4.0;
      }
    }
    return 1.0;
  };

  const std::size_t wanted = term_count(rng);
  std::vector<std::uint32_t> exponents(spec.dim);
  // A bounded number of draws; small index spaces may yield fewer terms.
  for (std::size_t attempt = 0; out.size() < wanted && attempt < 8 * wanted; ++attempt) {
    std::fill(exponents.begin(), exponents.end(), 0);
    const int d = degree_dist(rng);
    for (int u = 0; u < d; ++u) ++exponents[dim_dist(rng)];
    const MultiIndex alpha = MultiIndex::from_dense(exponents);
    if (out.terms().count(alpha)) continue;
    out.add(alpha, draw_coefficient());
  }
  return out;
}

}  // namespace wick
