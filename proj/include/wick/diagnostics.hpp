// Copyright 2026 The wickcalc Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef WICK_DIAGNOSTICS_HPP
#define WICK_DIAGNOSTICS_HPP

#include <cstdint>
#include <vector>

#include "wick/serialization.hpp"

namespace wick {

// Seeded batch of zero-divisor probes on random nonzero pairs. Each trial
// draws dim in [1, max_dim] and degree cap in [0, max_degree], real Gaussian
// coefficients, and also checks lowest(a◇b) == lowest(a)◇lowest(b).
struct ProbeSuiteResult {
  std::uint64_t trials = 0;
  std::uint64_t zero_products_found = 0;
  std::uint64_t lowest_part_mismatches = 0;
  std::uint64_t max_product_terms = 0;
  std::uint64_t seed = 0;
};
ProbeSuiteResult probe_suite(std::size_t max_dim, int max_degree, std::uint64_t trials, std::uint64_t seed);

// CCR, commuting-operator, quantum-decomposition and duality checks, first
// exhaustively over every basis term of degree < max_degree, then on
// random_trials dyadic expansions.
struct CcrSuiteResult {
  std::uint64_t basis_terms = 0;
  std::uint64_t random_trials = 0;
  std::uint64_t commutator_checks = 0;
  std::uint64_t commutator_failures = 0;
  std::uint64_t commuting_failures = 0;
  std::uint64_t decomposition_checks = 0;
  std::uint64_t decomposition_failures = 0;
  double duality_max_rel_error = 0.0;
};
CcrSuiteResult ccr_suite(std::size_t dim, int max_degree, std::uint64_t random_trials, std::uint64_t seed);

// Discrete Itô isometry for the integrand fᵢ = B_{tᵢ}, for M doubling from
// min_cells to max_cells.
struct HsDemoRow {
  std::size_t cells = 0;
  double dt = 0.0;
  double integral_second_moment = 0.0;
  double isometry_rhs = 0.0;
  double exact_sum = 0.0;  // Σ_{k<M} k·dt²
  double continuum = 0.0;  // T²/2
  double mean = 0.0;
};
std::vector<HsDemoRow> hs_demo(double horizon, std::size_t min_cells, std::size_t max_cells);

nlohmann::json to_json(const ProbeSuiteResult &r);
nlohmann::json to_json(const CcrSuiteResult &r);
nlohmann::json to_json(const std::vector<HsDemoRow> &rows);

}  // namespace wick

#endif  // WICK_DIAGNOSTICS_HPP
