// Copyright 2026 The wickcalc Authors
// SPDX-License-Identifier: Apache-2.0

#include "wick/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "wick/ccr.hpp"
#include "wick/error.hpp"
#include "wick/operational.hpp"
#include "wick/sampling.hpp"

namespace wick {

using nlohmann::json;

namespace {

// Every multi-index over dim dimensions with degree < limit.
std::vector<MultiIndex> basis_below(std::size_t dim, int limit) {
  std::vector<MultiIndex> out;
  std::vector<std::uint32_t> exps(dim, 0);
  auto walk = [&](auto &&self, std::size_t d, int remaining) -> void {
    if (d == dim) {
      out.push_back(MultiIndex::from_dense(exps));
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      exps[d] = static_cast<std::uint32_t>(e);
      self(self, d + 1, remaining - e);
    }
    exps[d] = 0;
  };
  if (limit > 0) walk(walk, 0, limit - 1);
  std::sort(out.begin(), out.end());
  return out;
}

void check_operator_laws(const ChaosExpansion &a, CcrSuiteResult &r) {
  for (std::uint32_t i = 0; i < a.dim(); ++i) {
    for (std::uint32_t j = 0; j < a.dim(); ++j) {
      ++r.commutator_checks;
      const ChaosExpansion expected = i == j ? a : ChaosExpansion(a.dim(), a.max_degree());
      if (!(ccr_commutator(i, j, a) == expected)) ++r.commutator_failures;
      if (!(annihilate(i, annihilate(j, a)) == annihilate(j, annihilate(i, a)))) ++r.commuting_failures;
      if (!(create(i, create(j, a)) == create(j, create(i, a)))) ++r.commuting_failures;
    }
    ++r.decomposition_checks;
    if (!(multiply_coordinate(i, a) == annihilate(i, a) + create(i, a))) ++r.decomposition_failures;
  }
}

}  // namespace

ProbeSuiteResult probe_suite(std::size_t max_dim, int max_degree, std::uint64_t trials, std::uint64_t seed) {
  if (max_dim == 0 || max_degree < 0 || 2 * max_degree > kMaxDegree)
    throw Error(ErrorCode::invalid_argument, "probe_suite needs max_dim >= 1 and 0 <= max_degree <= 10");
  ProbeSuiteResult result;
  result.seed = seed;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> dim_dist(1, max_dim);
  std::uniform_int_distribution<int> degree_dist(0, max_degree);
  for (std::uint64_t t = 0; t < trials; ++t) {
    RandomExpansionSpec spec;
    spec.dim = dim_dist(rng);
    spec.max_degree = degree_dist(rng);
    spec.max_terms = 12;
    const ChaosExpansion a = random_expansion(spec, rng);
    spec.max_degree = degree_dist(rng);
    const ChaosExpansion b = random_expansion(spec, rng);
    const ProbeReport report = zero_divisor_probe(a, b);
    ++result.trials;
    if (report.product_is_zero) ++result.zero_products_found;
    result.max_product_terms = std::max<std::uint64_t>(result.max_product_terms, report.product_terms);
    const ChaosExpansion lowest_of_product = lowest_part(wick_product(a, b, ProductMode::exact));
    const ChaosExpansion product_of_lowest = wick_product(lowest_part(a), lowest_part(b), ProductMode::exact);
    if (!(lowest_of_product == product_of_lowest)) ++result.lowest_part_mismatches;
  }
  return result;
}

CcrSuiteResult ccr_suite(std::size_t dim, int max_degree, std::uint64_t random_trials, std::uint64_t seed) {
  if (dim == 0 || max_degree < 1) throw Error(ErrorCode::invalid_argument, "ccr_suite needs dim >= 1, degree >= 1");
  CcrSuiteResult r;
  for (const MultiIndex &alpha : basis_below(dim, max_degree)) {
    ChaosExpansion a(dim, max_degree);
    a.add(alpha, 1.0);
    ++r.basis_terms;
    check_operator_laws(a, r);
  }
  std::mt19937_64 rng(seed);
  RandomExpansionSpec spec;
  spec.dim = dim;
  spec.max_degree = max_degree;
  spec.term_degree = max_degree - 1;
  spec.max_terms = 10;
  spec.kind = CoefficientKind::dyadic;
  for (std::uint64_t t = 0; t < random_trials; ++t) {
    const ChaosExpansion a = random_expansion(spec, rng);
    ++r.random_trials;
    check_operator_laws(a, r);
    // ⟨⟨xᵢ·y, φ⟩⟩ = ⟨⟨xᵢ, y·φ⟩⟩ with Gaussian φ.
    RandomExpansionSpec phi_spec = spec;
    phi_spec.kind = CoefficientKind::gaussian_real;
    const ChaosExpansion phi = random_expansion(phi_spec, rng);
    for (std::uint32_t i = 0; i < dim; ++i) {
      const Complex left = pairing(multiply_coordinate(i, a), phi);
      const ChaosExpansion yphi = pointwise_product(a, phi);
      const Complex right = pairing(coordinate(dim, yphi.max_degree(), i), yphi);
      r.duality_max_rel_error = std::max(r.duality_max_rel_error, std::abs(left - right) / (1.0 + std::abs(left)));
    }
  }
  return r;
}

std::vector<HsDemoRow> hs_demo(double horizon, std::size_t min_cells, std::size_t max_cells) {
  if (min_cells == 0 || max_cells < min_cells)
    throw Error(ErrorCode::invalid_argument, "hs_demo needs 1 <= min_cells <= max_cells");
  std::vector<HsDemoRow> rows;
  for (std::size_t m = min_cells; m <= max_cells; m *= 2) {
    const TimeGrid grid(horizon, m);
    std::vector<ChaosExpansion> integrand;
    double rhs = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      integrand.push_back(brownian(grid, grid.time(i), 2));
      rhs += l2_norm_sq(integrand.back()) * grid.dt();
    }
    const ChaosExpansion integral = hs_integral(grid, integrand);
    HsDemoRow row;
    row.cells = m;
    row.dt = grid.dt();
    row.integral_second_moment = l2_norm_sq(integral);
    row.isometry_rhs = rhs;
    for (std::size_t k = 0; k < m; ++k) row.exact_sum += static_cast<double>(k) * grid.dt() * grid.dt();
    row.continuum = 0.5 * horizon * horizon;
    row.mean = integral.constant_term().real();
    rows.push_back(row);
  }
  return rows;
}

json to_json(const ProbeSuiteResult &r) {
  return {{"trials", r.trials},
          {"zero_products_found", r.zero_products_found},
          {"lowest_part_mismatches", r.lowest_part_mismatches},
          {"max_product_terms", r.max_product_terms},
          {"seed", r.seed}};
}

json to_json(const CcrSuiteResult &r) {
  return {{"basis_terms", r.basis_terms},
          {"random_trials", r.random_trials},
          {"commutator_checks", r.commutator_checks},
          {"commutator_failures", r.commutator_failures},
          {"commuting_failures", r.commuting_failures},
          {"decomposition_checks", r.decomposition_checks},
          {"decomposition_failures", r.decomposition_failures},
          {"duality_max_rel_error", r.duality_max_rel_error}};
}

json to_json(const std::vector<HsDemoRow> &rows) {
  json out = json::array();
  for (const HsDemoRow &r : rows)
    out.push_back({{"M", r.cells},
                   {"dt", r.dt},
                   {"integral_second_moment", r.integral_second_moment},
                   {"isometry_rhs", r.isometry_rhs},
                   {"exact_sum", r.exact_sum},
                   {"continuum", r.continuum},
                   {"mean", r.mean}});
  return out;
}

}  // namespace wick
