// Copyright 2026 The wickcalc Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef WICK_OPERATIONAL_HPP
#define WICK_OPERATIONAL_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "wick/chaos_expansion.hpp"

namespace wick {

// Uniform grid of M cells on [0, T]. Chaos dimension i is the orthonormal
// indicator eᵢ = 1_{[tᵢ, tᵢ₊₁)}/√dt, so ⟨1_{[0,t]}, eᵢ⟩ = √dt for i < t/dt.
// In these coordinates the continuum Hida derivative ∂_t over cell i is
// (1/√dt)·annihilate(i, ·).
class TimeGrid {
 public:
  TimeGrid(double horizon, std::size_t cells);

  double horizon() const noexcept { return horizon_; }
  std::size_t cells() const noexcept { return cells_; }
  double dt() const noexcept { return horizon_ / static_cast<double>(cells_); }
  double time(std::size_t k) const noexcept { return horizon_ * static_cast<double>(k) / static_cast<double>(cells_); }
  // k with t = k·dt; throws Error(unaligned_time) when t is off the grid.
  std::size_t index_of(double t) const;

 private:
  double horizon_;
  std::size_t cells_;
};

// B_t = Σ_{i < t/dt} √dt·xᵢ.
ChaosExpansion brownian(const TimeGrid &grid, double t, int max_degree);

// xᵢ = create(i, 1). Note (B_{tᵢ₊₁} − B_{tᵢ})/dt = xᵢ/√dt.
ChaosExpansion white_noise(const TimeGrid &grid, std::uint32_t i, int max_degree);

// Σᵢ √dt·create(i, fᵢ), cross-checked against Σᵢ √dt·(xᵢ◇fᵢ). Integrands must
// have degree < max_degree (Error(degree_too_high) rather than clipping).
ChaosExpansion hs_integral(const TimeGrid &grid, std::span<const ChaosExpansion> integrand);

// X with a◇X = b in the degree-D quotient; Error(non_invertible) if a_∅ ≈ 0.
ChaosExpansion wick_solve_linear(const ChaosExpansion &a, const ChaosExpansion &b);

enum class GbmMethod { closed_form, wick_euler };

// dX = X◇dB, X₀ = 1. closed_form: wick_exp(B_T); wick_euler:
// Xₖ₊₁ = Xₖ + √dt·(xₖ◇Xₖ) with capped products.
ChaosExpansion solve_gbm(const TimeGrid &grid, int max_degree, GbmMethod method);

struct MomentReport {
  double mean = 0.0;
  double second_moment = 0.0;
  double variance = 0.0;
  // NaN when no Monte Carlo samples were drawn.
  double mc_mean = 0.0;
  double mc_stderr = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

// Sample mean and standard error of evaluate(x) over standard normal vectors
// x of length dim. Samples are drawn in fixed chunks, each with its own
// generator keyed by (seed, chunk), so results do not depend on the worker
// count.
struct MonteCarloResult {
  double mean;
  double stderr_;
};
MonteCarloResult monte_carlo(std::size_t dim, std::uint64_t samples, std::uint64_t seed,
                             const std::function<double(std::span<const double>)> &evaluate);

// Exact moments from the coefficients plus an optional Monte Carlo estimate
// of the mean. Requires real coefficients (|imag| <= 1e-12).
MomentReport moments(const ChaosExpansion &a, std::uint64_t mc_samples, std::uint64_t seed);

// L² mass per chaos degree: mass[d] = Σ_{|α|=d} α!·|c_α|².
std::vector<double> degree_mass(const ChaosExpansion &a);

struct GbmReport {
  MomentReport moments;
  std::vector<double> degree_mass;
  // "full" when the expansion was materialized, "symmetric" when the
  // exchangeable closed forms were used instead.
  std::string representation;
  double term_count = 0.0;
};

// Number of chaos terms of solve_gbm's result.
double gbm_term_count(const TimeGrid &grid, int max_degree, GbmMethod method);

// Moments and per-degree masses of solve_gbm's result. Up to max_terms terms
// the expansion is built and measured directly; beyond that the result is
// described through its symmetry in the grid coordinates: the closed form is
// Σ_k T^{k/2}/k!·He_k(B_T/√T) and the Euler product is Σ_k dt^{k/2}·e_k(x),
// e_k the elementary symmetric polynomials. Monte Carlo draws are identical
// in both representations.
GbmReport gbm_report(const TimeGrid &grid, int max_degree, GbmMethod method, std::uint64_t mc_samples,
                     std::uint64_t seed, double max_terms = 250000.0);

}  // namespace wick

#endif  // WICK_OPERATIONAL_HPP
