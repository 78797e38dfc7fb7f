// Copyright 2026 The wickcalc Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef WICK_GROWTH_HPP
#define WICK_GROWTH_HPP

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wick/chaos_expansion.hpp"

namespace wick {

// Coordinates ξₖ of a test function in the Hermite-function basis of L²(ℝ).
using HermiteCoordVector = std::vector<double>;

// ‖Hᵖξ‖₂ for the harmonic-oscillator Hamiltonian with eigenvalues 2k+2.
double osc_norm(std::span<const double> xi, unsigned p);

// A complex functional on test functions given by Hermite coordinates.
// Chaos-backed functionals evaluate the S-transform of an expansion on the
// first dim coordinates (basis direction i = i-th Hermite function).
class Functional {
 public:
  enum class Kind { chaos_backed, closed_form };

  static Functional from_expansion(ChaosExpansion a);
  // One of closed_form_names(); throws Error(invalid_argument) otherwise.
  static Functional closed_form(const std::string &name);
  static const std::vector<std::string> &closed_form_names();

  Kind kind() const noexcept { return kind_; }
  const std::string &name() const noexcept { return name_; }
  Complex operator()(std::span<const Complex> xi) const { return eval_(xi); }

 private:
  Functional(Kind kind, std::string name, std::function<Complex(std::span<const Complex>)> eval)
      : kind_(kind), name_(std::move(name)), eval_(std::move(eval)) {}

  Kind kind_;
  std::string name_;
  std::function<Complex(std::span<const Complex>)> eval_;
};

enum class GrowthVerdict { bounded, super_quadratic };

struct GrowthReport {
  double fitted_log_K = 0.0;
  double fitted_a = 0.0;
  unsigned p_used = 0;
  // ‖Hᵖξ‖² used to scale r².
  double norm_sq = 0.0;
  // Largest rise of the fit residual across the top quartile of radii.
  double max_residual = 0.0;
  double tolerance = 0.5;
  // (|z|, max over phases of log|F(zξ)|)
  std::vector<std::pair<double, double>> samples;
  GrowthVerdict verdict = GrowthVerdict::bounded;
  // Radius at which F stopped producing finite values.
  std::optional<double> overflow_radius;
};

struct GrowthOptions {
  int phases = 32;
  double tolerance = 0.5;
};

// 0.5·2ᵏ for k = 0..5.
std::vector<double> default_radii();

// Samples M_r = max_θ log|F(r·e^{iθ}·ξ)| and fits M_r <= log K + a·r²·‖Hᵖξ‖².
// The slope comes from least squares on (r²‖Hᵖξ‖², M_r), clipped at 0; log K
// is then the smallest constant for which the bound holds on every sample.
// The verdict is super_quadratic when the residual rises by more than the
// tolerance over the top quartile of radii, or when evaluation overflows.
// This reports consistency with the growth bound on the sampled range only.
GrowthReport ray_growth_fit(const Functional &f, std::span<const double> xi, unsigned p,
                            std::span<const double> radii, const GrowthOptions &options = {});

// Whether z ↦ F(zξ + η) behaves as an entire function. Chaos-backed
// functionals are polynomials and pass structurally. Closed forms must pass
// a Cauchy–Riemann residual check on a 16×16 grid over |z| <= 2 and a Taylor
// reconstruction check (Cauchy coefficients from the circle |z| = 2 must
// reproduce the values on |z| <= 1), both at 1e-6.
bool entirety_check(const Functional &f, std::span<const double> xi, std::span<const double> eta);

}  // namespace wick

#endif  // WICK_GROWTH_HPP
