// Copyright 2026 The wickcalc Authors
// SPDX-License-Identifier: Apache-2.0

#include "wick/growth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "wick/error.hpp"
#include "wick/transforms.hpp"

namespace wick {

namespace {

// log|F| floor for exact zeros.
const double kLogFloor = std::log(std::numeric_limits<double>::min());

Complex first_coord(std::span<const Complex> xi) { return xi.empty() ? Complex{} : xi[0]; }

}  // namespace

double osc_norm(std::span<const double> xi, unsigned p) {
  double sum = 0.0;
  for (std::size_t k = 0; k < xi.size(); ++k) {
    const double eigen = std::pow(2.0 * static_cast<double>(k) + 2.0, static_cast<double>(p));
    sum += eigen * eigen * xi[k] * xi[k];
  }
  return std::sqrt(sum);
}

Functional Functional::from_expansion(ChaosExpansion a) {
  const std::size_t dim = a.dim();
  return Functional(Kind::chaos_backed, "chaos", [a = std::move(a), dim](std::span<const Complex> xi) {
    std::vector<Complex> coords(dim);
    std::copy_n(xi.begin(), std::min(dim, xi.size()), coords.begin());
    return s_transform_eval(a, coords);
  });
}

const std::vector<std::string> &Functional::closed_form_names() {
  static const std::vector<std::string> names = {"exp_linear", "exp_cubic", "abs_z", "gaussian_kernel_s"};
  return names;
}

Functional Functional::closed_form(const std::string &name) {
  if (name == "exp_linear")
    return Functional(Kind::closed_form, name, [](std::span<const Complex> xi) { return std::exp(first_coord(xi)); });
  if (name == "exp_cubic")
    return Functional(Kind::closed_form, name, [](std::span<const Complex> xi) {
      const Complex z = first_coord(xi);
      return std::exp(z * z * z);
    });
  if (name == "abs_z")
    return Functional(Kind::closed_form, name,
                      [](std::span<const Complex> xi) { return Complex(std::abs(first_coord(xi)), 0.0); });
  if (name == "gaussian_kernel_s")
    return Functional(Kind::closed_form, name, [](std::span<const Complex> xi) {
      Complex square{};
      for (const Complex &v : xi) square += v * v;
      return std::exp(0.5 * square);
    });
  throw Error(ErrorCode::invalid_argument, "unknown closed-form functional", name);
}

std::vector<double> default_radii() {
  std::vector<double> radii;
  for (int k = 0; k <= 5; ++k) radii.push_back(0.5 * std::ldexp(1.0, k));
  return radii;
}

GrowthReport ray_growth_fit(const Functional &f, std::span<const double> xi, unsigned p,
                            std::span<const double> radii, const GrowthOptions &options) {
  if (radii.empty()) throw Error(ErrorCode::invalid_argument, "ray_growth_fit needs at least one radius");
  for (std::size_t k = 0; k < radii.size(); ++k)
    if (!(radii[k] > 0.0) || (k > 0 && radii[k] <= radii[k - 1]))
      throw Error(ErrorCode::invalid_argument, "radii must be positive and strictly increasing",
                  "index " + std::to_string(k));
  if (options.phases < 1) throw Error(ErrorCode::invalid_argument, "phases must be positive");

  GrowthReport report;
  report.p_used = p;
  report.tolerance = options.tolerance;
  const double norm = osc_norm(xi, p);
  report.norm_sq = norm * norm;
  if (!(report.norm_sq > 0.0)) throw Error(ErrorCode::invalid_argument, "test function has zero norm");

  std::vector<Complex> point(xi.size());
  for (double r : radii) {
    double best = -std::numeric_limits<double>::infinity();
    bool finite = true;
    for (int j = 0; j < options.phases && finite; ++j) {
      const Complex z = std::polar(r, 2.0 * std::numbers::pi * j / options.phases);
      for (std::size_t k = 0; k < xi.size(); ++k) point[k] = z * xi[k];
      const Complex value = f(point);
      if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
        finite = false;
        break;
      }
      const double magnitude = std::abs(value);
      if (!std::isfinite(magnitude)) {
        finite = false;
        break;
      }
      best = std::max(best, magnitude > 0.0 ? std::log(magnitude) : kLogFloor);
    }
    if (!finite) {
      report.overflow_radius = r;
      break;
    }
    report.samples.emplace_back(r, best);
  }

  const std::size_t n = report.samples.size();
  if (n > 0) {
    std::vector<double> x(n), y(n);
    double mean_x = 0.0, mean_y = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      x[k] = report.samples[k].first * report.samples[k].first * report.norm_sq;
      y[k] = report.samples[k].second;
      mean_x += x[k];
      mean_y += y[k];
    }
    mean_x /= static_cast<double>(n);
    mean_y /= static_cast<double>(n);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      sxx += (x[k] - mean_x) * (x[k] - mean_x);
      sxy += (x[k] - mean_x) * (y[k] - mean_y);
    }
    const double slope = sxx > 0.0 ? sxy / sxx : 0.0;
    report.fitted_a = std::max(0.0, slope);
    const double intercept = mean_y - report.fitted_a * mean_x;

    double log_k = -std::numeric_limits<double>::infinity();
    std::vector<double> residual(n);
    for (std::size_t k = 0; k < n; ++k) {
      residual[k] = y[k] - (intercept + report.fitted_a * x[k]);
      log_k = std::max(log_k, y[k] - report.fitted_a * x[k]);
    }
    report.fitted_log_K = log_k;

    const std::size_t quartile = std::min(n, std::max<std::size_t>(2, (n + 3) / 4));
    const std::size_t start = n - quartile;
    double rise = 0.0;
    for (std::size_t k = start + 1; k < n; ++k) rise = std::max(rise, residual[k] - residual[start]);
    report.max_residual = rise;
  }
  const bool rising = report.max_residual > options.tolerance;
  report.verdict = (rising || report.overflow_radius) ? GrowthVerdict::super_quadratic : GrowthVerdict::bounded;
  return report;
}

bool entirety_check(const Functional &f, std::span<const double> xi, std::span<const double> eta) {
  if (f.kind() == Functional::Kind::chaos_backed) return true;
  if (xi.size() != eta.size())
    throw Error(ErrorCode::dimension_mismatch, "entirety_check: xi and eta differ in length");

  std::vector<Complex> point(xi.size());
  auto g = [&](Complex z) {
    for (std::size_t k = 0; k < xi.size(); ++k) point[k] = z * xi[k] + eta[k];
    return f(point);
  };
  auto finite = [](Complex v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); };

  constexpr int kGrid = 16;
  constexpr double kRadius = 2.0;
  constexpr double kStep = 1e-4;
  constexpr double kTolerance = 1e-6;
  std::vector<Complex> grid;
  for (int a = 0; a < kGrid; ++a)
    for (int b = 0; b < kGrid; ++b) {
      const Complex z(-kRadius + 2.0 * kRadius * (a + 0.5) / kGrid, -kRadius + 2.0 * kRadius * (b + 0.5) / kGrid);
      if (std::abs(z) <= kRadius) grid.push_back(z);
    }

  // Cauchy–Riemann: ∂g/∂x + i·∂g/∂y vanishes for holomorphic g.
  for (const Complex &z : grid) {
    const Complex gx = (g(z + kStep) - g(z - kStep)) / (2.0 * kStep);
    const Complex gy = (g(z + Complex(0.0, kStep)) - g(z - Complex(0.0, kStep))) / (2.0 * kStep);
    if (!finite(gx) || !finite(gy)) return false;
    const double residual = std::abs(gx + Complex(0.0, 1.0) * gy) / (1.0 + std::abs(gx) + std::abs(gy));
    if (residual > kTolerance) return false;
  }

  // Taylor reconstruction from Cauchy coefficients on |z| = 2.
  constexpr int kNodes = 128;
  constexpr int kTerms = 64;
  std::vector<Complex> circle(kNodes);
  for (int j = 0; j < kNodes; ++j) {
    circle[j] = g(std::polar(kRadius, 2.0 * std::numbers::pi * j / kNodes));
    if (!finite(circle[j])) return false;
  }
  std::vector<Complex> taylor(kTerms);
  for (int k = 0; k < kTerms; ++k) {
    Complex sum{};
    for (int j = 0; j < kNodes; ++j) sum += circle[j] * std::polar(1.0, -2.0 * std::numbers::pi * k * j / kNodes);
    taylor[k] = sum / (static_cast<double>(kNodes) * std::pow(kRadius, k));
  }
  double scale = 1.0;
  std::vector<std::pair<Complex, Complex>> inner;
  for (const Complex &z : grid) {
    if (std::abs(z) > 1.0) continue;
    const Complex direct = g(z);
    scale = std::max(scale, std::abs(direct));
    Complex series{};
    for (int k = kTerms - 1; k >= 0; --k) series = series * z + taylor[k];
    inner.emplace_back(direct, series);
  }
  for (const auto &[direct, series] : inner)
    if (std::abs(direct - series) > kTolerance * scale) return false;
  return true;
}

}  // namespace wick
