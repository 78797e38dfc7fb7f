// Copyright 2026 The wickcalc Authors
// SPDX-License-Identifier: Apache-2.0

#include "wick/operational.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "wick/ccr.hpp"
#include "wick/chaos_algebra.hpp"
#include "wick/error.hpp"
#include "wick/parallel.hpp"
#include "wick/transforms.hpp"

namespace wick {

namespace {

constexpr std::uint64_t kMonteCarloChunk = 4096;

double binomial(double n, int k) {
  double r = 1.0;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

}  // namespace

TimeGrid::TimeGrid(double horizon, std::size_t cells) : horizon_(horizon), cells_(cells) {
  if (!(horizon > 0.0) || !std::isfinite(horizon))
    throw Error(ErrorCode::invalid_argument, "time horizon must be positive", std::to_string(horizon));
  if (cells == 0) throw Error(ErrorCode::invalid_argument, "time grid needs at least one cell");
}

std::size_t TimeGrid::index_of(double t) const {
  const double k = std::round(t / dt());
  if (!(k >= 0.0) || k > static_cast<double>(cells_) || std::abs(k * dt() - t) > 1e-9 * horizon_)
    throw Error(ErrorCode::unaligned_time, "time is not a grid point", "t = " + std::to_string(t));
  return static_cast<std::size_t>(k);
}

ChaosExpansion brownian(const TimeGrid &grid, double t, int max_degree) {
  const std::size_t k = grid.index_of(t);
  ChaosExpansion out(grid.cells(), max_degree);
  if (max_degree < 1) return out;
  const double amplitude = std::sqrt(grid.dt());
  for (std::uint32_t i = 0; i < k; ++i) out.add(MultiIndex::basis(i), amplitude);
  return out;
}

ChaosExpansion white_noise(const TimeGrid &grid, std::uint32_t i, int max_degree) {
  if (i >= grid.cells())
    throw Error(ErrorCode::index_out_of_range, "white_noise cell index out of range", "i " + std::to_string(i));
  return create(i, wick_unit(grid.cells(), max_degree));
}

ChaosExpansion hs_integral(const TimeGrid &grid, std::span<const ChaosExpansion> integrand) {
  if (integrand.size() != grid.cells())
    throw Error(ErrorCode::dimension_mismatch, "hs_integral needs one integrand per cell",
                std::to_string(integrand.size()) + " vs " + std::to_string(grid.cells()));
  if (integrand.empty()) throw Error(ErrorCode::invalid_argument, "empty integrand");
  const int cap = integrand[0].max_degree();
  for (std::size_t i = 0; i < integrand.size(); ++i) {
    const ChaosExpansion &f = integrand[i];
    if (f.dim() != grid.cells() || f.max_degree() != cap)
      throw Error(ErrorCode::dimension_mismatch, "integrands must share dim M and degree cap",
                  "cell " + std::to_string(i));
    if (f.degree() >= cap)
      throw Error(ErrorCode::degree_too_high, "integrand degree reaches the cap; the integral would be clipped",
                  "cell " + std::to_string(i));
  }
  const double amplitude = std::sqrt(grid.dt());
  ChaosExpansion by_creation(grid.cells(), cap);
  ChaosExpansion by_wick(grid.cells(), cap);
  for (std::uint32_t i = 0; i < integrand.size(); ++i) {
    by_creation += amplitude * create(i, integrand[i]);
    by_wick += amplitude * wick_product(white_noise(grid, i, cap), integrand[i], ProductMode::capped);
  }
  if (!(by_creation == by_wick))
    throw Error(ErrorCode::internal, "creation and Wick-product routes of the Skorohod integral disagree");
  return by_creation;
}

ChaosExpansion wick_solve_linear(const ChaosExpansion &a, const ChaosExpansion &b) {
  return wick_product(wick_inverse(a), b, ProductMode::capped);
}

ChaosExpansion solve_gbm(const TimeGrid &grid, int max_degree, GbmMethod method) {
  if (max_degree < 1) throw Error(ErrorCode::invalid_argument, "solve_gbm needs degree >= 1");
  if (method == GbmMethod::closed_form) return wick_exp(brownian(grid, grid.horizon(), max_degree));
  const double amplitude = std::sqrt(grid.dt());
  ChaosExpansion x = wick_unit(grid.cells(), max_degree);
  for (std::uint32_t k = 0; k < grid.cells(); ++k)
    x += amplitude * wick_product(white_noise(grid, k, max_degree), x, ProductMode::capped);
  return x;
}

MonteCarloResult monte_carlo(std::size_t dim, std::uint64_t samples, std::uint64_t seed,
                             const std::function<double(std::span<const double>)> &evaluate) {
  if (samples == 0) return {std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::quiet_NaN()};
  const std::uint64_t chunks = (samples + kMonteCarloChunk - 1) / kMonteCarloChunk;
  struct Partial {
    double count = 0.0, mean = 0.0, m2 = 0.0;
  };
  std::vector<Partial> partial(chunks);
  parallel_for(chunks, [&](std::size_t c) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(c >> 32)};
    std::mt19937_64 gen(seq);
    std::normal_distribution<double> normal;
    std::vector<double> x(dim);
    const std::uint64_t begin = c * kMonteCarloChunk;
    const std::uint64_t end = std::min(samples, begin + kMonteCarloChunk);
    Partial p;
    for (std::uint64_t s = begin; s < end; ++s) {
      for (double &v : x) v = normal(gen);
      const double value = evaluate(x);
      p.count += 1.0;
      const double delta = value - p.mean;
      p.mean += delta / p.count;
      p.m2 += delta * (value - p.mean);
    }
    partial[c] = p;
  });
  // Chan et al. pairwise combination, in chunk order.
  Partial total;
  for (const Partial &p : partial) {
    if (p.count == 0.0) continue;
    const double count = total.count + p.count;
    const double delta = p.mean - total.mean;
    total.mean += delta * p.count / count;
    total.m2 += p.m2 + delta * delta * total.count * p.count / count;
    total.count = count;
  }
  const double variance = total.count > 1.0 ? total.m2 / (total.count - 1.0) : 0.0;
  return {total.mean, std::sqrt(variance / total.count)};
}

namespace {
MomentReport exact_moments(double mean, double second_moment, std::uint64_t samples, std::uint64_t seed) {
  MomentReport report;
  report.mean = mean;
  report.second_moment = second_moment;
  report.variance = second_moment - mean * mean;
  report.samples = samples;
  report.seed = seed;
  return report;
}
}  // namespace

MomentReport moments(const ChaosExpansion &a, std::uint64_t mc_samples, std::uint64_t seed) {
  for (const auto &[alpha, c] : a.terms())
    if (std::abs(c.imag()) > 1e-12)
      throw Error(ErrorCode::complex_coefficients, "moments need real coefficients", alpha.to_string());
  MomentReport report = exact_moments(a.constant_term().real(), l2_norm_sq(a), mc_samples, seed);
  const MonteCarloResult mc =
      monte_carlo(a.dim(), mc_samples, seed, [&a](std::span<const double> x) { return chaos_eval_real(a, x); });
  report.mc_mean = mc.mean;
  report.mc_stderr = mc.stderr_;
  return report;
}

std::vector<double> degree_mass(const ChaosExpansion &a) {
  std::vector<double> mass(static_cast<std::size_t>(a.max_degree()) + 1, 0.0);
  for (const auto &[alpha, c] : a.terms())
    mass[static_cast<std::size_t>(alpha.degree())] += static_cast<double>(alpha.factorial()) * std::norm(c);
  return mass;
}

double gbm_term_count(const TimeGrid &grid, int max_degree, GbmMethod method) {
  const double m = static_cast<double>(grid.cells());
  if (method == GbmMethod::closed_form) return binomial(m + max_degree, max_degree);
  double total = 0.0;
  for (int k = 0; k <= max_degree && k <= static_cast<int>(grid.cells()); ++k) total += binomial(m, k);
  return total;
}

GbmReport gbm_report(const TimeGrid &grid, int max_degree, GbmMethod method, std::uint64_t mc_samples,
                     std::uint64_t seed, double max_terms) {
  GbmReport report;
  report.term_count = gbm_term_count(grid, max_degree, method);
  if (report.term_count <= max_terms) {
    const ChaosExpansion x = solve_gbm(grid, max_degree, method);
    report.representation = "full";
    report.moments = moments(x, mc_samples, seed);
    report.degree_mass = degree_mass(x);
    return report;
  }
  if (max_degree < 1) throw Error(ErrorCode::invalid_argument, "solve_gbm needs degree >= 1");

  report.representation = "symmetric";
  const double horizon = grid.horizon();
  const double dt = grid.dt();
  const std::size_t cells = grid.cells();
  report.degree_mass.assign(static_cast<std::size_t>(max_degree) + 1, 0.0);
  double second = 0.0;
  for (int k = 0; k <= max_degree; ++k) {
    double mass = 1.0;
    if (method == GbmMethod::closed_form) {
      for (int j = 1; j <= k; ++j) mass *= horizon / j;
    } else {
      mass = binomial(static_cast<double>(cells), k) * std::pow(dt, k);
    }
    report.degree_mass[static_cast<std::size_t>(k)] = mass;
    second += mass;
  }
  report.moments = exact_moments(1.0, second, mc_samples, seed);

  std::function<double(std::span<const double>)> evaluate;
  if (method == GbmMethod::closed_form) {
    evaluate = [=](std::span<const double> x) {
      double total = 0.0;
      for (double v : x) total += v;
      const double y = total / std::sqrt(static_cast<double>(cells));
      // Σ_k T^{k/2}/k!·He_k(y)
      double h0 = 1.0, h1 = y, scale = 1.0, value = 1.0;
      const double root = std::sqrt(horizon);
      for (int k = 1; k <= max_degree; ++k) {
        scale *= root / k;
        value += scale * h1;
        const double h2 = y * h1 - k * h0;
        h0 = h1;
        h1 = h2;
      }
      return value;
    };
  } else {
    evaluate = [=](std::span<const double> x) {
      std::vector<double> e(static_cast<std::size_t>(max_degree) + 1, 0.0);
      e[0] = 1.0;
      for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t k = std::min<std::size_t>(i + 1, max_degree); k >= 1; --k) e[k] += x[i] * e[k - 1];
      double value = 0.0, scale = 1.0;
      const double root = std::sqrt(dt);
      for (int k = 0; k <= max_degree; ++k) {
        value += scale * e[static_cast<std::size_t>(k)];
        scale *= root;
      }
      return value;
    };
  }
  const MonteCarloResult mc = monte_carlo(cells, mc_samples, seed, evaluate);
  report.moments.mc_mean = mc.mean;
  report.moments.mc_stderr = mc.stderr_;
  return report;
}

}  // namespace wick
