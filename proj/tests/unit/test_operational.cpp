// Copyright 2026 The wickcalc Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "wick/ccr.hpp"
#include "wick/chaos_algebra.hpp"
#include "wick/diagnostics.hpp"
#include "wick/error.hpp"
#include "wick/operational.hpp"
#include "wick/parallel.hpp"
#include "wick/sampling.hpp"

using namespace wick;

namespace {

const MultiIndex kOne{};

ErrorCode code_of(const std::function<void()> &f) {
  try {
    f();
  } catch (const Error &e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::internal;
}

}  // namespace

TEST(TimeGrid, Alignment) {
  const TimeGrid g(1.0, 8);
  EXPECT_EQ(g.dt(), 0.125);
  EXPECT_EQ(g.index_of(0.375), 3u);
  EXPECT_EQ(g.index_of(1.0), 8u);
  EXPECT_EQ(code_of([&] { g.index_of(0.3); }), ErrorCode::unaligned_time);
  EXPECT_EQ(code_of([&] { g.index_of(1.125); }), ErrorCode::unaligned_time);
  EXPECT_EQ(code_of([&] { g.index_of(-0.125); }), ErrorCode::unaligned_time);
  EXPECT_THROW(TimeGrid(0.0, 4), Error);
  EXPECT_THROW(TimeGrid(1.0, 0), Error);
  // Non-dyadic horizons still align within the grid tolerance.
  EXPECT_EQ(TimeGrid(0.3, 3).index_of(0.2), 2u);
}

TEST(Brownian, Examples) {
  const TimeGrid g(2.0, 8);
  EXPECT_TRUE(brownian(g, 0.0, 3).is_zero());
  for (std::size_t k = 0; k <= 8; ++k) {
    const ChaosExpansion b = brownian(g, g.time(k), 3);
    EXPECT_EQ(l2_norm_sq(b), g.time(k));
    EXPECT_EQ(b.dim(), 8u);
  }
  for (std::size_t s = 0; s <= 8; ++s)
    for (std::size_t t = 0; t <= 8; ++t)
      EXPECT_EQ(pairing(brownian(g, g.time(s), 2), brownian(g, g.time(t), 2)), Complex(g.time(std::min(s, t))));
}

TEST(WhiteNoise, Examples) {
  const TimeGrid g(1.0, 16);
  EXPECT_EQ(white_noise(g, 0, 3), coordinate(16, 3, 0));
  EXPECT_EQ(l2_norm_sq(white_noise(g, 5, 3)), 1.0);
  for (std::size_t k = 0; k < 16; ++k)
    EXPECT_EQ(brownian(g, g.time(k + 1), 3) - brownian(g, g.time(k), 3),
              std::sqrt(g.dt()) * white_noise(g, static_cast<std::uint32_t>(k), 3));
  EXPECT_EQ(code_of([&] { white_noise(g, 16, 3); }), ErrorCode::index_out_of_range);
}

TEST(HsIntegral, Examples) {
  const TimeGrid g(1.0, 16);
  const std::vector<ChaosExpansion> ones(16, wick_unit(16, 3));
  EXPECT_EQ(hs_integral(g, ones), brownian(g, 1.0, 3));
  const std::vector<ChaosExpansion> zeros(16, ChaosExpansion(16, 3));
  EXPECT_TRUE(hs_integral(g, zeros).is_zero());
}

TEST(HsIntegral, BrownianIntegrand) {
  for (std::size_t m : {4u, 16u, 64u}) {
    const TimeGrid g(1.0, m);
    std::vector<ChaosExpansion> f;
    for (std::size_t i = 0; i < m; ++i) f.push_back(brownian(g, g.time(i), 2));
    const ChaosExpansion integral = hs_integral(g, f);
    EXPECT_EQ(integral.constant_term(), Complex{});
    double exact = 0.0;
    for (std::size_t k = 0; k < m; ++k) exact += static_cast<double>(k) * g.dt() * g.dt();
    EXPECT_EQ(l2_norm_sq(integral), exact);
  }
}

TEST(HsIntegral, Errors) {
  const TimeGrid g(1.0, 4);
  const std::vector<ChaosExpansion> short_list(3, wick_unit(4, 2));
  EXPECT_EQ(code_of([&] { hs_integral(g, short_list); }), ErrorCode::dimension_mismatch);
  std::vector<ChaosExpansion> top(4, wick_unit(4, 2));
  top[2] = make_expansion(4, 2, {{MultiIndex::basis(0, 2), 1.0}});
  EXPECT_EQ(code_of([&] { hs_integral(g, top); }), ErrorCode::degree_too_high);
  std::vector<ChaosExpansion> mixed(4, wick_unit(4, 2));
  mixed[1] = wick_unit(4, 3);
  EXPECT_EQ(code_of([&] { hs_integral(g, mixed); }), ErrorCode::dimension_mismatch);
}

TEST(HsIntegral, ItoIsometryForAdaptedIntegrands) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> coef(-8, 8);
  for (std::size_t m : {4u, 16u}) {
    const TimeGrid g(1.0, m);
    for (int t = 0; t < 10; ++t) {
      std::vector<ChaosExpansion> f;
      for (std::size_t i = 0; i < m; ++i) {
        ChaosExpansion fi(m, 3);
        fi.add(kOne, coef(rng) / 4.0);
        for (std::uint32_t j = 0; j < i; ++j) {
          fi.add(MultiIndex::basis(j), coef(rng) / 4.0);
          if (j + 1 < i) fi.add(MultiIndex::from_entries({{j, 1}, {j + 1, 1}}), coef(rng) / 4.0);
        }
        f.push_back(std::move(fi));
      }
      double rhs = 0.0;
      for (const ChaosExpansion &fi : f) rhs += l2_norm_sq(fi) * g.dt();
      EXPECT_EQ(l2_norm_sq(hs_integral(g, f)), rhs);
    }
  }
}

TEST(SkorohodIdentity, CreateIsWhiteNoiseProduct) {
  std::mt19937_64 rng(2);
  const TimeGrid g(1.0, 6);
  for (int t = 0; t < 30; ++t) {
    RandomExpansionSpec spec;
    spec.dim = 6;
    spec.max_degree = 4;
    spec.term_degree = 3;
    const ChaosExpansion f = random_expansion(spec, rng);
    for (std::uint32_t i = 0; i < 6; ++i)
      EXPECT_EQ(create(i, f), wick_product(white_noise(g, i, 4), f, ProductMode::capped));
  }
}

TEST(WickSolveLinear, Examples) {
  std::mt19937_64 rng(3);
  RandomExpansionSpec spec;
  spec.dim = 2;
  spec.max_degree = 3;
  const ChaosExpansion b = random_expansion(spec, rng);
  EXPECT_EQ(wick_solve_linear(wick_unit(2, 3), b), b);
  const ChaosExpansion a = make_expansion(1, 3, {{kOne, 1.0}, {MultiIndex::basis(0), -1.0}});
  const ChaosExpansion x = wick_solve_linear(a, wick_unit(1, 3));
  EXPECT_EQ(x, make_expansion(1, 3,
                              {{kOne, 1.0},
                               {MultiIndex::basis(0), 1.0},
                               {MultiIndex::basis(0, 2), 1.0},
                               {MultiIndex::basis(0, 3), 1.0}}));
  EXPECT_TRUE((wick_product(a, x, ProductMode::capped) - wick_unit(1, 3)).is_zero());
  EXPECT_EQ(code_of([] { wick_solve_linear(coordinate(1, 3, 0), wick_unit(1, 3)); }), ErrorCode::non_invertible);
}

TEST(WickSolveLinear, ZeroResidualOnDyadicInputs) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 100; ++t) {
    RandomExpansionSpec spec;
    spec.dim = 1 + t % 3;
    spec.max_degree = 1 + t % 4;
    spec.max_terms = 4;
    spec.kind = CoefficientKind::dyadic;
    ChaosExpansion a = random_expansion(spec, rng);
    a.add(kOne, 1.0 - a.constant_term());
    const ChaosExpansion b = random_expansion(spec, rng);
    const ChaosExpansion residual = wick_product(a, wick_solve_linear(a, b), ProductMode::capped) - b;
    EXPECT_TRUE(residual.is_zero()) << t;
  }
}

TEST(SolveGbm, MeanAndNorm) {
  const TimeGrid g(1.0, 8);
  for (GbmMethod method : {GbmMethod::closed_form, GbmMethod::wick_euler}) {
    const ChaosExpansion x = solve_gbm(g, 4, method);
    EXPECT_EQ(x.constant_term(), Complex(1.0));
  }
  EXPECT_THROW(solve_gbm(g, 0, GbmMethod::closed_form), Error);
  const ChaosExpansion closed = solve_gbm(TimeGrid(1.0, 1), 10, GbmMethod::closed_form);
  double partial = 0.0;
  for (int k = 10; k >= 0; --k) partial += 1.0 / oracle::factorial(k);
  EXPECT_NEAR(l2_norm_sq(closed), partial, 1e-15);
}

TEST(SolveGbm, DegreeMassLadder) {
  const TimeGrid g(1.0, 4);
  const std::vector<double> mass = degree_mass(solve_gbm(g, 6, GbmMethod::closed_form));
  for (int k = 0; k <= 6; ++k) EXPECT_NEAR(mass[k], 1.0 / oracle::factorial(k), 1e-15);
  // Euler: Σ dt^{k/2} e_k(x), mass C(M,k) dt^k.
  const std::vector<double> euler = degree_mass(solve_gbm(g, 6, GbmMethod::wick_euler));
  for (int k = 0; k <= 6; ++k)
    EXPECT_NEAR(euler[k], k <= 4 ? oracle::binomial(4, k) * std::pow(0.25, k) : 0.0, 1e-15);
}

TEST(SolveGbm, EulerConvergesToClosedForm) {
  std::vector<double> errors;
  for (std::size_t m : {8u, 16u, 32u, 64u}) {
    const TimeGrid g(1.0, m);
    const ChaosExpansion d = solve_gbm(g, 3, GbmMethod::closed_form) - solve_gbm(g, 3, GbmMethod::wick_euler);
    errors.push_back(l2_norm_sq(d));
  }
  for (std::size_t k = 1; k < errors.size(); ++k) EXPECT_NEAR(std::log2(errors[k - 1] / errors[k]), 1.0, 0.1);
}

TEST(GbmReport, SymmetricMatchesFull) {
  // The same grid measured through both representations.
  const TimeGrid g(1.0, 8);
  for (GbmMethod method : {GbmMethod::closed_form, GbmMethod::wick_euler}) {
    const GbmReport full = gbm_report(g, 5, method, 20000, 9);
    const GbmReport sym = gbm_report(g, 5, method, 20000, 9, 0.0);
    EXPECT_EQ(full.representation, "full");
    EXPECT_EQ(sym.representation, "symmetric");
    EXPECT_NEAR(full.moments.second_moment, sym.moments.second_moment, 1e-13);
    ASSERT_EQ(full.degree_mass.size(), sym.degree_mass.size());
    for (std::size_t k = 0; k < full.degree_mass.size(); ++k)
      EXPECT_NEAR(full.degree_mass[k], sym.degree_mass[k], 1e-15);
    EXPECT_NEAR(full.moments.mc_mean, sym.moments.mc_mean, 1e-12);
    EXPECT_NEAR(full.moments.mc_stderr, sym.moments.mc_stderr, 1e-12);
    EXPECT_EQ(full.term_count, gbm_term_count(g, 5, method));
  }
  EXPECT_EQ(gbm_term_count(TimeGrid(1.0, 32), 10, GbmMethod::closed_form), 1471442973.0);
}

TEST(Moments, Examples) {
  const MomentReport u = moments(wick_unit(2, 2), 0, 1);
  EXPECT_EQ(u.mean, 1.0);
  EXPECT_EQ(u.second_moment, 1.0);
  EXPECT_EQ(u.variance, 0.0);
  EXPECT_TRUE(std::isnan(u.mc_mean));
  const TimeGrid g(1.0, 16);
  const MomentReport b = moments(brownian(g, 0.5, 2), 0, 1);
  EXPECT_EQ(b.mean, 0.0);
  EXPECT_EQ(b.second_moment, 0.5);
  const ChaosExpansion c = make_expansion(1, 1, {{kOne, Complex(1.0, 1e-6)}});
  EXPECT_EQ(code_of([&] { moments(c, 0, 1); }), ErrorCode::complex_coefficients);
}

TEST(Moments, MonteCarloWithinFourSigma) {
  const ChaosExpansion x = solve_gbm(TimeGrid(1.0, 8), 5, GbmMethod::closed_form);
  const MomentReport r = moments(x, 100000, 42);
  EXPECT_GT(r.mc_stderr, 0.0);
  EXPECT_LE(std::abs(r.mc_mean - 1.0), 4.0 * r.mc_stderr);
  EXPECT_NEAR(r.variance, r.second_moment - r.mean * r.mean, 1e-12);
}

TEST(MonteCarlo, IndependentOfThreadCount) {
  const auto f = [](std::span<const double> v) { return v[0] * v[0] + v[1]; };
  set_thread_count(1);
  const MonteCarloResult one = monte_carlo(2, 30000, 5, f);
  set_thread_count(4);
  const MonteCarloResult four = monte_carlo(2, 30000, 5, f);
  set_thread_count(1);
  EXPECT_EQ(one.mean, four.mean);
  EXPECT_EQ(one.stderr_, four.stderr_);
  EXPECT_NEAR(one.mean, 1.0, 5.0 * one.stderr_);
  const MonteCarloResult other = monte_carlo(2, 30000, 6, f);
  EXPECT_NE(one.mean, other.mean);
}

TEST(HsDemo, Table) {
  const std::vector<HsDemoRow> rows = hs_demo(1.0, 4, 64);
  ASSERT_EQ(rows.size(), 5u);
  for (const HsDemoRow &r : rows) {
    EXPECT_EQ(r.integral_second_moment, r.isometry_rhs);
    // √dt is exact only when M is a power of four.
    if (r.cells == 4 || r.cells == 16 || r.cells == 64)
      EXPECT_EQ(r.integral_second_moment, r.exact_sum);
    else
      EXPECT_NEAR(r.integral_second_moment, r.exact_sum, 1e-15);
    EXPECT_EQ(r.mean, 0.0);
    EXPECT_EQ(r.continuum, 0.5);
  }
  EXPECT_NEAR(rows.back().exact_sum, 0.5, 1.0 / 64);
}
