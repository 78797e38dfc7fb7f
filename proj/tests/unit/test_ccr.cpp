// Copyright 2026 The wickcalc Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "wick/ccr.hpp"
#include "wick/chaos_algebra.hpp"
#include "wick/diagnostics.hpp"
#include "wick/error.hpp"
#include "wick/sampling.hpp"
#include "wick/transforms.hpp"

using namespace wick;

namespace {

const MultiIndex kOne{};
MultiIndex x(std::uint32_t i, std::uint32_t e = 1) { return MultiIndex::basis(i, e); }

ChaosExpansion random_dyadic(std::mt19937_64 &rng, std::size_t dim, int cap, int degree) {
  RandomExpansionSpec spec;
  spec.dim = dim;
  spec.max_degree = cap;
  spec.term_degree = degree;
  spec.kind = CoefficientKind::dyadic;
  return random_expansion(spec, rng);
}

ErrorCode code_of(const std::function<void()> &f) {
  try {
    f();
  } catch (const Error &e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::internal;
}

// Every basis term of degree < cap over dim coordinates.
std::vector<MultiIndex> basis_below(std::size_t dim, int cap) {
  std::vector<MultiIndex> out;
  std::vector<std::uint32_t> e(dim, 0);
  while (true) {
    int deg = 0;
    for (auto v : e) deg += static_cast<int>(v);
    if (deg < cap) out.push_back(MultiIndex::from_dense(e));
    std::size_t k = 0;
    while (k < dim && ++e[k] >= static_cast<std::uint32_t>(cap)) e[k++] = 0;
    if (k == dim) break;
  }
  return out;
}

}  // namespace

TEST(Annihilate, Examples) {
  EXPECT_EQ(annihilate(0, make_expansion(1, 3, {{x(0, 2), 1.0}})), make_expansion(1, 3, {{x(0), 2.0}}));
  EXPECT_TRUE(annihilate(0, wick_unit(1, 3)).is_zero());
  EXPECT_EQ(code_of([] { annihilate(2, wick_unit(2, 3)); }), ErrorCode::index_out_of_range);
}

TEST(Annihilate, CentralDifference) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> normal;
  for (int t = 0; t < 20; ++t) {
    RandomExpansionSpec spec;
    spec.dim = 2;
    spec.max_degree = 5;
    const ChaosExpansion a = random_expansion(spec, rng);
    const std::vector<Complex> pt{normal(rng), normal(rng)};
    const double eps = 1e-4;
    std::vector<Complex> hi = pt, lo = pt;
    hi[0] += eps;
    lo[0] -= eps;
    const Complex fd = (chaos_eval(a, hi) - chaos_eval(a, lo)) / (2 * eps);
    const Complex exact = chaos_eval(annihilate(0, a), pt);
    EXPECT_LE(std::abs(fd - exact), 1e-6 * (1.0 + std::abs(exact)));
  }
}

TEST(Annihilate, FirstOrderConvergenceInEpsilon) {
  // Forward differences converge at first order in ε.
  const ChaosExpansion a = make_expansion(1, 4, {{x(0, 3), 1.0}, {x(0, 2), 0.5}});
  const std::vector<Complex> pt{0.8};
  const Complex exact = chaos_eval(annihilate(0, a), pt);
  std::vector<double> errors;
  for (double eps : {1e-2, 1e-3, 1e-4}) {
    std::vector<Complex> hi = pt;
    hi[0] += eps;
    errors.push_back(std::abs((chaos_eval(a, hi) - chaos_eval(a, pt)) / eps - exact));
  }
  for (std::size_t k = 1; k < errors.size(); ++k) {
    const double slope = std::log10(errors[k - 1] / errors[k]);
    EXPECT_NEAR(slope, 1.0, 0.05);
  }
}

TEST(Create, Examples) {
  EXPECT_EQ(create(0, wick_unit(1, 3)), coordinate(1, 3, 0));
  EXPECT_EQ(create(0, coordinate(1, 3, 0)), make_expansion(1, 3, {{x(0, 2), 1.0}}));
  EXPECT_TRUE(create(0, make_expansion(1, 2, {{x(0, 2), 1.0}})).is_zero());
  EXPECT_EQ(code_of([] { create(5, wick_unit(2, 3)); }), ErrorCode::index_out_of_range);
}

TEST(Create, IsWickMultiplication) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 50; ++t) {
    const ChaosExpansion a = random_dyadic(rng, 3, 5, 5);
    for (std::uint32_t i = 0; i < 3; ++i)
      EXPECT_EQ(create(i, a), wick_product(coordinate(3, 5, i), a, ProductMode::capped));
  }
}

TEST(Commutator, Examples) {
  for (std::uint32_t k = 0; k < 5; ++k) {
    const ChaosExpansion a = make_expansion(1, 5, {{x(0, k), 1.0}});
    EXPECT_EQ(ccr_commutator(0, 0, a), a);
  }
  const ChaosExpansion b = make_expansion(2, 4, {{x(0, 2), 1.0}, {x(1), 0.5}});
  EXPECT_TRUE(ccr_commutator(0, 1, b).is_zero());
  EXPECT_EQ(code_of([] { ccr_commutator(0, 0, make_expansion(1, 3, {{x(0, 3), 1.0}})); }),
            ErrorCode::degree_too_high);
}

TEST(Commutator, ExhaustiveBasis) {
  for (std::size_t n = 1; n <= 3; ++n)
    for (int d = 1; d <= 5; ++d)
      for (const MultiIndex &alpha : basis_below(n, d)) {
        const ChaosExpansion a = make_expansion(n, d, {{alpha, 1.0}});
        for (std::uint32_t i = 0; i < n; ++i)
          for (std::uint32_t j = 0; j < n; ++j) {
            const ChaosExpansion c = ccr_commutator(i, j, a);
            if (i == j)
              EXPECT_EQ(c, a);
            else
              EXPECT_TRUE(c.is_zero());
          }
      }
}

TEST(Commutator, CommutingPairs) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    const ChaosExpansion a = random_dyadic(rng, 3, 5, 3);
    for (std::uint32_t i = 0; i < 3; ++i)
      for (std::uint32_t j = 0; j < 3; ++j) {
        EXPECT_EQ(annihilate(i, annihilate(j, a)), annihilate(j, annihilate(i, a)));
        EXPECT_EQ(create(i, create(j, a)), create(j, create(i, a)));
      }
  }
}

TEST(PointwiseProduct, Examples) {
  const ChaosExpansion x0 = coordinate(1, 2, 0);
  EXPECT_EQ(pointwise_product(x0, x0), make_expansion(1, 2, {{kOne, 1.0}, {x(0, 2), 1.0}}));
  std::mt19937_64 rng(4);
  const ChaosExpansion a = random_dyadic(rng, 2, 4, 4);
  EXPECT_EQ(pointwise_product(wick_unit(2, 4), a), a);
}

TEST(PointwiseProduct, DefaultHeadroomIsExact) {
  const ChaosExpansion a = make_expansion(1, 3, {{x(0, 3), 1.0}});
  const ChaosExpansion p = pointwise_product(a, a);
  EXPECT_EQ(p.max_degree(), 6);
  // He3² = He6 + 9He4 + 18He2 + 6
  EXPECT_EQ(p, make_expansion(1, 6, {{kOne, 6.0}, {x(0, 2), 18.0}, {x(0, 4), 9.0}, {x(0, 6), 1.0}}));
  const ChaosExpansion clipped = pointwise_product(a, a, 0);
  EXPECT_EQ(clipped.max_degree(), 3);
  EXPECT_EQ(clipped, make_expansion(1, 3, {{kOne, 6.0}, {x(0, 2), 18.0}}));
}

TEST(PointwiseProduct, PointwiseOracle) {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> normal;
  for (int t = 0; t < 30; ++t) {
    RandomExpansionSpec spec;
    spec.dim = 2;
    spec.max_degree = 4;
    spec.kind = CoefficientKind::gaussian_complex;
    const ChaosExpansion a = random_expansion(spec, rng);
    const ChaosExpansion b = random_expansion(spec, rng);
    const ChaosExpansion p = pointwise_product(a, b);
    for (int k = 0; k < 5; ++k) {
      const std::vector<Complex> pt{normal(rng), normal(rng)};
      const Complex expected = chaos_eval(a, pt) * chaos_eval(b, pt);
      EXPECT_LE(std::abs(chaos_eval(p, pt) - expected), 1e-10 * (1.0 + std::abs(expected)));
      // The dense monomial product is an independent route.
      const Complex dense = oracle::evaluate(oracle::multiply(oracle::to_monomials(a), oracle::to_monomials(b)), pt);
      EXPECT_LE(std::abs(dense - expected), 1e-10 * (1.0 + std::abs(expected)));
    }
  }
}

TEST(QuantumDecomposition, Examples) {
  EXPECT_EQ(multiply_coordinate(0, coordinate(1, 3, 0)), make_expansion(1, 3, {{kOne, 1.0}, {x(0, 2), 1.0}}));
  EXPECT_EQ(multiply_coordinate(0, wick_unit(1, 3)), coordinate(1, 3, 0));
  EXPECT_EQ(code_of([] { multiply_coordinate(0, make_expansion(1, 2, {{x(0, 2), 1.0}})); }),
            ErrorCode::degree_too_high);
}

TEST(QuantumDecomposition, ExhaustiveBasis) {
  for (std::size_t n = 1; n <= 3; ++n)
    for (int d = 1; d <= 5; ++d)
      for (const MultiIndex &alpha : basis_below(n, d)) {
        const ChaosExpansion a = make_expansion(n, d, {{alpha, 1.0}});
        for (std::uint32_t i = 0; i < n; ++i)
          EXPECT_EQ(multiply_coordinate(i, a), annihilate(i, a) + create(i, a)) << alpha.to_string();
      }
}

TEST(Pairing, Examples) {
  EXPECT_EQ(pairing(wick_unit(1, 2), wick_unit(1, 2)), Complex(1.0));
  const ChaosExpansion a = make_expansion(2, 3, {{kOne, Complex(0.5, 1.0)}, {x(1, 2), 3.0}});
  EXPECT_EQ(pairing(a, wick_unit(2, 3)), a.constant_term());
  EXPECT_EQ(pairing(a, a), Complex(0.5, 1.0) * Complex(0.5, 1.0) + 2.0 * 9.0);
  EXPECT_THROW(pairing(a, wick_unit(1, 3)), Error);
}

TEST(Pairing, DualityIdentity) {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 50; ++t) {
    RandomExpansionSpec spec;
    spec.dim = 2;
    spec.max_degree = 4;
    spec.term_degree = 3;
    const ChaosExpansion y = random_expansion(spec, rng);
    const ChaosExpansion phi = random_expansion(spec, rng);
    for (std::uint32_t i = 0; i < 2; ++i) {
      const Complex lhs = pairing(multiply_coordinate(i, y), phi);
      const ChaosExpansion yphi = pointwise_product(y, phi);
      const Complex rhs = pairing(coordinate(2, yphi.max_degree(), i), yphi);
      EXPECT_LE(std::abs(lhs - rhs), 1e-10 * (1.0 + std::abs(lhs)));
    }
  }
}

TEST(HermiteGenerate, Examples) {
  EXPECT_EQ(hermite_generate(0), IntegerPolynomial({1}));
  EXPECT_EQ(hermite_generate(2), IntegerPolynomial({-1, 0, 1}));
  EXPECT_EQ(hermite_generate(3).to_string(), "x^3 - 3*x");
  EXPECT_EQ(hermite_generate(0).to_string(), "1");
  EXPECT_EQ(hermite_generate(4).to_string(), "x^4 - 6*x^2 + 3");
  EXPECT_THROW(hermite_generate(31), Error);
}

TEST(HermiteGenerate, MatchesExplicitSumExactly) {
  for (int n = 0; n <= 30; ++n) {
    EXPECT_EQ(hermite_generate(n).coefficients(), oracle::hermite_integer_coefficients(n)) << n;
  }
}

TEST(HermiteGenerate, AgreesWithRecurrence) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> uniform(-3.0, 3.0);
  for (int n = 0; n <= 10; ++n) {
    const IntegerPolynomial h = hermite_generate(n);
    for (int k = 0; k < 20; ++k) {
      const double v = uniform(rng);
      const double r = hermite_eval(n, v).real();
      EXPECT_LE(std::abs(h(v) - r), 1e-12 * (1.0 + std::abs(r)));
    }
  }
}

TEST(Polynomial1D, RaiseAndDerivative) {
  const Polynomial1D f({1.0, 2.0, 3.0});
  EXPECT_EQ(f.derivative(), Polynomial1D({2.0, 6.0}));
  // (x − d/dx)(1 + 2x + 3x²) = x + 2x² + 3x³ − 2 − 6x
  EXPECT_EQ(f.raise(), Polynomial1D({-2.0, -5.0, 2.0, 3.0}));
  EXPECT_EQ(Polynomial1D().degree(), -1);
  EXPECT_EQ(Polynomial1D({0.0, 0.0}).degree(), -1);
}

TEST(Adjointness, Examples) {
  const QuadratureRule rule(8);
  const auto [l, r] = adjointness_check(Polynomial1D({0.0, 1.0}), Polynomial1D({0.0, 0.0, 1.0}), rule);
  EXPECT_NEAR(l.real(), 2.0, 1e-13);
  EXPECT_NEAR(r.real(), 2.0, 1e-13);
  const auto [l1, r1] = adjointness_check(Polynomial1D({0.3, -1.0, 2.0, 0.5}), Polynomial1D({1.0}), rule);
  EXPECT_NEAR(std::abs(l1), 0.0, 1e-13);
  EXPECT_EQ(r1, Complex{});
  EXPECT_THROW(adjointness_check(Polynomial1D(std::vector<Complex>(7, 1.0)), Polynomial1D(std::vector<Complex>(7, 1.0)),
                                 QuadratureRule(4)),
               Error);
}

TEST(Adjointness, RandomPairs) {
  std::mt19937_64 rng(8);
  std::normal_distribution<double> normal;
  std::uniform_int_distribution<int> degree(0, 6);
  const QuadratureRule rule(16);
  for (int t = 0; t < 50; ++t) {
    std::vector<Complex> f(static_cast<std::size_t>(degree(rng)) + 1), g(static_cast<std::size_t>(degree(rng)) + 1);
    for (auto &c : f) c = normal(rng);
    for (auto &c : g) c = normal(rng);
    const auto [l, r] = adjointness_check(Polynomial1D(f), Polynomial1D(g), rule);
    EXPECT_LE(std::abs(l - r), 1e-10 * (1.0 + std::abs(l)));
  }
}

TEST(OneDimensionalAnalogy, SIntertwinesDerivativeAndRaising) {
  std::mt19937_64 rng(9);
  std::normal_distribution<double> normal;
  const QuadratureRule rule(16);
  for (int t = 0; t < 10; ++t) {
    std::vector<Complex> c(7);
    for (auto &v : c) v = normal(rng);
    const Polynomial1D f(c);
    const Polynomial1D s = s1_polynomial(f);
    for (int k = 0; k < 10; ++k) {
      const double xi = -2.0 + 0.4 * k;
      EXPECT_LE(std::abs(s1_transform(f, xi, rule) - s(xi)), 1e-10 * (1.0 + std::abs(s(xi))));
      EXPECT_LE(std::abs(s1_transform(f.derivative(), xi, rule) - s.derivative()(xi)),
                1e-10 * (1.0 + std::abs(s.derivative()(xi))));
      EXPECT_LE(std::abs(s1_transform(f.raise(), xi, rule) - xi * s(xi)), 1e-10 * (1.0 + std::abs(xi * s(xi))));
    }
  }
}

TEST(CcrSuite, Clean) {
  const CcrSuiteResult r = ccr_suite(3, 5, 100, 7);
  EXPECT_GT(r.basis_terms, 0u);
  EXPECT_EQ(r.random_trials, 100u);
  EXPECT_EQ(r.commutator_failures, 0u);
  EXPECT_EQ(r.commuting_failures, 0u);
  EXPECT_EQ(r.decomposition_failures, 0u);
  EXPECT_LE(r.duality_max_rel_error, 1e-10);
}
