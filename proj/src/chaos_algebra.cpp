// Copyright 2026 The wickcalc Authors
// SPDX-License-Identifier: Apache-2.0

#include "wick/chaos_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "wick/error.hpp"
#include "wick/parallel.hpp"

namespace wick {

namespace {

// Left-operand terms per reduction chunk. Fixed so that the floating-point
// accumulation order (and hence every output bit) is independent of the
// worker count.
constexpr std::size_t kProductChunk = 64;

void require_same_dim(const ChaosExpansion &a, const ChaosExpansion &b, const char *op) {
  if (a.dim() != b.dim())
    throw Error(ErrorCode::dimension_mismatch, std::string(op) + ": expansions have different dimensions",
                std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
}

ChaosExpansion convolve(const ChaosExpansion &a, const ChaosExpansion &b, int cap) {
  using Term = const ChaosExpansion::Terms::value_type *;
  std::vector<Term> lhs;
  lhs.reserve(a.size());
  for (const auto &t : a.terms()) lhs.push_back(&t);
  std::vector<Term> rhs;
  rhs.reserve(b.size());
  for (const auto &t : b.terms()) rhs.push_back(&t);

  const std::size_t chunks = (lhs.size() + kProductChunk - 1) / kProductChunk;
  std::vector<ChaosExpansion::Terms> partial(chunks);
  parallel_for(chunks, [&](std::size_t chunk) {
    auto &acc = partial[chunk];
    const std::size_t end = std::min(lhs.size(), (chunk + 1) * kProductChunk);
    for (std::size_t k = chunk * kProductChunk; k < end; ++k) {
      const auto &[alpha, ca] = *lhs[k];
      for (Term t : rhs) {
        const auto &[beta, cb] = *t;
        // rhs is graded, so every later term is at least this degree.
        if (alpha.degree() + beta.degree() > cap) break;
        acc[alpha + beta] += ca * cb;
      }
    }
  });

  ChaosExpansion out(a.dim(), cap);
  for (const auto &acc : partial)
    for (const auto &[gamma, c] : acc) out.add(gamma, c);
  return out;
}

}  // namespace

ChaosExpansion wick_unit(std::size_t dim, int max_degree) {
  ChaosExpansion out(dim, max_degree);
  out.add(MultiIndex{}, 1.0);
  return out;
}

ChaosExpansion wick_product(const ChaosExpansion &a, const ChaosExpansion &b, ProductMode mode) {
  require_same_dim(a, b, "wick_product");
  const int cap = mode == ProductMode::exact ? a.max_degree() + b.max_degree()
                                             : std::min(a.max_degree(), b.max_degree());
  if (cap > kMaxDegree)
    throw Error(ErrorCode::degree_cap, "exact Wick product would exceed degree 20",
                std::to_string(a.max_degree()) + " + " + std::to_string(b.max_degree()));
  return convolve(a, b, cap);
}

ChaosExpansion wick_power(const ChaosExpansion &a, int k) {
  if (k < 0) throw Error(ErrorCode::invalid_argument, "wick_power exponent must be non-negative");
  if (static_cast<long>(k) * a.max_degree() > kMaxDegree)
    throw Error(ErrorCode::degree_cap, "wick_power would exceed degree 20",
                std::to_string(k) + " * " + std::to_string(a.max_degree()));
  ChaosExpansion out = wick_unit(a.dim(), 0);
  for (int j = 0; j < k; ++j) out = wick_product(out, a, ProductMode::exact);
  return out;
}

ChaosExpansion wick_exp(const ChaosExpansion &a) {
  const Complex c0 = a.constant_term();
  ChaosExpansion u = a;
  u.add(MultiIndex{}, -c0);
  ChaosExpansion sum = wick_unit(a.dim(), a.max_degree());
  ChaosExpansion term = sum;
  for (int k = 1; k <= a.max_degree() && !term.is_zero(); ++k) {
    term = (1.0 / k) * wick_product(term, u, ProductMode::capped);
    sum += term;
  }
  return c0 == Complex{} ? sum : std::exp(c0) * sum;
}

ChaosExpansion wick_inverse(const ChaosExpansion &a) {
  const Complex a0 = a.constant_term();
  if (std::abs(a0) <= kInvertibilityThreshold)
    throw Error(ErrorCode::non_invertible,
                "constant term is zero: the element lies in the maximal graded ideal",
                "|a_0| = " + std::to_string(std::abs(a0)));
  // a = a0·(1 + u) with u free of constant term; 1/(1+u) = Σ (−u)^k.
  ChaosExpansion neg_u = (-1.0 / a0) * a;
  neg_u.add(MultiIndex{}, 1.0);
  ChaosExpansion sum = wick_unit(a.dim(), a.max_degree());
  ChaosExpansion term = sum;
  for (int k = 1; k <= a.max_degree() && !term.is_zero(); ++k) {
    term = wick_product(term, neg_u, ProductMode::capped);
    sum += term;
  }
  return (1.0 / a0) * sum;
}

ChaosExpansion lowest_part(const ChaosExpansion &a) {
  if (a.is_zero()) throw Error(ErrorCode::zero_expansion, "lowest_part of the zero expansion");
  const int d = a.lowest_degree();
  ChaosExpansion out(a.dim(), a.max_degree());
  for (const auto &[alpha, c] : a.terms()) {
    if (alpha.degree() != d) break;
    out.add(alpha, c);
  }
  return out;
}

ChaosExpansion truncate(const ChaosExpansion &a, int new_max_degree) {
  ChaosExpansion out(a.dim(), new_max_degree);
  for (const auto &[alpha, c] : a.terms()) {
    if (alpha.degree() > new_max_degree) break;
    out.add(alpha, c);
  }
  return out;
}

double l2_norm_sq(const ChaosExpansion &a) {
  double sum = 0.0;
  for (const auto &[alpha, c] : a.terms()) sum += static_cast<double>(alpha.factorial()) * std::norm(c);
  return sum;
}

ChaosExpansion gaussian_kernel(std::size_t dim, int max_degree, KernelSign sign) {
  const double half = sign == KernelSign::plus ? 0.5 : -0.5;
  ChaosExpansion quadratic(dim, max_degree);
  if (max_degree >= 2)
    for (std::uint32_t i = 0; i < dim; ++i) quadratic.add(MultiIndex::basis(i, 2), half);
  return wick_exp(quadratic);
}

ChaosExpansion delta0(std::size_t dim, int max_degree) {
  return gaussian_kernel(dim, max_degree, KernelSign::minus);
}

ChaosExpansion convolution(const ChaosExpansion &a, const ChaosExpansion &b) {
  require_same_dim(a, b, "convolution");
  const ChaosExpansion ab = wick_product(a, b, ProductMode::capped);
  return wick_product(ab, gaussian_kernel(a.dim(), ab.max_degree(), KernelSign::plus), ProductMode::capped);
}

ProbeReport zero_divisor_probe(const ChaosExpansion &a, const ChaosExpansion &b) {
  require_same_dim(a, b, "zero_divisor_probe");
  const ChaosExpansion product = wick_product(a, b, ProductMode::exact);
  ProbeReport report;
  report.lowest_degree_a = a.lowest_degree();
  report.lowest_degree_b = b.lowest_degree();
  report.product_terms = product.size();
  report.product_is_zero = product.is_zero();
  if (report.product_is_zero) {
    if (a.is_zero() && b.is_zero())
      report.vanishing_factor = VanishingFactor::both;
    else if (a.is_zero())
      report.vanishing_factor = VanishingFactor::first;
    else if (b.is_zero())
      report.vanishing_factor = VanishingFactor::second;
    else
      throw Error(ErrorCode::internal, "product of two nonzero expansions vanished",
                  std::to_string(a.size()) + " x " + std::to_string(b.size()) + " terms");
    return report;
  }
  // Leading terms of the lowest homogeneous parts: their sum is reached by
  // exactly one pair, so its coefficient is a nonzero product.
  auto last_of_degree = [](const ChaosExpansion &e) {
    const int d = e.lowest_degree();
    auto it = e.terms().begin();
    auto lead = it;
    for (; it != e.terms().end() && it->first.degree() == d; ++it) lead = it;
    return lead->first;
  };
  MultiIndex witness = last_of_degree(a) + last_of_degree(b);
  Complex coefficient = product.coefficient(witness);
  if (coefficient == Complex{}) {
    // Unreachable in exact arithmetic; fall back to any stored term.
    witness = product.terms().begin()->first;
    coefficient = product.terms().begin()->second;
  }
  report.witness = std::move(witness);
  report.witness_coefficient = coefficient;
  return report;
}

}  // namespace wick
