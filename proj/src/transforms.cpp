// Copyright 2026 The wickcalc Authors
// SPDX-License-Identifier: Apache-2.0

#include "wick/transforms.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <string>

#include "wick/error.hpp"

namespace wick {

namespace {

constexpr int kMaxHermite = 30;
constexpr int kMaxQuadratureDim = 3;

void require_length(const ChaosExpansion &a, std::size_t n, const char *op) {
  if (n != a.dim())
    throw Error(ErrorCode::dimension_mismatch, std::string(op) + ": argument length differs from expansion dim",
                std::to_string(n) + " vs " + std::to_string(a.dim()));
}

// table[i][n] = Heₙ(xᵢ), n <= degree.
template <typename T>
std::vector<std::vector<T>> hermite_table(std::span<const T> x, int degree) {
  std::vector<std::vector<T>> table(x.size(), std::vector<T>(degree + 1));
  for (std::size_t i = 0; i < x.size(); ++i) {
    auto &row = table[i];
    row[0] = T(1);
    if (degree >= 1) row[1] = x[i];
    for (int n = 1; n < degree; ++n) row[n + 1] = x[i] * row[n] - T(n) * row[n - 1];
  }
  return table;
}

template <typename T>
T eval_with_table(const ChaosExpansion &a, const std::vector<std::vector<T>> &table) {
  T sum{};
  for (const auto &[alpha, c] : a.terms()) {
    T term(1);
    for (const auto &e : alpha.entries()) term *= table[e.dim][e.exponent];
    if constexpr (std::is_same_v<T, double>)
      sum += c.real() * term;
    else
      sum += c * term;
  }
  return sum;
}

// Orthonormal Hermite values ψₖ = Heₖ/√k! for k <= q, returned as (ψ_{q-1}, ψ_q)
// with the running Christoffel sum Σ_{k<q} ψₖ².
struct Orthonormal {
  double prev, last, christoffel;
};

Orthonormal orthonormal_hermite(int q, double x) {
  double p0 = 1.0, p1 = x, sum = 1.0;
  if (q == 0) return {0.0, 1.0, 0.0};
  for (int n = 1; n < q; ++n) {
    sum += p1 * p1;
    const double p2 = (x * p1 - std::sqrt(static_cast<double>(n)) * p0) / std::sqrt(static_cast<double>(n + 1));
    p0 = p1;
    p1 = p2;
  }
  return {p0, p1, sum};
}

// log E[X^k] = log (k−1)!! for even k.
double log_gaussian_moment(int k) {
  return std::lgamma(k + 1.0) - 0.5 * k * std::log(2.0) - std::lgamma(0.5 * k + 1.0);
}

void require_quadrature_dim(const ChaosExpansion &a, std::size_t xi_len, const char *op) {
  require_length(a, xi_len, op);
  if (a.dim() > kMaxQuadratureDim)
    throw Error(ErrorCode::dimension_too_large, std::string(op) + ": quadrature oracle supports dim <= 3",
                "dim " + std::to_string(a.dim()));
}

// Visits every node of the tensor grid with its product weight.
template <typename F>
void for_each_tensor_node(std::size_t dim, const QuadratureRule &rule, F &&visit) {
  const std::size_t q = static_cast<std::size_t>(rule.order());
  std::vector<std::size_t> idx(dim, 0);
  std::vector<double> point(dim);
  while (true) {
    double w = 1.0;
    for (std::size_t i = 0; i < dim; ++i) {
      point[i] = rule.nodes()[idx[i]];
      w *= rule.weights()[idx[i]];
    }
    visit(std::span<const double>(point), w);
    std::size_t i = 0;
    while (i < dim && ++idx[i] == q) idx[i++] = 0;
    if (i == dim) break;
  }
}

}  // namespace

Complex hermite_eval(int n, Complex x) {
  if (n < 0 || n > kMaxHermite)
    throw Error(ErrorCode::invalid_argument, "hermite order must lie in [0, 30]", "n " + std::to_string(n));
  Complex h0 = 1.0, h1 = x;
  if (n == 0) return h0;
  for (int k = 1; k < n; ++k) {
    const Complex h2 = x * h1 - static_cast<double>(k) * h0;
    h0 = h1;
    h1 = h2;
  }
  return h1;
}

QuadratureRule::QuadratureRule(int order) {
  if (order < 1 || order > kMaxOrder)
    throw Error(ErrorCode::invalid_argument, "quadrature order must lie in [1, 128]",
                "order " + std::to_string(order));
  const int q = order;
  // Physicists' Jacobi matrix (weight e^{-t²}); nodes rescale as x = √2·t.
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(q, q);
  for (int k = 1; k < q; ++k) jacobi(k, k - 1) = jacobi(k - 1, k) = std::sqrt(k / 2.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi, Eigen::EigenvaluesOnly);
  std::vector<double> t(solver.eigenvalues().data(), solver.eigenvalues().data() + q);
  std::sort(t.begin(), t.end());

  nodes_.assign(q, 0.0);
  weights_.assign(q, 0.0);
  for (int k = 0; k < q / 2; ++k) {
    double x = std::sqrt(2.0) * 0.5 * (t[q - 1 - k] - t[k]);
    for (int it = 0; it < 8; ++it) {
      const Orthonormal h = orthonormal_hermite(q, x);
      const double step = h.last / (std::sqrt(static_cast<double>(q)) * h.prev);
      x -= step;
      if (std::abs(step) <= 1e-16 * std::abs(x)) break;
    }
    nodes_[q - 1 - k] = x;
    nodes_[k] = -x;
  }
  for (int k = 0; k < q; ++k) weights_[k] = 1.0 / orthonormal_hermite(q, nodes_[k]).christoffel;
  for (int k = 0; k < q / 2; ++k) weights_[k] = weights_[q - 1 - k];
  double total = 0.0;
  for (double w : weights_) total += w;
  for (double &w : weights_) w /= total;

  // Moments of X/s, s the largest node, so high degrees stay finite.
  const double s = q > 1 ? nodes_.back() : 1.0;
  for (int k = 0; k <= 2 * q - 1; ++k) {
    const double got = integrate([k, s](double x) { return std::pow(x / s, k); });
    const double log_scale =
        (k % 2 ? 0.5 * (log_gaussian_moment(k - 1) + log_gaussian_moment(k + 1)) : log_gaussian_moment(k)) -
        k * std::log(s);
    const double scale = std::exp(log_scale);
    const double want = k % 2 ? 0.0 : scale;
    if (std::abs(got - want) > 1e-12 * scale)
      throw Error(ErrorCode::internal, "Gauss-Hermite rule failed its moment check",
                  "order " + std::to_string(q) + ", monomial degree " + std::to_string(k));
  }
}

Complex chaos_eval(const ChaosExpansion &a, std::span<const Complex> x) {
  require_length(a, x.size(), "chaos_eval");
  return eval_with_table(a, hermite_table(x, std::max(a.degree(), 0)));
}

double chaos_eval_real(const ChaosExpansion &a, std::span<const double> x) {
  require_length(a, x.size(), "chaos_eval");
  return eval_with_table(a, hermite_table(x, std::max(a.degree(), 0)));
}

Complex s_transform_eval(const ChaosExpansion &a, std::span<const Complex> xi) {
  require_length(a, xi.size(), "s_transform_eval");
  const int degree = std::max(a.degree(), 0);
  std::vector<std::vector<Complex>> powers(xi.size(), std::vector<Complex>(degree + 1));
  for (std::size_t i = 0; i < xi.size(); ++i) {
    powers[i][0] = 1.0;
    for (int n = 1; n <= degree; ++n) powers[i][n] = powers[i][n - 1] * xi[i];
  }
  Complex sum{};
  for (const auto &[alpha, c] : a.terms()) {
    Complex term = c;
    for (const auto &e : alpha.entries()) term *= powers[e.dim][e.exponent];
    sum += term;
  }
  return sum;
}

Complex s_transform_quadrature(const ChaosExpansion &a, std::span<const double> xi, const QuadratureRule &rule) {
  require_quadrature_dim(a, xi.size(), "s_transform_quadrature");
  if (rule.order() < a.max_degree() + 4)
    throw Error(ErrorCode::rule_too_coarse, "s_transform_quadrature needs order >= max_degree + 4",
                "order " + std::to_string(rule.order()));
  const int degree = std::max(a.degree(), 0);
  std::vector<double> shifted(a.dim());
  double re = 0.0, im = 0.0;
  for_each_tensor_node(a.dim(), rule, [&](std::span<const double> x, double w) {
    for (std::size_t i = 0; i < x.size(); ++i) shifted[i] = x[i] + xi[i];
    const auto table = hermite_table(std::span<const double>(shifted), degree);
    for (const auto &[alpha, c] : a.terms()) {
      double term = w;
      for (const auto &e : alpha.entries()) term *= table[e.dim][e.exponent];
      re += c.real() * term;
      im += c.imag() * term;
    }
  });
  return {re, im};
}

Complex t_transform_eval(const ChaosExpansion &a, std::span<const Complex> xi) {
  require_length(a, xi.size(), "t_transform_eval");
  std::vector<Complex> rotated(xi.size());
  Complex square{};
  for (std::size_t i = 0; i < xi.size(); ++i) {
    rotated[i] = Complex(0.0, 1.0) * xi[i];
    square += xi[i] * xi[i];
  }
  return std::exp(-0.5 * square) * s_transform_eval(a, rotated);
}

Complex t_transform_quadrature(const ChaosExpansion &a, std::span<const double> xi, const QuadratureRule &rule) {
  require_quadrature_dim(a, xi.size(), "t_transform_quadrature");
  if (rule.order() < a.max_degree() + 8)
    throw Error(ErrorCode::rule_too_coarse, "t_transform_quadrature needs order >= max_degree + 8",
                "order " + std::to_string(rule.order()));
  const int degree = std::max(a.degree(), 0);
  Complex sum{};
  for_each_tensor_node(a.dim(), rule, [&](std::span<const double> x, double w) {
    double phase = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) phase += x[i] * xi[i];
    const auto table = hermite_table(x, degree);
    Complex value{};
    for (const auto &[alpha, c] : a.terms()) {
      double term = 1.0;
      for (const auto &e : alpha.entries()) term *= table[e.dim][e.exponent];
      value += c * term;
    }
    sum += w * value * std::polar(1.0, phase);
  });
  return sum;
}

ChaosExpansion s_transform_interpolate(std::size_t dim, int max_degree,
                                       const std::function<Complex(std::span<const Complex>)> &sample) {
  if (dim == 0 || max_degree < 0 || max_degree > kMaxDegree)
    throw Error(ErrorCode::invalid_argument, "s_transform_interpolate: bad dim or degree");
  const std::size_t side = static_cast<std::size_t>(max_degree) + 1;
  std::size_t points = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    points *= side;
    if (points > 65536)
      throw Error(ErrorCode::dimension_too_large, "s_transform_interpolate grid exceeds 65536 points");
  }
  // values[flat index over (j₀, j₁, ...)], j_i-th node = j_i.
  std::vector<Complex> values(points);
  std::vector<Complex> point(dim);
  for (std::size_t flat = 0; flat < points; ++flat) {
    std::size_t rest = flat;
    for (std::size_t i = 0; i < dim; ++i) {
      point[i] = static_cast<double>(rest % side);
      rest /= side;
    }
    values[flat] = sample(point);
  }

  Eigen::MatrixXcd vandermonde(side, side);
  for (std::size_t r = 0; r < side; ++r)
    for (std::size_t c = 0; c < side; ++c) vandermonde(r, c) = std::pow(static_cast<double>(r), static_cast<int>(c));
  const Eigen::PartialPivLU<Eigen::MatrixXcd> lu(vandermonde);

  // Axis-by-axis solve turns node values into monomial coefficients.
  std::size_t stride = 1;
  Eigen::VectorXcd line(side);
  for (std::size_t axis = 0; axis < dim; ++axis, stride *= side) {
    for (std::size_t base = 0; base < points; ++base) {
      if ((base / stride) % side != 0) continue;
      for (std::size_t j = 0; j < side; ++j) line(j) = values[base + j * stride];
      const Eigen::VectorXcd coeffs = lu.solve(line);
      for (std::size_t j = 0; j < side; ++j) values[base + j * stride] = coeffs(j);
    }
  }

  ChaosExpansion out(dim, max_degree);
  std::vector<std::uint32_t> exponents(dim);
  for (std::size_t flat = 0; flat < points; ++flat) {
    std::size_t rest = flat;
    int degree = 0;
    for (std::size_t i = 0; i < dim; ++i) {
      exponents[i] = static_cast<std::uint32_t>(rest % side);
      degree += static_cast<int>(exponents[i]);
      rest /= side;
    }
    if (degree <= max_degree) out.add(MultiIndex::from_dense(exponents), values[flat]);
  }
  return out;
}

}  // namespace wick
