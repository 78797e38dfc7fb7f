// Copyright 2026 The wickcalc Authors
// SPDX-License-Identifier: Apache-2.0

#include "wick/ccr.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "wick/error.hpp"

namespace wick {

namespace {

void require_index(std::uint32_t i, const ChaosExpansion &a, const char *op) {
  if (i >= a.dim())
    throw Error(ErrorCode::index_out_of_range, std::string(op) + ": dimension index out of range",
                "i " + std::to_string(i) + ", dim " + std::to_string(a.dim()));
}

void require_room(const ChaosExpansion &a, const char *op) {
  if (a.degree() >= a.max_degree())
    throw Error(ErrorCode::degree_too_high,
                std::string(op) + ": input reaches max_degree, creation would be truncated",
                "degree " + std::to_string(a.degree()) + ", max_degree " + std::to_string(a.max_degree()));
}

double binomial(int n, int k) {
  double r = 1.0;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return std::round(r);
}

// Expansion of Heₘ·Heₙ as (index, weight) pairs.
std::vector<std::pair<std::uint32_t, double>> linearize(std::uint32_t m, std::uint32_t n) {
  std::vector<std::pair<std::uint32_t, double>> out;
  double k_factorial = 1.0;
  for (std::uint32_t k = 0; k <= std::min(m, n); ++k) {
    if (k > 0) k_factorial *= k;
    out.emplace_back(m + n - 2 * k, binomial(m, k) * binomial(n, k) * k_factorial);
  }
  return out;
}

}  // namespace

ChaosExpansion annihilate(std::uint32_t i, const ChaosExpansion &a) {
  require_index(i, a, "annihilate");
  ChaosExpansion out(a.dim(), a.max_degree());
  for (const auto &[alpha, c] : a.terms()) {
    const std::uint32_t k = alpha.exponent(i);
    if (k > 0) out.add(alpha.decremented(i), static_cast<double>(k) * c);
  }
  return out;
}

ChaosExpansion create(std::uint32_t i, const ChaosExpansion &a) {
  require_index(i, a, "create");
  ChaosExpansion out(a.dim(), a.max_degree());
  for (const auto &[alpha, c] : a.terms()) {
    if (alpha.degree() >= a.max_degree()) break;
    out.add(alpha.incremented(i), c);
  }
  return out;
}

ChaosExpansion ccr_commutator(std::uint32_t i, std::uint32_t j, const ChaosExpansion &a) {
  require_index(i, a, "ccr_commutator");
  require_index(j, a, "ccr_commutator");
  require_room(a, "ccr_commutator");
  return annihilate(i, create(j, a)) - create(j, annihilate(i, a));
}

ChaosExpansion pointwise_product(const ChaosExpansion &a, const ChaosExpansion &b, std::optional<int> headroom) {
  if (a.dim() != b.dim())
    throw Error(ErrorCode::dimension_mismatch, "pointwise_product: expansions have different dimensions",
                std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
  const int base = std::max(a.max_degree(), b.max_degree());
  const int extra = headroom.value_or(std::max(0, std::max(a.degree(), 0) + std::max(b.degree(), 0) - base));
  if (extra < 0) throw Error(ErrorCode::invalid_argument, "pointwise_product: negative headroom");
  const int cap = base + extra;
  if (cap > kMaxDegree)
    throw Error(ErrorCode::degree_cap, "pointwise_product result would exceed degree 20",
                "cap " + std::to_string(cap));

  ChaosExpansion out(a.dim(), cap);
  std::vector<std::uint32_t> dims;
  std::vector<std::vector<std::pair<std::uint32_t, double>>> options;
  std::vector<MultiIndex::Entry> chosen;
  for (const auto &[alpha, ca] : a.terms()) {
    for (const auto &[beta, cb] : b.terms()) {
      dims.clear();
      for (const auto &e : alpha.entries()) dims.push_back(e.dim);
      for (const auto &e : beta.entries()) dims.push_back(e.dim);
      std::sort(dims.begin(), dims.end());
      dims.erase(std::unique(dims.begin(), dims.end()), dims.end());
      options.clear();
      for (std::uint32_t d : dims) options.push_back(linearize(alpha.exponent(d), beta.exponent(d)));

      const Complex scale = ca * cb;
      // Depth-first walk over one linearization choice per dimension.
      chosen.clear();
      auto walk = [&](auto &&self, std::size_t level, int degree, double weight) -> void {
        if (level == dims.size()) {
          if (degree <= cap) out.add(MultiIndex::from_entries(chosen), weight * scale);
          return;
        }
        for (const auto &[power, w] : options[level]) {
          if (power > 0) chosen.push_back({dims[level], power});
          self(self, level + 1, degree + static_cast<int>(power), weight * w);
          if (power > 0) chosen.pop_back();
        }
      };
      walk(walk, 0, 0, 1.0);
    }
  }
  return out;
}

ChaosExpansion multiply_coordinate(std::uint32_t i, const ChaosExpansion &a) {
  require_index(i, a, "multiply_coordinate");
  require_room(a, "multiply_coordinate");
  return pointwise_product(coordinate(a.dim(), a.max_degree(), i), a, 0);
}

Complex pairing(const ChaosExpansion &a, const ChaosExpansion &b) {
  if (a.dim() != b.dim())
    throw Error(ErrorCode::dimension_mismatch, "pairing: expansions have different dimensions",
                std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
  Complex sum{};
  for (const auto &[alpha, ca] : a.terms()) {
    auto it = b.terms().find(alpha);
    if (it != b.terms().end()) sum += static_cast<double>(alpha.factorial()) * ca * it->second;
  }
  return sum;
}

Polynomial1D::Polynomial1D(std::vector<Complex> coefficients) : coefficients_(std::move(coefficients)) {
  while (!coefficients_.empty() && coefficients_.back() == Complex{}) coefficients_.pop_back();
}

Complex Polynomial1D::operator()(Complex x) const {
  Complex sum{};
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) sum = sum * x + *it;
  return sum;
}

Polynomial1D Polynomial1D::derivative() const {
  std::vector<Complex> d;
  for (std::size_t k = 1; k < coefficients_.size(); ++k) d.push_back(static_cast<double>(k) * coefficients_[k]);
  return Polynomial1D(std::move(d));
}

Polynomial1D Polynomial1D::raise() const {
  std::vector<Complex> r(coefficients_.size() + 1);
  for (std::size_t k = 0; k < coefficients_.size(); ++k) r[k + 1] += coefficients_[k];
  for (std::size_t k = 1; k < coefficients_.size(); ++k) r[k - 1] -= static_cast<double>(k) * coefficients_[k];
  return Polynomial1D(std::move(r));
}

Polynomial1D operator+(const Polynomial1D &a, const Polynomial1D &b) {
  std::vector<Complex> s(std::max(a.coefficients_.size(), b.coefficients_.size()));
  for (std::size_t k = 0; k < a.coefficients_.size(); ++k) s[k] += a.coefficients_[k];
  for (std::size_t k = 0; k < b.coefficients_.size(); ++k) s[k] += b.coefficients_[k];
  return Polynomial1D(std::move(s));
}

Polynomial1D operator*(const Polynomial1D &a, const Polynomial1D &b) {
  if (a.coefficients_.empty() || b.coefficients_.empty()) return {};
  std::vector<Complex> p(a.coefficients_.size() + b.coefficients_.size() - 1);
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i)
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j) p[i + j] += a.coefficients_[i] * b.coefficients_[j];
  return Polynomial1D(std::move(p));
}

IntegerPolynomial::IntegerPolynomial(std::vector<std::int64_t> coefficients) : coefficients_(std::move(coefficients)) {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

double IntegerPolynomial::operator()(double x) const {
  double sum = 0.0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) sum = sum * x + static_cast<double>(*it);
  return sum;
}

Polynomial1D IntegerPolynomial::to_polynomial() const {
  std::vector<Complex> c(coefficients_.begin(), coefficients_.end());
  return Polynomial1D(std::move(c));
}

IntegerPolynomial IntegerPolynomial::raise() const {
  std::vector<std::int64_t> r(coefficients_.size() + 1, 0);
  for (std::size_t k = 0; k < coefficients_.size(); ++k) r[k + 1] = coefficients_[k];
  for (std::size_t k = 1; k < coefficients_.size(); ++k) {
    std::int64_t term = 0;
    if (__builtin_mul_overflow(static_cast<std::int64_t>(k), coefficients_[k], &term) ||
        __builtin_sub_overflow(r[k - 1], term, &r[k - 1]))
      throw Error(ErrorCode::internal, "integer polynomial coefficient overflow");
  }
  return IntegerPolynomial(std::move(r));
}

std::string IntegerPolynomial::to_string() const {
  if (coefficients_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const std::int64_t c = coefficients_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const std::uint64_t mag = c < 0 ? 0 - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (k == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << 'x';
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

IntegerPolynomial hermite_generate(int n) {
  if (n < 0 || n > 30)
    throw Error(ErrorCode::invalid_argument, "hermite order must lie in [0, 30]", "n " + std::to_string(n));
  IntegerPolynomial p({1});
  for (int k = 0; k < n; ++k) p = p.raise();
  return p;
}

std::pair<Complex, Complex> adjointness_check(const Polynomial1D &f, const Polynomial1D &g,
                                              const QuadratureRule &rule) {
  const int needed = (std::max(f.degree(), 0) + std::max(g.degree(), 0) + 2) / 2 + 1;
  if (rule.order() < needed)
    throw Error(ErrorCode::rule_too_coarse, "adjointness_check needs a finer rule",
                "order " + std::to_string(rule.order()) + " < " + std::to_string(needed));
  const Polynomial1D raised = f.raise();
  const Polynomial1D dg = g.derivative();
  const Complex left = rule.integrate([&](double x) { return raised(x) * g(x); });
  const Complex right = rule.integrate([&](double x) { return f(x) * dg(x); });
  return {left, right};
}

Complex s1_transform(const Polynomial1D &f, double xi, const QuadratureRule &rule) {
  return rule.integrate([&](double x) { return f(x + xi); });
}

Polynomial1D s1_polynomial(const Polynomial1D &f) {
  // ∫(x+ξ)ⁿ dμ₁ = Σ_j C(n,j) ξʲ E[x^{n−j}], E[x^{2m}] = (2m−1)!!.
  const auto &c = f.coefficients();
  std::vector<Complex> out(c.size());
  for (std::size_t n = 0; n < c.size(); ++n) {
    for (std::size_t j = 0; j <= n; ++j) {
      const std::size_t rest = n - j;
      if (rest % 2) continue;
      double moment = 1.0;
      for (std::size_t m = rest; m > 1; m -= 2) moment *= static_cast<double>(m - 1);
      out[j] += c[n] * binomial(static_cast<int>(n), static_cast<int>(j)) * moment;
    }
  }
  return Polynomial1D(std::move(out));
}

}  // namespace wick
