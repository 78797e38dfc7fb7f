// Copyright 2026 The wickcalc Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef WICK_CHAOS_EXPANSION_HPP
#define WICK_CHAOS_EXPANSION_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace wick {

using Complex = std::complex<double>;

// Largest supported chaos degree. 20! is the largest factorial that fits in
// 64 bits, and multi-index factorials are computed in integer arithmetic.
inline constexpr int kMaxDegree = 20;

// Sparse exponent vector over basis dimensions, in canonical form: entries
// sorted by dimension, no zero exponents.
class MultiIndex {
 public:
  struct Entry {
    std::uint32_t dim;
    std::uint32_t exponent;
    friend bool operator==(const Entry &, const Entry &) = default;
  };

  MultiIndex() = default;

  // Strict constructor: entries must be sorted by dimension, unique and carry
  // positive exponents. Throws Error(schema) otherwise.
  static MultiIndex from_entries(std::vector<Entry> entries);
  // Lenient constructor from a dense exponent vector.
  static MultiIndex from_dense(std::span<const std::uint32_t> exponents);
  static MultiIndex basis(std::uint32_t dim, std::uint32_t exponent = 1);

  std::span<const Entry> entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }
  int degree() const noexcept { return degree_; }
  std::uint32_t exponent(std::uint32_t dim) const noexcept;
  // Largest dimension index with a nonzero exponent; meaningless when empty.
  std::uint32_t max_dim() const noexcept { return entries_.back().dim; }

  // Π αᵢ!, exact for degree <= kMaxDegree.
  std::uint64_t factorial() const noexcept;

  MultiIndex operator+(const MultiIndex &other) const;
  MultiIndex incremented(std::uint32_t dim) const;
  // Requires exponent(dim) >= 1.
  MultiIndex decremented(std::uint32_t dim) const;

  // "1", "x0", "x0^2*x3", ...
  std::string to_string() const;

  friend bool operator==(const MultiIndex &a, const MultiIndex &b) noexcept {
    return a.degree_ == b.degree_ && a.entries_ == b.entries_;
  }
  // Graded lexicographic: lower degree first; within a degree, the index
  // with the larger exponent on the first differing dimension comes first
  // (x0^2 < x0*x1 < x1^2).
  friend bool operator<(const MultiIndex &a, const MultiIndex &b) noexcept;

 private:
  std::vector<Entry> entries_;
  int degree_ = 0;
};

// Truncated Wiener-chaos expansion Σ_α c_α H_α of a Hida distribution over
// `dim` Gaussian coordinates, with every stored index of degree <= max_degree.
// Exact zero coefficients are never stored; near-zero ones are kept.
class ChaosExpansion {
 public:
  using Terms = std::map<MultiIndex, Complex>;

  // The zero expansion.
  ChaosExpansion(std::size_t dim, int max_degree);

  std::size_t dim() const noexcept { return dim_; }
  int max_degree() const noexcept { return max_degree_; }
  const Terms &terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  Complex coefficient(const MultiIndex &alpha) const;
  Complex constant_term() const { return coefficient(MultiIndex{}); }
  // Highest / lowest stored degree, -1 for the zero expansion.
  int degree() const noexcept;
  int lowest_degree() const noexcept;
  double max_abs_coefficient() const noexcept;

  // Accumulates c into the coefficient of alpha, pruning an exact zero sum.
  // Throws when alpha does not fit (dimension >= dim or degree > max_degree).
  void add(const MultiIndex &alpha, Complex c);
  // As add, but silently drops indices above max_degree.
  void add_truncating(const MultiIndex &alpha, Complex c);

  ChaosExpansion operator-() const;
  friend ChaosExpansion operator+(const ChaosExpansion &a, const ChaosExpansion &b);
  friend ChaosExpansion operator-(const ChaosExpansion &a, const ChaosExpansion &b);
  friend ChaosExpansion operator*(Complex s, const ChaosExpansion &a);
  ChaosExpansion &operator+=(const ChaosExpansion &other);

  // Exact structural equality (dim, max_degree and every coefficient).
  friend bool operator==(const ChaosExpansion &a, const ChaosExpansion &b) = default;

 private:
  void check_index(const MultiIndex &alpha) const;

  std::size_t dim_;
  int max_degree_;
  Terms terms_;
};

// x_i: the single first-order term on dimension i.
ChaosExpansion coordinate(std::size_t dim, int max_degree, std::uint32_t i);

// Builds an expansion from (index, coefficient) pairs; repeated indices add up.
ChaosExpansion make_expansion(std::size_t dim, int max_degree,
                              std::initializer_list<std::pair<MultiIndex, Complex>> terms);

}  // namespace wick

#endif  // WICK_CHAOS_EXPANSION_HPP
