// Copyright 2026 The wickcalc Authors
// SPDX-License-Identifier: Apache-2.0

#include "wick/chaos_expansion.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "wick/error.hpp"

namespace wick {

const char *error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::dimension_mismatch: return "dimension_mismatch";
    case ErrorCode::degree_cap: return "degree_cap";
    case ErrorCode::degree_too_high: return "degree_too_high";
    case ErrorCode::index_out_of_range: return "index_out_of_range";
    case ErrorCode::non_invertible: return "non_invertible";
    case ErrorCode::zero_expansion: return "zero_expansion";
    case ErrorCode::rule_too_coarse: return "rule_too_coarse";
    case ErrorCode::dimension_too_large: return "dimension_too_large";
    case ErrorCode::unaligned_time: return "unaligned_time";
    case ErrorCode::complex_coefficients: return "complex_coefficients";
    case ErrorCode::schema: return "schema";
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::internal: return "internal";
  }
  return "unknown";
}

MultiIndex MultiIndex::from_entries(std::vector<Entry> entries) {
  MultiIndex out;
  long degree = 0;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (entries[k].exponent == 0)
      throw Error(ErrorCode::schema, "multi-index exponent must be positive",
                  "dim " + std::to_string(entries[k].dim));
    if (k > 0 && entries[k].dim <= entries[k - 1].dim)
      throw Error(ErrorCode::schema, "multi-index dimensions must be strictly increasing",
                  "dim " + std::to_string(entries[k].dim));
    degree += entries[k].exponent;
    if (degree > kMaxDegree)
      throw Error(ErrorCode::degree_cap, "multi-index degree exceeds the supported maximum of 20");
  }
  out.entries_ = std::move(entries);
  out.degree_ = static_cast<int>(degree);
  return out;
}

MultiIndex MultiIndex::from_dense(std::span<const std::uint32_t> exponents) {
  std::vector<Entry> entries;
  for (std::size_t d = 0; d < exponents.size(); ++d)
    if (exponents[d] != 0) entries.push_back({static_cast<std::uint32_t>(d), exponents[d]});
  return from_entries(std::move(entries));
}

MultiIndex MultiIndex::basis(std::uint32_t dim, std::uint32_t exponent) {
  if (exponent == 0) return {};
  return from_entries({{dim, exponent}});
}

std::uint32_t MultiIndex::exponent(std::uint32_t dim) const noexcept {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), dim,
                             [](const Entry &e, std::uint32_t d) { return e.dim < d; });
  return (it != entries_.end() && it->dim == dim) ? it->exponent : 0;
}

std::uint64_t MultiIndex::factorial() const noexcept {
  std::uint64_t f = 1;
  for (const Entry &e : entries_)
    for (std::uint64_t k = 2; k <= e.exponent; ++k) f *= k;
  return f;
}

MultiIndex MultiIndex::operator+(const MultiIndex &other) const {
  if (degree_ + other.degree_ > kMaxDegree)
    throw Error(ErrorCode::degree_cap, "multi-index degree exceeds the supported maximum of 20");
  MultiIndex out;
  out.entries_.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->dim < b->dim)) {
      out.entries_.push_back(*a++);
    } else if (a == entries_.end() || b->dim < a->dim) {
      out.entries_.push_back(*b++);
    } else {
      out.entries_.push_back({a->dim, a->exponent + b->exponent});
      ++a;
      ++b;
    }
  }
  out.degree_ = degree_ + other.degree_;
  return out;
}

MultiIndex MultiIndex::incremented(std::uint32_t dim) const {
  if (degree_ + 1 > kMaxDegree)
    throw Error(ErrorCode::degree_cap, "multi-index degree exceeds the supported maximum of 20");
  MultiIndex out = *this;
  auto it = std::lower_bound(out.entries_.begin(), out.entries_.end(), dim,
                             [](const Entry &e, std::uint32_t d) { return e.dim < d; });
  if (it != out.entries_.end() && it->dim == dim)
    ++it->exponent;
  else
    out.entries_.insert(it, {dim, 1});
  ++out.degree_;
  return out;
}

MultiIndex MultiIndex::decremented(std::uint32_t dim) const {
  MultiIndex out = *this;
  auto it = std::lower_bound(out.entries_.begin(), out.entries_.end(), dim,
                             [](const Entry &e, std::uint32_t d) { return e.dim < d; });
  if (it == out.entries_.end() || it->dim != dim)
    throw Error(ErrorCode::internal, "decrement of an absent dimension");
  if (--it->exponent == 0) out.entries_.erase(it);
  --out.degree_;
  return out;
}

std::string MultiIndex::to_string() const {
  if (entries_.empty()) return "1";
  std::ostringstream os;
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (k) os << '*';
    os << 'x' << entries_[k].dim;
    if (entries_[k].exponent > 1) os << '^' << entries_[k].exponent;
  }
  return os.str();
}

bool operator<(const MultiIndex &a, const MultiIndex &b) noexcept {
  if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
  auto ia = a.entries_.begin();
  auto ib = b.entries_.begin();
  while (ia != a.entries_.end() && ib != b.entries_.end()) {
    if (ia->dim != ib->dim) return ia->dim < ib->dim;  // a has a positive exponent where b has 0
    if (ia->exponent != ib->exponent) return ia->exponent > ib->exponent;
    ++ia;
    ++ib;
  }
  // Equal degrees and an equal common prefix leave both exhausted.
  return false;
}

ChaosExpansion::ChaosExpansion(std::size_t dim, int max_degree) : dim_(dim), max_degree_(max_degree) {
  if (dim == 0) throw Error(ErrorCode::invalid_argument, "expansion dimension must be positive");
  if (max_degree < 0 || max_degree > kMaxDegree)
    throw Error(ErrorCode::degree_cap, "max_degree must lie in [0, 20]",
                "max_degree " + std::to_string(max_degree));
}

Complex ChaosExpansion::coefficient(const MultiIndex &alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? Complex{} : it->second;
}

int ChaosExpansion::degree() const noexcept {
  return terms_.empty() ? -1 : terms_.rbegin()->first.degree();
}

int ChaosExpansion::lowest_degree() const noexcept {
  return terms_.empty() ? -1 : terms_.begin()->first.degree();
}

double ChaosExpansion::max_abs_coefficient() const noexcept {
  double m = 0.0;
  for (const auto &[alpha, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

void ChaosExpansion::check_index(const MultiIndex &alpha) const {
  if (!alpha.empty() && alpha.max_dim() >= dim_)
    throw Error(ErrorCode::index_out_of_range, "multi-index dimension exceeds expansion dimension",
                alpha.to_string());
}

void ChaosExpansion::add(const MultiIndex &alpha, Complex c) {
  check_index(alpha);
  if (alpha.degree() > max_degree_)
    throw Error(ErrorCode::degree_cap, "term degree exceeds max_degree", alpha.to_string());
  if (c == Complex{}) return;
  auto [it, inserted] = terms_.try_emplace(alpha, c);
  if (!inserted) {
    it->second += c;
    if (it->second == Complex{}) terms_.erase(it);
  }
}

void ChaosExpansion::add_truncating(const MultiIndex &alpha, Complex c) {
  if (alpha.degree() > max_degree_) return;
  add(alpha, c);
}

ChaosExpansion ChaosExpansion::operator-() const {
  ChaosExpansion out = *this;
  for (auto &[alpha, c] : out.terms_) c = -c;
  return out;
}

namespace {
void require_compatible(const ChaosExpansion &a, const ChaosExpansion &b) {
  if (a.dim() != b.dim())
    throw Error(ErrorCode::dimension_mismatch, "expansions have different dimensions",
                std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
  if (a.max_degree() != b.max_degree())
    throw Error(ErrorCode::dimension_mismatch, "expansions have different max_degree",
                std::to_string(a.max_degree()) + " vs " + std::to_string(b.max_degree()));
}
}  // namespace

ChaosExpansion &ChaosExpansion::operator+=(const ChaosExpansion &other) {
  require_compatible(*this, other);
  for (const auto &[alpha, c] : other.terms_) add(alpha, c);
  return *this;
}

ChaosExpansion operator+(const ChaosExpansion &a, const ChaosExpansion &b) {
  ChaosExpansion out = a;
  out += b;
  return out;
}

ChaosExpansion operator-(const ChaosExpansion &a, const ChaosExpansion &b) {
  require_compatible(a, b);
  ChaosExpansion out = a;
  for (const auto &[alpha, c] : b.terms()) out.add(alpha, -c);
  return out;
}

ChaosExpansion operator*(Complex s, const ChaosExpansion &a) {
  ChaosExpansion out(a.dim(), a.max_degree());
  for (const auto &[alpha, c] : a.terms()) out.add(alpha, s * c);
  return out;
}

ChaosExpansion coordinate(std::size_t dim, int max_degree, std::uint32_t i) {
  if (i >= dim)
    throw Error(ErrorCode::index_out_of_range, "coordinate index out of range", "i " + std::to_string(i));
  ChaosExpansion out(dim, max_degree);
  if (max_degree >= 1) out.add(MultiIndex::basis(i), 1.0);
  return out;
}

ChaosExpansion make_expansion(std::size_t dim, int max_degree,
                              std::initializer_list<std::pair<MultiIndex, Complex>> terms) {
  ChaosExpansion out(dim, max_degree);
  for (const auto &[alpha, c] : terms) out.add(alpha, c);
  return out;
}

}  // namespace wick
