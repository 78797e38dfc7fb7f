// Copyright 2026 The wickcalc Authors
// SPDX-License-Identifier: Apache-2.0

#include "wick/serialization.hpp"

#include <cmath>
#include <initializer_list>
#include <map>
#include <string>

#include "wick/error.hpp"

namespace wick {

using nlohmann::json;

namespace {

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

const json &require(const json &j, const char *key, const std::string &where) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::schema, std::string("missing field \"") + key + "\"", where);
  return j.at(key);
}

double require_number(const json &j, const char *key, const std::string &where) {
  const json &v = require(j, key, where);
  if (!v.is_number()) throw Error(ErrorCode::schema, std::string("field \"") + key + "\" must be a number", where);
  return v.get<double>();
}

std::uint64_t require_unsigned(const json &j, const std::string &what, const std::string &where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    throw Error(ErrorCode::schema, what + " must be a non-negative integer", where);
  return j.get<std::uint64_t>();
}

void reject_unknown_keys(const json &j, std::initializer_list<const char *> allowed, const std::string &where) {
  for (const auto &[key, value] : j.items()) {
    bool known = false;
    for (const char *a : allowed) known = known || key == a;
    if (!known) throw Error(ErrorCode::schema, "unknown field \"" + key + "\"", where);
  }
}

}  // namespace

json to_json(const MultiIndex &alpha) {
  json entries = json::array();
  for (const auto &e : alpha.entries()) entries.push_back(json::array({e.dim, e.exponent}));
  return entries;
}

json to_json(const ChaosExpansion &a) {
  json terms = json::array();
  for (const auto &[alpha, c] : a.terms()) terms.push_back({{"alpha", to_json(alpha)}, {"re", c.real()}, {"im", c.imag()}});
  return {{"dim", a.dim()}, {"max_degree", a.max_degree()}, {"terms", std::move(terms)}};
}

ChaosExpansion expansion_from_json(const json &j) {
  if (!j.is_object()) throw Error(ErrorCode::schema, "expansion must be a JSON object");
  reject_unknown_keys(j, {"dim", "max_degree", "terms"}, "root");
  const std::uint64_t dim = require_unsigned(require(j, "dim", "root"), "dim", "root");
  const std::uint64_t max_degree = require_unsigned(require(j, "max_degree", "root"), "max_degree", "root");
  if (dim == 0) throw Error(ErrorCode::schema, "dim must be positive", "root");
  if (max_degree > static_cast<std::uint64_t>(kMaxDegree))
    throw Error(ErrorCode::schema, "max_degree must not exceed 20", "root");
  const json &terms = require(j, "terms", "root");
  if (!terms.is_array()) throw Error(ErrorCode::schema, "terms must be an array", "root");

  ChaosExpansion out(dim, static_cast<int>(max_degree));
  std::map<MultiIndex, std::size_t> seen;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const std::string where = "terms[" + std::to_string(k) + "]";
    const json &term = terms[k];
    if (!term.is_object()) throw Error(ErrorCode::schema, "term must be an object", where);
    reject_unknown_keys(term, {"alpha", "re", "im"}, where);
    const json &alpha_json = require(term, "alpha", where);
    if (!alpha_json.is_array()) throw Error(ErrorCode::schema, "alpha must be an array", where);
    std::vector<MultiIndex::Entry> entries;
    for (const json &pair : alpha_json) {
      if (!pair.is_array() || pair.size() != 2)
        throw Error(ErrorCode::schema, "alpha entries must be [dim_index, exponent] pairs", where);
      const std::uint64_t d = require_unsigned(pair[0], "dim_index", where);
      const std::uint64_t e = require_unsigned(pair[1], "exponent", where);
      if (d >= dim) throw Error(ErrorCode::schema, "dim_index out of range", where);
      if (e > static_cast<std::uint64_t>(kMaxDegree)) throw Error(ErrorCode::schema, "exponent exceeds 20", where);
      entries.push_back({static_cast<std::uint32_t>(d), static_cast<std::uint32_t>(e)});
    }
    MultiIndex alpha;
    try {
      alpha = MultiIndex::from_entries(std::move(entries));
    } catch (const Error &e) {
      throw Error(ErrorCode::schema, e.what(), where);
    }
    if (alpha.degree() > static_cast<int>(max_degree))
      throw Error(ErrorCode::schema, "term degree " + std::to_string(alpha.degree()) + " exceeds max_degree", where);
    auto [it, inserted] = seen.emplace(alpha, k);
    if (!inserted)
      throw Error(ErrorCode::schema, "duplicate alpha " + alpha.to_string(),
                  where + ", first at terms[" + std::to_string(it->second) + "]");
    const Complex c(require_number(term, "re", where), require_number(term, "im", where));
    out.add(alpha, c);
  }
  return out;
}

ChaosExpansion expansion_from_string(const std::string &text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error &e) {
    throw Error(ErrorCode::schema, std::string("malformed JSON: ") + e.what());
  }
  return expansion_from_json(j);
}

json to_json(const ProbeReport &report) {
  json j = {{"product_is_zero", report.product_is_zero},
            {"lowest_degree_a", report.lowest_degree_a},
            {"lowest_degree_b", report.lowest_degree_b},
            {"product_terms", report.product_terms}};
  if (report.vanishing_factor) {
    switch (*report.vanishing_factor) {
      case VanishingFactor::first: j["vanishing_factor"] = "first"; break;
      case VanishingFactor::second: j["vanishing_factor"] = "second"; break;
      case VanishingFactor::both: j["vanishing_factor"] = "both"; break;
    }
  } else {
    j["vanishing_factor"] = nullptr;
  }
  if (report.witness) {
    j["witness"] = to_json(*report.witness);
    j["witness_coefficient"] = {{"re", report.witness_coefficient.real()}, {"im", report.witness_coefficient.imag()}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

json to_json(const GrowthReport &report) {
  json samples = json::array();
  for (const auto &[r, m] : report.samples) samples.push_back({{"r", r}, {"log_max_abs", m}});
  return {{"fitted_log_K", number_or_null(report.fitted_log_K)},
          {"fitted_a", report.fitted_a},
          {"p_used", report.p_used},
          {"norm_sq", report.norm_sq},
          {"max_residual", report.max_residual},
          {"tolerance", report.tolerance},
          {"verdict", report.verdict == GrowthVerdict::bounded ? "bounded" : "super-quadratic"},
          {"overflow_radius", report.overflow_radius ? json(*report.overflow_radius) : json(nullptr)},
          {"samples", std::move(samples)}};
}

json to_json(const MomentReport &report) {
  return {{"mean", report.mean},
          {"second_moment", report.second_moment},
          {"variance", report.variance},
          {"mc_mean", number_or_null(report.mc_mean)},
          {"mc_stderr", number_or_null(report.mc_stderr)},
          {"samples", report.samples},
          {"seed", report.seed}};
}

json to_json(const GbmReport &report) {
  return {{"moments", to_json(report.moments)},
          {"degree_mass", report.degree_mass},
          {"representation", report.representation},
          {"term_count", report.term_count}};
}

std::string dump(const json &j) { return j.dump(2) + "\n"; }

}  // namespace wick
