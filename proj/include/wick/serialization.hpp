// Copyright 2026 The wickcalc Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef WICK_SERIALIZATION_HPP
#define WICK_SERIALIZATION_HPP

#include <json.hpp>
#include <string>

#include "wick/chaos_algebra.hpp"
#include "wick/chaos_expansion.hpp"
#include "wick/growth.hpp"
#include "wick/operational.hpp"

namespace wick {

// {"dim": N, "max_degree": D,
//  "terms": [{"alpha": [[dim, exponent], ...], "re": x, "im": y}, ...]}
// with terms in canonical order. Doubles are written in shortest round-trip
// form, so parse(dump(e)) == e bit for bit.
nlohmann::json to_json(const ChaosExpansion &a);

// Strict parser: rejects unknown shapes, unsorted or repeated dimensions,
// zero exponents, duplicate indices and terms above max_degree. The error
// context names the offending term ("terms[3]").
ChaosExpansion expansion_from_json(const nlohmann::json &j);
ChaosExpansion expansion_from_string(const std::string &text);

nlohmann::json to_json(const MultiIndex &alpha);
nlohmann::json to_json(const ProbeReport &report);
nlohmann::json to_json(const GrowthReport &report);
nlohmann::json to_json(const MomentReport &report);
nlohmann::json to_json(const GbmReport &report);

// Canonical text form: two-space indentation plus a trailing newline.
std::string dump(const nlohmann::json &j);

}  // namespace wick

#endif  // WICK_SERIALIZATION_HPP
