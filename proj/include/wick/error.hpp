// Copyright 2026 The wickcalc Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef WICK_ERROR_HPP
#define WICK_ERROR_HPP

#include <stdexcept>
#include <string>

namespace wick {

enum class ErrorCode {
  dimension_mismatch,
  degree_cap,
  degree_too_high,
  index_out_of_range,
  non_invertible,
  zero_expansion,
  rule_too_coarse,
  dimension_too_large,
  unaligned_time,
  complex_coefficients,
  schema,
  invalid_argument,
  internal,
};

// Stable machine-readable name, e.g. "non_invertible".
const char *error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &message, std::string context = {})
      : std::runtime_error(message), code_(code), context_(std::move(context)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string &context() const noexcept { return context_; }

 private:
  ErrorCode code_;
  std::string context_;
};

}  // namespace wick

#endif  // WICK_ERROR_HPP
