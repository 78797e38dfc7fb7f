// Copyright 2026 The wickcalc Authors
// SPDX-License-Identifier: Apache-2.0

#include "wick/wick.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "wick/ccr.hpp"
#include "wick/chaos_algebra.hpp"
#include "wick/diagnostics.hpp"
#include "wick/error.hpp"
#include "wick/growth.hpp"
#include "wick/operational.hpp"
#include "wick/parallel.hpp"
#include "wick/serialization.hpp"
#include "wick/transforms.hpp"

struct wick_expansion {
  wick::ChaosExpansion value;
};

struct wick_functional {
  wick::Functional value;
};

namespace {

using wick::Complex;
using wick::Error;
using wick::ErrorCode;

thread_local std::string g_message;
thread_local std::string g_context;

wick_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::dimension_mismatch: return WICK_ERR_DIMENSION_MISMATCH;
    case ErrorCode::degree_cap: return WICK_ERR_DEGREE_CAP;
    case ErrorCode::degree_too_high: return WICK_ERR_DEGREE_TOO_HIGH;
    case ErrorCode::index_out_of_range: return WICK_ERR_INDEX_OUT_OF_RANGE;
    case ErrorCode::non_invertible: return WICK_ERR_NON_INVERTIBLE;
    case ErrorCode::zero_expansion: return WICK_ERR_ZERO_EXPANSION;
    case ErrorCode::rule_too_coarse: return WICK_ERR_RULE_TOO_COARSE;
    case ErrorCode::dimension_too_large: return WICK_ERR_DIMENSION_TOO_LARGE;
    case ErrorCode::unaligned_time: return WICK_ERR_UNALIGNED_TIME;
    case ErrorCode::complex_coefficients: return WICK_ERR_COMPLEX_COEFFICIENTS;
    case ErrorCode::schema: return WICK_ERR_SCHEMA;
    case ErrorCode::invalid_argument: return WICK_ERR_INVALID_ARGUMENT;
    case ErrorCode::internal: return WICK_ERR_INTERNAL;
  }
  return WICK_ERR_INTERNAL;
}

template <typename F>
wick_status guarded(F &&body) {
  try {
    body();
    g_message.clear();
    g_context.clear();
    return WICK_OK;
  } catch (const Error &e) {
    g_message = e.what();
    g_context = e.context();
    return status_of(e.code());
  } catch (const std::bad_alloc &) {
    g_message = "out of memory";
    g_context.clear();
    return WICK_ERR_INTERNAL;
  } catch (const std::exception &e) {
    g_message = e.what();
    g_context.clear();
    return WICK_ERR_INTERNAL;
  }
}

template <typename... Ptrs>
void require_non_null(const Ptrs *...ptrs) {
  if (((ptrs == nullptr) || ...)) throw Error(ErrorCode::invalid_argument, "null pointer argument");
}

Complex to_cpp(wick_complex c) { return {c.re, c.im}; }
wick_complex to_c(Complex c) { return {c.real(), c.imag()}; }

char *copy_string(const std::string &s) {
  char *out = static_cast<char *>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

wick::MultiIndex index_of(const uint32_t *dims, const uint32_t *exponents, size_t n) {
  if (n > 0) require_non_null(dims, exponents);
  std::vector<wick::MultiIndex::Entry> entries(n);
  for (size_t k = 0; k < n; ++k) entries[k] = {dims[k], exponents[k]};
  return wick::MultiIndex::from_entries(std::move(entries));
}

std::vector<Complex> complex_vector(const wick_complex *x, size_t n) {
  if (n > 0) require_non_null(x);
  std::vector<Complex> out(n);
  for (size_t k = 0; k < n; ++k) out[k] = to_cpp(x[k]);
  return out;
}

std::vector<double> real_vector(const double *x, size_t n) {
  if (n > 0) require_non_null(x);
  return std::vector<double>(x, x + n);
}

void emit(wick::ChaosExpansion value, wick_expansion **out) {
  require_non_null(out);
  *out = new wick_expansion{std::move(value)};
}

wick::ProductMode mode_of(wick_product_mode mode) {
  if (mode == WICK_PRODUCT_EXACT) return wick::ProductMode::exact;
  if (mode == WICK_PRODUCT_CAPPED) return wick::ProductMode::capped;
  throw Error(ErrorCode::invalid_argument, "unknown product mode");
}

wick::GbmMethod method_of(wick_gbm_method method) {
  if (method == WICK_GBM_CLOSED_FORM) return wick::GbmMethod::closed_form;
  if (method == WICK_GBM_WICK_EULER) return wick::GbmMethod::wick_euler;
  throw Error(ErrorCode::invalid_argument, "unknown gbm method");
}

}  // namespace

extern "C" {

const char *wick_version(void) { return WICK_VERSION_STRING; }

const char *wick_status_name(wick_status status) {
  switch (status) {
    case WICK_OK: return "ok";
    case WICK_ERR_DIMENSION_MISMATCH: return wick::error_code_name(ErrorCode::dimension_mismatch);
    case WICK_ERR_DEGREE_CAP: return wick::error_code_name(ErrorCode::degree_cap);
    case WICK_ERR_DEGREE_TOO_HIGH: return wick::error_code_name(ErrorCode::degree_too_high);
    case WICK_ERR_INDEX_OUT_OF_RANGE: return wick::error_code_name(ErrorCode::index_out_of_range);
    case WICK_ERR_NON_INVERTIBLE: return wick::error_code_name(ErrorCode::non_invertible);
    case WICK_ERR_ZERO_EXPANSION: return wick::error_code_name(ErrorCode::zero_expansion);
    case WICK_ERR_RULE_TOO_COARSE: return wick::error_code_name(ErrorCode::rule_too_coarse);
    case WICK_ERR_DIMENSION_TOO_LARGE: return wick::error_code_name(ErrorCode::dimension_too_large);
    case WICK_ERR_UNALIGNED_TIME: return wick::error_code_name(ErrorCode::unaligned_time);
    case WICK_ERR_COMPLEX_COEFFICIENTS: return wick::error_code_name(ErrorCode::complex_coefficients);
    case WICK_ERR_SCHEMA: return wick::error_code_name(ErrorCode::schema);
    case WICK_ERR_INVALID_ARGUMENT: return wick::error_code_name(ErrorCode::invalid_argument);
    case WICK_ERR_INTERNAL: return wick::error_code_name(ErrorCode::internal);
  }
  return "unknown";
}

const char *wick_last_error_message(void) { return g_message.c_str(); }
const char *wick_last_error_context(void) { return g_context.c_str(); }
void wick_string_free(char *s) { std::free(s); }

wick_status wick_set_thread_count(unsigned n) {
  return guarded([&] {
    if (n == 0) throw Error(ErrorCode::invalid_argument, "thread count must be positive");
    wick::set_thread_count(n);
  });
}

unsigned wick_get_thread_count(void) { return wick::thread_count(); }

wick_status wick_expansion_zero(size_t dim, int max_degree, wick_expansion **out) {
  return guarded([&] { emit(wick::ChaosExpansion(dim, max_degree), out); });
}

wick_status wick_expansion_clone(const wick_expansion *a, wick_expansion **out) {
  return guarded([&] {
    require_non_null(a);
    emit(a->value, out);
  });
}

void wick_expansion_free(wick_expansion *a) { delete a; }

wick_status wick_expansion_add_term(wick_expansion *a, const uint32_t *dims, const uint32_t *exponents, size_t n,
                                    wick_complex c) {
  return guarded([&] {
    require_non_null(a);
    a->value.add(index_of(dims, exponents, n), to_cpp(c));
  });
}

wick_status wick_expansion_coefficient(const wick_expansion *a, const uint32_t *dims, const uint32_t *exponents,
                                       size_t n, wick_complex *out) {
  return guarded([&] {
    require_non_null(a, out);
    *out = to_c(a->value.coefficient(index_of(dims, exponents, n)));
  });
}

size_t wick_expansion_dim(const wick_expansion *a) { return a ? a->value.dim() : 0; }
int wick_expansion_max_degree(const wick_expansion *a) { return a ? a->value.max_degree() : -1; }
size_t wick_expansion_term_count(const wick_expansion *a) { return a ? a->value.size() : 0; }

int wick_expansion_equal(const wick_expansion *a, const wick_expansion *b) {
  return a && b && a->value == b->value ? 1 : 0;
}

wick_status wick_expansion_from_json(const char *json, wick_expansion **out) {
  return guarded([&] {
    require_non_null(json);
    emit(wick::expansion_from_string(json), out);
  });
}

wick_status wick_expansion_to_json(const wick_expansion *a, char **out) {
  return guarded([&] {
    require_non_null(a, out);
    *out = copy_string(wick::dump(wick::to_json(a->value)));
  });
}

wick_status wick_expansion_add(const wick_expansion *a, const wick_expansion *b, wick_expansion **out) {
  return guarded([&] {
    require_non_null(a, b);
    emit(a->value + b->value, out);
  });
}

wick_status wick_expansion_sub(const wick_expansion *a, const wick_expansion *b, wick_expansion **out) {
  return guarded([&] {
    require_non_null(a, b);
    emit(a->value - b->value, out);
  });
}

wick_status wick_expansion_scale(const wick_expansion *a, wick_complex s, wick_expansion **out) {
  return guarded([&] {
    require_non_null(a);
    emit(to_cpp(s) * a->value, out);
  });
}

wick_status wick_coordinate(size_t dim, int max_degree, uint32_t i, wick_expansion **out) {
  return guarded([&] { emit(wick::coordinate(dim, max_degree, i), out); });
}

wick_status wick_unit(size_t dim, int max_degree, wick_expansion **out) {
  return guarded([&] { emit(wick::wick_unit(dim, max_degree), out); });
}

wick_status wick_product(const wick_expansion *a, const wick_expansion *b, wick_product_mode mode,
                         wick_expansion **out) {
  return guarded([&] {
    require_non_null(a, b);
    emit(wick::wick_product(a->value, b->value, mode_of(mode)), out);
  });
}

wick_status wick_power(const wick_expansion *a, int k, wick_expansion **out) {
  return guarded([&] {
    require_non_null(a);
    emit(wick::wick_power(a->value, k), out);
  });
}

wick_status wick_exp(const wick_expansion *a, wick_expansion **out) {
  return guarded([&] {
    require_non_null(a);
    emit(wick::wick_exp(a->value), out);
  });
}

wick_status wick_inverse(const wick_expansion *a, wick_expansion **out) {
  return guarded([&] {
    require_non_null(a);
    emit(wick::wick_inverse(a->value), out);
  });
}

wick_status wick_lowest_part(const wick_expansion *a, wick_expansion **out) {
  return guarded([&] {
    require_non_null(a);
    emit(wick::lowest_part(a->value), out);
  });
}

wick_status wick_truncate(const wick_expansion *a, int new_max_degree, wick_expansion **out) {
  return guarded([&] {
    require_non_null(a);
    emit(wick::truncate(a->value, new_max_degree), out);
  });
}

wick_status wick_l2_norm_sq(const wick_expansion *a, double *out) {
  return guarded([&] {
    require_non_null(a, out);
    *out = wick::l2_norm_sq(a->value);
  });
}

wick_status wick_gaussian_kernel(size_t dim, int max_degree, wick_kernel_sign sign, wick_expansion **out) {
  return guarded([&] {
    if (sign != WICK_KERNEL_PLUS && sign != WICK_KERNEL_MINUS)
      throw Error(ErrorCode::invalid_argument, "unknown kernel sign");
    emit(wick::gaussian_kernel(dim, max_degree, sign == WICK_KERNEL_PLUS ? wick::KernelSign::plus : wick::KernelSign::minus),
         out);
  });
}

wick_status wick_delta0(size_t dim, int max_degree, wick_expansion **out) {
  return guarded([&] { emit(wick::delta0(dim, max_degree), out); });
}

wick_status wick_convolution(const wick_expansion *a, const wick_expansion *b, wick_expansion **out) {
  return guarded([&] {
    require_non_null(a, b);
    emit(wick::convolution(a->value, b->value), out);
  });
}

wick_status wick_zero_divisor_probe(const wick_expansion *a, const wick_expansion *b, wick_probe_report *report,
                                    char **report_json) {
  return guarded([&] {
    require_non_null(a, b, report);
    const wick::ProbeReport r = wick::zero_divisor_probe(a->value, b->value);
    char *text = report_json ? copy_string(wick::dump(wick::to_json(r))) : nullptr;
    report->product_is_zero = r.product_is_zero ? 1 : 0;
    report->lowest_degree_a = r.lowest_degree_a;
    report->lowest_degree_b = r.lowest_degree_b;
    report->product_terms = r.product_terms;
    report->vanishing_factor = WICK_VANISHING_NONE;
    if (r.vanishing_factor) {
      switch (*r.vanishing_factor) {
        case wick::VanishingFactor::first: report->vanishing_factor = WICK_VANISHING_FIRST; break;
        case wick::VanishingFactor::second: report->vanishing_factor = WICK_VANISHING_SECOND; break;
        case wick::VanishingFactor::both: report->vanishing_factor = WICK_VANISHING_BOTH; break;
      }
    }
    if (report_json) *report_json = text;
  });
}

wick_status wick_hermite_eval(int n, wick_complex x, wick_complex *out) {
  return guarded([&] {
    require_non_null(out);
    *out = to_c(wick::hermite_eval(n, to_cpp(x)));
  });
}

wick_status wick_chaos_eval(const wick_expansion *a, const wick_complex *x, size_t n, wick_complex *out) {
  return guarded([&] {
    require_non_null(a, out);
    *out = to_c(wick::chaos_eval(a->value, complex_vector(x, n)));
  });
}

wick_status wick_s_transform(const wick_expansion *a, const wick_complex *xi, size_t n, wick_complex *out) {
  return guarded([&] {
    require_non_null(a, out);
    *out = to_c(wick::s_transform_eval(a->value, complex_vector(xi, n)));
  });
}

wick_status wick_t_transform(const wick_expansion *a, const wick_complex *xi, size_t n, wick_complex *out) {
  return guarded([&] {
    require_non_null(a, out);
    *out = to_c(wick::t_transform_eval(a->value, complex_vector(xi, n)));
  });
}

wick_status wick_s_transform_quadrature(const wick_expansion *a, const double *xi, size_t n, int order,
                                        wick_complex *out) {
  return guarded([&] {
    require_non_null(a, out);
    *out = to_c(wick::s_transform_quadrature(a->value, real_vector(xi, n), wick::QuadratureRule(order)));
  });
}

wick_status wick_t_transform_quadrature(const wick_expansion *a, const double *xi, size_t n, int order,
                                        wick_complex *out) {
  return guarded([&] {
    require_non_null(a, out);
    *out = to_c(wick::t_transform_quadrature(a->value, real_vector(xi, n), wick::QuadratureRule(order)));
  });
}

wick_status wick_quadrature_rule(int order, double *nodes, double *weights) {
  return guarded([&] {
    require_non_null(nodes, weights);
    const wick::QuadratureRule rule(order);
    std::copy(rule.nodes().begin(), rule.nodes().end(), nodes);
    std::copy(rule.weights().begin(), rule.weights().end(), weights);
  });
}

wick_status wick_annihilate(uint32_t i, const wick_expansion *a, wick_expansion **out) {
  return guarded([&] {
    require_non_null(a);
    emit(wick::annihilate(i, a->value), out);
  });
}

wick_status wick_create(uint32_t i, const wick_expansion *a, wick_expansion **out) {
  return guarded([&] {
    require_non_null(a);
    emit(wick::create(i, a->value), out);
  });
}

wick_status wick_ccr_commutator(uint32_t i, uint32_t j, const wick_expansion *a, wick_expansion **out) {
  return guarded([&] {
    require_non_null(a);
    emit(wick::ccr_commutator(i, j, a->value), out);
  });
}

wick_status wick_pointwise_product(const wick_expansion *a, const wick_expansion *b, int headroom,
                                   wick_expansion **out) {
  return guarded([&] {
    require_non_null(a, b);
    emit(wick::pointwise_product(a->value, b->value, headroom < 0 ? std::nullopt : std::optional<int>(headroom)), out);
  });
}

wick_status wick_multiply_coordinate(uint32_t i, const wick_expansion *a, wick_expansion **out) {
  return guarded([&] {
    require_non_null(a);
    emit(wick::multiply_coordinate(i, a->value), out);
  });
}

wick_status wick_pairing(const wick_expansion *a, const wick_expansion *b, wick_complex *out) {
  return guarded([&] {
    require_non_null(a, b, out);
    *out = to_c(wick::pairing(a->value, b->value));
  });
}

wick_status wick_hermite_generate(int n, int64_t *coefficients, size_t capacity, char **text) {
  return guarded([&] {
    const wick::IntegerPolynomial p = wick::hermite_generate(n);
    const auto &c = p.coefficients();
    if (coefficients) {
      if (capacity < c.size()) throw Error(ErrorCode::invalid_argument, "coefficient buffer too small");
      std::copy(c.begin(), c.end(), coefficients);
    }
    if (text) *text = copy_string(p.to_string());
  });
}

wick_status wick_adjointness_check(const wick_complex *f, size_t nf, const wick_complex *g, size_t ng, int order,
                                   wick_complex *left, wick_complex *right) {
  return guarded([&] {
    require_non_null(left, right);
    const auto [l, r] = wick::adjointness_check(wick::Polynomial1D(complex_vector(f, nf)),
                                                wick::Polynomial1D(complex_vector(g, ng)), wick::QuadratureRule(order));
    *left = to_c(l);
    *right = to_c(r);
  });
}

wick_status wick_osc_norm(const double *xi, size_t n, unsigned p, double *out) {
  return guarded([&] {
    require_non_null(out);
    *out = wick::osc_norm(real_vector(xi, n), p);
  });
}

wick_status wick_functional_from_expansion(const wick_expansion *a, wick_functional **out) {
  return guarded([&] {
    require_non_null(a, out);
    *out = new wick_functional{wick::Functional::from_expansion(a->value)};
  });
}

wick_status wick_functional_closed_form(const char *name, wick_functional **out) {
  return guarded([&] {
    require_non_null(name, out);
    *out = new wick_functional{wick::Functional::closed_form(name)};
  });
}

void wick_functional_free(wick_functional *f) { delete f; }

wick_status wick_ray_growth_fit(const wick_functional *f, const double *xi, size_t n, unsigned p, const double *radii,
                                size_t nr, int phases, char **report_json) {
  return guarded([&] {
    require_non_null(f, report_json);
    const std::vector<double> r = nr == 0 ? wick::default_radii() : real_vector(radii, nr);
    wick::GrowthOptions options;
    options.phases = phases;
    const wick::GrowthReport report = wick::ray_growth_fit(f->value, real_vector(xi, n), p, r, options);
    *report_json = copy_string(wick::dump(wick::to_json(report)));
  });
}

wick_status wick_entirety_check(const wick_functional *f, const double *xi, const double *eta, size_t n, int *out) {
  return guarded([&] {
    require_non_null(f, out);
    *out = wick::entirety_check(f->value, real_vector(xi, n), real_vector(eta, n)) ? 1 : 0;
  });
}

wick_status wick_brownian(double horizon, size_t cells, double t, int max_degree, wick_expansion **out) {
  return guarded([&] { emit(wick::brownian(wick::TimeGrid(horizon, cells), t, max_degree), out); });
}

wick_status wick_white_noise(double horizon, size_t cells, uint32_t i, int max_degree, wick_expansion **out) {
  return guarded([&] { emit(wick::white_noise(wick::TimeGrid(horizon, cells), i, max_degree), out); });
}

wick_status wick_hs_integral(double horizon, size_t cells, const wick_expansion *const *integrand, size_t n,
                             wick_expansion **out) {
  return guarded([&] {
    if (n > 0) require_non_null(integrand);
    std::vector<wick::ChaosExpansion> f;
    f.reserve(n);
    for (size_t k = 0; k < n; ++k) {
      require_non_null(integrand[k]);
      f.push_back(integrand[k]->value);
    }
    emit(wick::hs_integral(wick::TimeGrid(horizon, cells), f), out);
  });
}

wick_status wick_solve_linear(const wick_expansion *a, const wick_expansion *b, wick_expansion **out) {
  return guarded([&] {
    require_non_null(a, b);
    emit(wick::wick_solve_linear(a->value, b->value), out);
  });
}

wick_status wick_solve_gbm(double horizon, size_t cells, int max_degree, wick_gbm_method method,
                           wick_expansion **out) {
  return guarded([&] { emit(wick::solve_gbm(wick::TimeGrid(horizon, cells), max_degree, method_of(method)), out); });
}

wick_status wick_moments(const wick_expansion *a, uint64_t mc_samples, uint64_t seed, wick_moment_report *out) {
  return guarded([&] {
    require_non_null(a, out);
    const wick::MomentReport r = wick::moments(a->value, mc_samples, seed);
    *out = {r.mean, r.second_moment, r.variance, r.mc_mean, r.mc_stderr, r.samples, r.seed};
  });
}

wick_status wick_gbm_report(double horizon, size_t cells, int max_degree, wick_gbm_method method,
                            uint64_t mc_samples, uint64_t seed, char **report_json) {
  return guarded([&] {
    require_non_null(report_json);
    const wick::GbmReport r =
        wick::gbm_report(wick::TimeGrid(horizon, cells), max_degree, method_of(method), mc_samples, seed);
    *report_json = copy_string(wick::dump(wick::to_json(r)));
  });
}

wick_status wick_probe_suite(size_t max_dim, int max_degree, uint64_t trials, uint64_t seed, char **report_json) {
  return guarded([&] {
    require_non_null(report_json);
    *report_json = copy_string(wick::dump(wick::to_json(wick::probe_suite(max_dim, max_degree, trials, seed))));
  });
}

wick_status wick_ccr_suite(size_t dim, int max_degree, uint64_t random_trials, uint64_t seed, char **report_json) {
  return guarded([&] {
    require_non_null(report_json);
    *report_json = copy_string(wick::dump(wick::to_json(wick::ccr_suite(dim, max_degree, random_trials, seed))));
  });
}

wick_status wick_hs_demo(double horizon, size_t min_cells, size_t max_cells, char **report_json) {
  return guarded([&] {
    require_non_null(report_json);
    *report_json = copy_string(wick::dump(wick::to_json(wick::hs_demo(horizon, min_cells, max_cells))));
  });
}

}  // extern "C"
