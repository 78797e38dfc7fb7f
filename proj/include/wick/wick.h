/*
 * Copyright 2026 The wickcalc Authors
 * SPDX-License-Identifier: Apache-2.0
 */

/*
 * C interface to the wickcalc library.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns a wick_status; on
 * failure the output handle is left untouched and wick_last_error_message()
 * / wick_last_error_context() describe the failure for the calling thread.
 * Strings returned through char** are heap-allocated and must be released
 * with wick_string_free.
 */

#ifndef WICK_WICK_H
#define WICK_WICK_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(WICK_BUILDING_LIBRARY)
#    define WICK_API __declspec(dllexport)
#  else
#    define WICK_API __declspec(dllimport)
#  endif
#else
#  define WICK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

#define WICK_VERSION_STRING "1.0.0"

typedef enum wick_status {
  WICK_OK = 0,
  WICK_ERR_DIMENSION_MISMATCH = 1,
  WICK_ERR_DEGREE_CAP = 2,
  WICK_ERR_DEGREE_TOO_HIGH = 3,
  WICK_ERR_INDEX_OUT_OF_RANGE = 4,
  WICK_ERR_NON_INVERTIBLE = 5,
  WICK_ERR_ZERO_EXPANSION = 6,
  WICK_ERR_RULE_TOO_COARSE = 7,
  WICK_ERR_DIMENSION_TOO_LARGE = 8,
  WICK_ERR_UNALIGNED_TIME = 9,
  WICK_ERR_COMPLEX_COEFFICIENTS = 10,
  WICK_ERR_SCHEMA = 11,
  WICK_ERR_INVALID_ARGUMENT = 12,
  WICK_ERR_INTERNAL = 13
} wick_status;

typedef enum wick_product_mode { WICK_PRODUCT_EXACT = 0, WICK_PRODUCT_CAPPED = 1 } wick_product_mode;
typedef enum wick_kernel_sign { WICK_KERNEL_PLUS = 0, WICK_KERNEL_MINUS = 1 } wick_kernel_sign;
typedef enum wick_gbm_method { WICK_GBM_CLOSED_FORM = 0, WICK_GBM_WICK_EULER = 1 } wick_gbm_method;

typedef struct wick_complex {
  double re;
  double im;
} wick_complex;

/* A truncated chaos expansion. */
typedef struct wick_expansion wick_expansion;
/* A functional handle for the growth checker. */
typedef struct wick_functional wick_functional;

/* Vanishing factor codes for wick_probe_report. */
#define WICK_VANISHING_NONE 0
#define WICK_VANISHING_FIRST 1
#define WICK_VANISHING_SECOND 2
#define WICK_VANISHING_BOTH 3

typedef struct wick_probe_report {
  int product_is_zero;
  int lowest_degree_a;
  int lowest_degree_b;
  int vanishing_factor;
  size_t product_terms;
} wick_probe_report;

typedef struct wick_moment_report {
  double mean;
  double second_moment;
  double variance;
  double mc_mean;   /* NaN when samples == 0 */
  double mc_stderr; /* NaN when samples == 0 */
  uint64_t samples;
  uint64_t seed;
} wick_moment_report;

/* ---- library ---------------------------------------------------------- */

WICK_API const char *wick_version(void);
/* Stable snake_case code name, e.g. "non_invertible". */
WICK_API const char *wick_status_name(wick_status status);
WICK_API const char *wick_last_error_message(void);
WICK_API const char *wick_last_error_context(void);
WICK_API void wick_string_free(char *s);
WICK_API wick_status wick_set_thread_count(unsigned n);
WICK_API unsigned wick_get_thread_count(void);

/* ---- expansions ------------------------------------------------------- */

WICK_API wick_status wick_expansion_zero(size_t dim, int max_degree, wick_expansion **out);
WICK_API wick_status wick_expansion_clone(const wick_expansion *a, wick_expansion **out);
WICK_API void wick_expansion_free(wick_expansion *a);
/* Adds c to the coefficient of the index given by parallel arrays
 * (dims strictly increasing, exponents positive). */
WICK_API wick_status wick_expansion_add_term(wick_expansion *a, const uint32_t *dims, const uint32_t *exponents,
                                             size_t n, wick_complex c);
WICK_API wick_status wick_expansion_coefficient(const wick_expansion *a, const uint32_t *dims,
                                                const uint32_t *exponents, size_t n, wick_complex *out);
WICK_API size_t wick_expansion_dim(const wick_expansion *a);
WICK_API int wick_expansion_max_degree(const wick_expansion *a);
WICK_API size_t wick_expansion_term_count(const wick_expansion *a);
/* 1 when dim, max_degree and every coefficient agree exactly. */
WICK_API int wick_expansion_equal(const wick_expansion *a, const wick_expansion *b);
WICK_API wick_status wick_expansion_from_json(const char *json, wick_expansion **out);
WICK_API wick_status wick_expansion_to_json(const wick_expansion *a, char **out);
WICK_API wick_status wick_expansion_add(const wick_expansion *a, const wick_expansion *b, wick_expansion **out);
WICK_API wick_status wick_expansion_sub(const wick_expansion *a, const wick_expansion *b, wick_expansion **out);
WICK_API wick_status wick_expansion_scale(const wick_expansion *a, wick_complex s, wick_expansion **out);
WICK_API wick_status wick_coordinate(size_t dim, int max_degree, uint32_t i, wick_expansion **out);

/* ---- chaos algebra ---------------------------------------------------- */

WICK_API wick_status wick_unit(size_t dim, int max_degree, wick_expansion **out);
WICK_API wick_status wick_product(const wick_expansion *a, const wick_expansion *b, wick_product_mode mode,
                                  wick_expansion **out);
WICK_API wick_status wick_power(const wick_expansion *a, int k, wick_expansion **out);
WICK_API wick_status wick_exp(const wick_expansion *a, wick_expansion **out);
WICK_API wick_status wick_inverse(const wick_expansion *a, wick_expansion **out);
WICK_API wick_status wick_lowest_part(const wick_expansion *a, wick_expansion **out);
WICK_API wick_status wick_truncate(const wick_expansion *a, int new_max_degree, wick_expansion **out);
WICK_API wick_status wick_l2_norm_sq(const wick_expansion *a, double *out);
WICK_API wick_status wick_gaussian_kernel(size_t dim, int max_degree, wick_kernel_sign sign, wick_expansion **out);
WICK_API wick_status wick_delta0(size_t dim, int max_degree, wick_expansion **out);
WICK_API wick_status wick_convolution(const wick_expansion *a, const wick_expansion *b, wick_expansion **out);
/* report_json may be NULL; otherwise receives the full report with witness. */
WICK_API wick_status wick_zero_divisor_probe(const wick_expansion *a, const wick_expansion *b,
                                             wick_probe_report *report, char **report_json);

/* ---- transforms ------------------------------------------------------- */

WICK_API wick_status wick_hermite_eval(int n, wick_complex x, wick_complex *out);
WICK_API wick_status wick_chaos_eval(const wick_expansion *a, const wick_complex *x, size_t n, wick_complex *out);
WICK_API wick_status wick_s_transform(const wick_expansion *a, const wick_complex *xi, size_t n, wick_complex *out);
WICK_API wick_status wick_t_transform(const wick_expansion *a, const wick_complex *xi, size_t n, wick_complex *out);
/* Gauss–Hermite quadrature oracles with `order` nodes per axis (dim <= 3). */
WICK_API wick_status wick_s_transform_quadrature(const wick_expansion *a, const double *xi, size_t n, int order,
                                                 wick_complex *out);
WICK_API wick_status wick_t_transform_quadrature(const wick_expansion *a, const double *xi, size_t n, int order,
                                                 wick_complex *out);
/* Probabilists' Gauss–Hermite nodes and weights; both arrays hold `order`. */
WICK_API wick_status wick_quadrature_rule(int order, double *nodes, double *weights);

/* ---- CCR operators ---------------------------------------------------- */

WICK_API wick_status wick_annihilate(uint32_t i, const wick_expansion *a, wick_expansion **out);
WICK_API wick_status wick_create(uint32_t i, const wick_expansion *a, wick_expansion **out);
WICK_API wick_status wick_ccr_commutator(uint32_t i, uint32_t j, const wick_expansion *a, wick_expansion **out);
/* headroom < 0 selects the smallest exact headroom. */
WICK_API wick_status wick_pointwise_product(const wick_expansion *a, const wick_expansion *b, int headroom,
                                            wick_expansion **out);
WICK_API wick_status wick_multiply_coordinate(uint32_t i, const wick_expansion *a, wick_expansion **out);
WICK_API wick_status wick_pairing(const wick_expansion *a, const wick_expansion *b, wick_complex *out);
/* Exact coefficients of (x - d/dx)^n 1 (n + 1 entries, ascending powers) and,
 * when text is non-NULL, the rendered form such as "x^3 - 3*x". */
WICK_API wick_status wick_hermite_generate(int n, int64_t *coefficients, size_t capacity, char **text);
WICK_API wick_status wick_adjointness_check(const wick_complex *f, size_t nf, const wick_complex *g, size_t ng,
                                            int order, wick_complex *left, wick_complex *right);

/* ---- growth checks ---------------------------------------------------- */

WICK_API wick_status wick_osc_norm(const double *xi, size_t n, unsigned p, double *out);
WICK_API wick_status wick_functional_from_expansion(const wick_expansion *a, wick_functional **out);
/* name: exp_linear | exp_cubic | abs_z | gaussian_kernel_s */
WICK_API wick_status wick_functional_closed_form(const char *name, wick_functional **out);
WICK_API void wick_functional_free(wick_functional *f);
/* radii may be NULL (nr == 0) for the default ladder 0.5 * 2^k, k = 0..5. */
WICK_API wick_status wick_ray_growth_fit(const wick_functional *f, const double *xi, size_t n, unsigned p,
                                         const double *radii, size_t nr, int phases, char **report_json);
WICK_API wick_status wick_entirety_check(const wick_functional *f, const double *xi, const double *eta, size_t n,
                                         int *out);

/* ---- operational calculus --------------------------------------------- */

WICK_API wick_status wick_brownian(double horizon, size_t cells, double t, int max_degree, wick_expansion **out);
WICK_API wick_status wick_white_noise(double horizon, size_t cells, uint32_t i, int max_degree,
                                      wick_expansion **out);
WICK_API wick_status wick_hs_integral(double horizon, size_t cells, const wick_expansion *const *integrand,
                                      size_t n, wick_expansion **out);
WICK_API wick_status wick_solve_linear(const wick_expansion *a, const wick_expansion *b, wick_expansion **out);
WICK_API wick_status wick_solve_gbm(double horizon, size_t cells, int max_degree, wick_gbm_method method,
                                    wick_expansion **out);
WICK_API wick_status wick_moments(const wick_expansion *a, uint64_t mc_samples, uint64_t seed,
                                  wick_moment_report *out);
/* Moments plus per-degree L2 mass as JSON; see the README for the layout. */
WICK_API wick_status wick_gbm_report(double horizon, size_t cells, int max_degree, wick_gbm_method method,
                                     uint64_t mc_samples, uint64_t seed, char **report_json);

/* ---- batch diagnostics (JSON reports) --------------------------------- */

WICK_API wick_status wick_probe_suite(size_t max_dim, int max_degree, uint64_t trials, uint64_t seed,
                                      char **report_json);
WICK_API wick_status wick_ccr_suite(size_t dim, int max_degree, uint64_t random_trials, uint64_t seed,
                                    char **report_json);
WICK_API wick_status wick_hs_demo(double horizon, size_t min_cells, size_t max_cells, char **report_json);

#ifdef __cplusplus
}
#endif

#endif /* WICK_WICK_H */
