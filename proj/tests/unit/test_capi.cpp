// Copyright 2026 The wickcalc Authors
// SPDX-License-Identifier: Apache-2.0

// Exercises the shared library through its C interface only.

#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <string>

#include "wick/wick.h"

namespace {

struct Handle {
  wick_expansion *p = nullptr;
  ~Handle() { wick_expansion_free(p); }
};

std::string take(char *s) {
  std::string out = s;
  wick_string_free(s);
  return out;
}

}  // namespace

TEST(CApi, VersionAndNames) {
  EXPECT_STREQ(wick_version(), "1.0.0");
  EXPECT_STREQ(wick_status_name(WICK_OK), "ok");
  EXPECT_STREQ(wick_status_name(WICK_ERR_NON_INVERTIBLE), "non_invertible");
  EXPECT_STREQ(wick_status_name(WICK_ERR_SCHEMA), "schema");
}

TEST(CApi, BuildProductAndRead) {
  Handle x0, x1, p;
  ASSERT_EQ(wick_coordinate(2, 3, 0, &x0.p), WICK_OK);
  ASSERT_EQ(wick_coordinate(2, 3, 1, &x1.p), WICK_OK);
  ASSERT_EQ(wick_product(x0.p, x1.p, WICK_PRODUCT_EXACT, &p.p), WICK_OK);
  EXPECT_EQ(wick_expansion_max_degree(p.p), 6);
  EXPECT_EQ(wick_expansion_term_count(p.p), 1u);
  const uint32_t dims[] = {0, 1};
  const uint32_t exps[] = {1, 1};
  wick_complex c;
  ASSERT_EQ(wick_expansion_coefficient(p.p, dims, exps, 2, &c), WICK_OK);
  EXPECT_EQ(c.re, 1.0);
  EXPECT_EQ(c.im, 0.0);
}

TEST(CApi, ErrorsCarryCodeMessageAndContext) {
  Handle x0, out;
  ASSERT_EQ(wick_coordinate(1, 3, 0, &x0.p), WICK_OK);
  EXPECT_EQ(wick_inverse(x0.p, &out.p), WICK_ERR_NON_INVERTIBLE);
  EXPECT_EQ(out.p, nullptr);
  EXPECT_GT(std::strlen(wick_last_error_message()), 0u);

  EXPECT_EQ(wick_expansion_from_json(R"({"dim":1,"max_degree":1,"terms":[{"alpha":[[0,2]],"re":1,"im":0}]})", &out.p),
            WICK_ERR_SCHEMA);
  EXPECT_NE(std::string(wick_last_error_context()).find("terms[0]"), std::string::npos);

  EXPECT_EQ(wick_expansion_zero(1, 2, nullptr), WICK_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(wick_set_thread_count(0), WICK_ERR_INVALID_ARGUMENT);
  Handle ok;
  EXPECT_EQ(wick_unit(1, 1, &ok.p), WICK_OK);
  EXPECT_STREQ(wick_last_error_message(), "");
}

TEST(CApi, JsonRoundTrip) {
  Handle a, b;
  ASSERT_EQ(wick_expansion_zero(2, 4, &a.p), WICK_OK);
  const uint32_t dims[] = {0, 1};
  const uint32_t exps[] = {2, 1};
  ASSERT_EQ(wick_expansion_add_term(a.p, dims, exps, 2, {0.1, -0.3}), WICK_OK);
  ASSERT_EQ(wick_expansion_add_term(a.p, nullptr, nullptr, 0, {1.0 / 3.0, 0.0}), WICK_OK);
  char *text = nullptr;
  ASSERT_EQ(wick_expansion_to_json(a.p, &text), WICK_OK);
  const std::string json = take(text);
  ASSERT_EQ(wick_expansion_from_json(json.c_str(), &b.p), WICK_OK);
  EXPECT_EQ(wick_expansion_equal(a.p, b.p), 1);
}

TEST(CApi, TransformsAndQuadrature) {
  Handle u;
  ASSERT_EQ(wick_unit(1, 2, &u.p), WICK_OK);
  const wick_complex xi{1.0, 0.0};
  wick_complex t;
  ASSERT_EQ(wick_t_transform(u.p, &xi, 1, &t), WICK_OK);
  EXPECT_NEAR(t.re, std::exp(-0.5), 1e-15);
  const double xr = 1.0;
  ASSERT_EQ(wick_t_transform_quadrature(u.p, &xr, 1, 16, &t), WICK_OK);
  EXPECT_NEAR(t.re, std::exp(-0.5), 1e-6);
  EXPECT_EQ(wick_t_transform_quadrature(u.p, &xr, 1, 4, &t), WICK_ERR_RULE_TOO_COARSE);
  double nodes[3], weights[3];
  ASSERT_EQ(wick_quadrature_rule(3, nodes, weights), WICK_OK);
  EXPECT_NEAR(nodes[2], std::sqrt(3.0), 1e-14);
  EXPECT_NEAR(weights[1], 2.0 / 3.0, 1e-15);
}

TEST(CApi, HermiteAndAdjointness) {
  int64_t coeffs[4];
  char *text = nullptr;
  ASSERT_EQ(wick_hermite_generate(3, coeffs, 4, &text), WICK_OK);
  EXPECT_EQ(take(text), "x^3 - 3*x");
  EXPECT_EQ(coeffs[1], -3);
  EXPECT_EQ(wick_hermite_generate(3, coeffs, 2, nullptr), WICK_ERR_INVALID_ARGUMENT);
  const wick_complex f[] = {{0, 0}, {1, 0}};
  const wick_complex g[] = {{0, 0}, {0, 0}, {1, 0}};
  wick_complex l, r;
  ASSERT_EQ(wick_adjointness_check(f, 2, g, 3, 8, &l, &r), WICK_OK);
  EXPECT_NEAR(l.re, 2.0, 1e-13);
  EXPECT_NEAR(r.re, 2.0, 1e-13);
}

TEST(CApi, ProbeReport) {
  Handle a, b;
  ASSERT_EQ(wick_expansion_zero(2, 2, &a.p), WICK_OK);
  ASSERT_EQ(wick_coordinate(2, 2, 1, &b.p), WICK_OK);
  wick_probe_report report;
  ASSERT_EQ(wick_zero_divisor_probe(a.p, b.p, &report, nullptr), WICK_OK);
  EXPECT_EQ(report.product_is_zero, 1);
  EXPECT_EQ(report.vanishing_factor, WICK_VANISHING_FIRST);
}

TEST(CApi, GrowthAndOperational) {
  wick_functional *f = nullptr;
  ASSERT_EQ(wick_functional_closed_form("exp_cubic", &f), WICK_OK);
  const double xi = 1.0;
  char *text = nullptr;
  ASSERT_EQ(wick_ray_growth_fit(f, &xi, 1, 0, nullptr, 0, 32, &text), WICK_OK);
  EXPECT_NE(take(text).find("super-quadratic"), std::string::npos);
  int entire = -1;
  const double eta = 0.0, half = 0.5;
  ASSERT_EQ(wick_entirety_check(f, &half, &eta, 1, &entire), WICK_OK);
  EXPECT_EQ(entire, 1);
  wick_functional_free(f);
  EXPECT_EQ(wick_functional_closed_form("bogus", &f), WICK_ERR_INVALID_ARGUMENT);

  Handle b;
  EXPECT_EQ(wick_brownian(1.0, 4, 0.3, 2, &b.p), WICK_ERR_UNALIGNED_TIME);
  ASSERT_EQ(wick_brownian(1.0, 4, 0.5, 2, &b.p), WICK_OK);
  wick_moment_report m;
  ASSERT_EQ(wick_moments(b.p, 0, 1, &m), WICK_OK);
  EXPECT_EQ(m.second_moment, 0.5);
  EXPECT_TRUE(std::isnan(m.mc_mean));

  Handle one, integral;
  ASSERT_EQ(wick_unit(4, 2, &one.p), WICK_OK);
  const wick_expansion *integrand[] = {one.p, one.p, one.p, one.p};
  ASSERT_EQ(wick_hs_integral(1.0, 4, integrand, 4, &integral.p), WICK_OK);
  Handle bt;
  ASSERT_EQ(wick_brownian(1.0, 4, 1.0, 2, &bt.p), WICK_OK);
  EXPECT_EQ(wick_expansion_equal(integral.p, bt.p), 1);

  ASSERT_EQ(wick_gbm_report(1.0, 32, 10, WICK_GBM_CLOSED_FORM, 0, 1, &text), WICK_OK);
  EXPECT_NE(take(text).find("\"symmetric\""), std::string::npos);
}
