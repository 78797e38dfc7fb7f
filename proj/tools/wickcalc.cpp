// Copyright 2026 The wickcalc Authors
// SPDX-License-Identifier: Apache-2.0

// wickcalc: command-line front end to the wick C library.
//
// Exit codes: 0 success, 1 validation error (structured JSON on stderr),
// 2 usage error (usage text on stderr).

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "wick/wick.h"

namespace {

using nlohmann::json;

constexpr int kMaxDim = 12;
constexpr int kMaxDegree = 20;

struct Failure {
  std::string code;
  std::string message;
  std::string context;
};

[[noreturn]] void fail(std::string code, std::string message, std::string context = {}) {
  throw Failure{std::move(code), std::move(message), std::move(context)};
}

void check(wick_status status) {
  if (status != WICK_OK) fail(wick_status_name(status), wick_last_error_message(), wick_last_error_context());
}

struct ExpansionDeleter {
  void operator()(wick_expansion *a) const { wick_expansion_free(a); }
};
using Expansion = std::unique_ptr<wick_expansion, ExpansionDeleter>;

struct FunctionalDeleter {
  void operator()(wick_functional *f) const { wick_functional_free(f); }
};
using Functional = std::unique_ptr<wick_functional, FunctionalDeleter>;

// Takes ownership of a string allocated by the library.
std::string take(char *s) {
  std::string out = s ? s : "";
  wick_string_free(s);
  return out;
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("invalid_argument", "cannot read input file", path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text(const std::string &path, const std::string &text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail("invalid_argument", "cannot open output file", path);
  out << text;
  if (!out) fail("internal", "write failed", path);
}

std::string dump(const json &j) { return j.dump(2) + "\n"; }

std::string number(double x) {
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, result.ptr);
}

Expansion load_expansion(const std::string &path) {
  wick_expansion *raw = nullptr;
  check(wick_expansion_from_json(read_file(path).c_str(), &raw));
  return Expansion(raw);
}

void require_dim(int n, const char *flag) {
  if (n < 1 || n > kMaxDim)
    fail("invalid_argument", "dimension must be in [1, " + std::to_string(kMaxDim) + "]", std::string(flag) + " " + std::to_string(n));
}

void require_degree(int d, const char *flag) {
  if (d < 0 || d > kMaxDegree)
    fail("degree_cap", "degree must be in [0, " + std::to_string(kMaxDegree) + "]", std::string(flag) + " " + std::to_string(d));
}

struct Common {
  std::string out;
  std::string csv;
  unsigned threads = 1;
};

// ---- subcommands ----------------------------------------------------------

struct ProbeArgs {
  int n = 4;
  int d = 6;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  std::string a_path, b_path;
};

void run_probe(const Common &common, const ProbeArgs &args) {
  if (!args.a_path.empty() || !args.b_path.empty()) {
    if (args.a_path.empty() || args.b_path.empty())
      fail("invalid_argument", "--a and --b must be given together");
    const Expansion a = load_expansion(args.a_path);
    const Expansion b = load_expansion(args.b_path);
    wick_probe_report report;
    char *text = nullptr;
    check(wick_zero_divisor_probe(a.get(), b.get(), &report, &text));
    write_text(common.out, take(text));
    return;
  }
  require_dim(args.n, "--N");
  require_degree(args.d, "--D");
  char *text = nullptr;
  check(wick_probe_suite(static_cast<std::size_t>(args.n), args.d, args.trials, args.seed, &text));
  write_text(common.out, take(text));
}

struct GbmArgs {
  double horizon = 1.0;
  std::size_t cells = 32;
  int degree = 10;
  std::string method = "closed_form";
  std::uint64_t mc_samples = 0;
  std::uint64_t seed = 0;
};

void run_gbm(const Common &common, const GbmArgs &args) {
  require_degree(args.degree, "--degree");
  char *text = nullptr;
  const wick_gbm_method method = args.method == "closed_form" ? WICK_GBM_CLOSED_FORM : WICK_GBM_WICK_EULER;
  check(wick_gbm_report(args.horizon, args.cells, args.degree, method, args.mc_samples, args.seed, &text));
  const std::string report = take(text);
  if (!common.csv.empty()) {
    const json j = json::parse(report);
    std::string table = "degree,l2_mass\n";
    const auto &mass = j.at("degree_mass");
    for (std::size_t k = 0; k < mass.size(); ++k) table += std::to_string(k) + "," + number(mass[k].get<double>()) + "\n";
    write_text(common.csv, table);
  }
  write_text(common.out, report);
}

struct GrowthArgs {
  std::string input;
  std::string functional;
  std::vector<double> xi{1.0};
  std::vector<double> eta;
  unsigned p = 0;
  std::vector<double> radii;
  int phases = 32;
};

void run_growth(const Common &common, const GrowthArgs &args) {
  if (args.input.empty() == args.functional.empty())
    fail("invalid_argument", "exactly one of --input and --functional is required");
  wick_functional *raw = nullptr;
  if (!args.input.empty()) {
    const Expansion a = load_expansion(args.input);
    check(wick_functional_from_expansion(a.get(), &raw));
  } else {
    check(wick_functional_closed_form(args.functional.c_str(), &raw));
  }
  const Functional f(raw);
  char *text = nullptr;
  check(wick_ray_growth_fit(f.get(), args.xi.data(), args.xi.size(), args.p, args.radii.data(), args.radii.size(),
                            args.phases, &text));
  json report = json::parse(take(text));
  std::vector<double> eta = args.eta;
  if (eta.empty()) eta.assign(args.xi.size(), 0.0);
  if (eta.size() != args.xi.size()) fail("dimension_mismatch", "--eta must have the same length as --xi");
  int entire = 0;
  check(wick_entirety_check(f.get(), args.xi.data(), eta.data(), args.xi.size(), &entire));
  report["entire"] = entire != 0;
  if (!common.csv.empty()) {
    std::string table = "r,log_max_abs\n";
    for (const auto &s : report.at("samples"))
      table += number(s.at("r").get<double>()) + "," + number(s.at("log_max_abs").get<double>()) + "\n";
    write_text(common.csv, table);
  }
  write_text(common.out, dump(report));
}

struct CcrArgs {
  int n = 3;
  int d = 5;
  std::uint64_t trials = 100;
  std::uint64_t seed = 0;
};

void run_ccr(const Common &common, const CcrArgs &args) {
  require_dim(args.n, "--N");
  require_degree(args.d, "--D");
  char *text = nullptr;
  check(wick_ccr_suite(static_cast<std::size_t>(args.n), args.d, args.trials, args.seed, &text));
  write_text(common.out, take(text));
}

struct EvalArgs {
  std::string input;
  std::vector<double> xi;
  std::vector<double> xi_im;
  int order = 0;
};

json complex_json(wick_complex c) { return {{"re", c.re}, {"im", c.im}}; }

void run_eval(const Common &common, const EvalArgs &args, bool t_transform) {
  const Expansion a = load_expansion(args.input);
  std::vector<double> im = args.xi_im;
  if (im.empty()) im.assign(args.xi.size(), 0.0);
  if (im.size() != args.xi.size()) fail("dimension_mismatch", "--xi-im must have the same length as --xi");
  std::vector<wick_complex> xi(args.xi.size());
  bool real = true;
  for (std::size_t k = 0; k < xi.size(); ++k) {
    xi[k] = {args.xi[k], im[k]};
    real = real && im[k] == 0.0;
  }
  wick_complex value;
  check(t_transform ? wick_t_transform(a.get(), xi.data(), xi.size(), &value)
                    : wick_s_transform(a.get(), xi.data(), xi.size(), &value));
  json out = {{"transform", t_transform ? "T" : "S"}, {"value", complex_json(value)}};
  if (args.order > 0) {
    if (!real) fail("invalid_argument", "quadrature needs a real --xi");
    wick_complex oracle;
    check(t_transform ? wick_t_transform_quadrature(a.get(), args.xi.data(), args.xi.size(), args.order, &oracle)
                      : wick_s_transform_quadrature(a.get(), args.xi.data(), args.xi.size(), args.order, &oracle));
    out["quadrature"] = {{"order", args.order}, {"value", complex_json(oracle)}};
  }
  write_text(common.out, dump(out));
}

void run_hermite(const Common &common, int n, bool as_json) {
  if (n < 0 || n > 30) fail("invalid_argument", "n must be in [0, 30]", "--n " + std::to_string(n));
  std::vector<std::int64_t> coefficients(static_cast<std::size_t>(n) + 1);
  char *text = nullptr;
  check(wick_hermite_generate(n, coefficients.data(), coefficients.size(), &text));
  const std::string rendered = take(text);
  if (as_json)
    write_text(common.out, dump({{"n", n}, {"coefficients", coefficients}, {"text", rendered}}));
  else
    write_text(common.out, rendered + "\n");
}

struct HsArgs {
  double horizon = 1.0;
  std::size_t min_cells = 4;
  std::size_t max_cells = 64;
};

void run_hs(const Common &common, const HsArgs &args) {
  char *text = nullptr;
  check(wick_hs_demo(args.horizon, args.min_cells, args.max_cells, &text));
  const std::string report = take(text);
  if (!common.csv.empty()) {
    const json rows = json::parse(report);
    std::string table = "M,dt,integral_second_moment,isometry_rhs,exact_sum,continuum,mean\n";
    for (const auto &r : rows)
      table += std::to_string(r.at("M").get<std::size_t>()) + "," + number(r.at("dt").get<double>()) + "," +
               number(r.at("integral_second_moment").get<double>()) + "," + number(r.at("isometry_rhs").get<double>()) +
               "," + number(r.at("exact_sum").get<double>()) + "," + number(r.at("continuum").get<double>()) + "," +
               number(r.at("mean").get<double>()) + "\n";
    write_text(common.csv, table);
  }
  write_text(common.out, report);
}

void run_convert(const Common &common, const std::string &input) {
  const Expansion a = load_expansion(input);
  char *text = nullptr;
  check(wick_expansion_to_json(a.get(), &text));
  write_text(common.out, take(text));
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"wickcalc: truncated Wiener-chaos calculus"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--threads", common.threads, "Worker threads (results do not depend on it)")
      ->check(CLI::Range(1u, 256u));

  auto add_io = [&common](CLI::App *sub, bool csv) {
    sub->add_option("--out", common.out, "Output path (default stdout)");
    if (csv) sub->add_option("--csv", common.csv, "Write the sample table as CSV to this path");
  };

  ProbeArgs probe;
  auto *probe_cmd = app.add_subcommand("probe-zero-divisor", "Zero-divisor probe on seeded random pairs or on --a/--b");
  probe_cmd->add_option("--N", probe.n, "Largest dimension");
  probe_cmd->add_option("--D", probe.d, "Largest degree cap");
  probe_cmd->add_option("--trials", probe.trials, "Number of random pairs");
  auto *probe_seed = probe_cmd->add_option("--seed", probe.seed, "Random seed");
  auto *probe_a = probe_cmd->add_option("--a", probe.a_path, "First expansion (JSON file)");
  probe_cmd->add_option("--b", probe.b_path, "Second expansion (JSON file)");
  add_io(probe_cmd, false);

  GbmArgs gbm;
  auto *gbm_cmd = app.add_subcommand("solve-gbm", "Wick GBM dX = X◇dB: moments and per-degree mass");
  gbm_cmd->add_option("--T", gbm.horizon, "Horizon")->required();
  gbm_cmd->add_option("--M", gbm.cells, "Grid cells")->required();
  gbm_cmd->add_option("--degree", gbm.degree, "Degree cap")->required();
  gbm_cmd->add_option("--method", gbm.method, "closed_form | wick_euler")
      ->check(CLI::IsMember({"closed_form", "wick_euler"}));
  gbm_cmd->add_option("--mc-samples", gbm.mc_samples, "Monte Carlo samples");
  gbm_cmd->add_option("--seed", gbm.seed, "Random seed")->required();
  add_io(gbm_cmd, true);

  GrowthArgs growth;
  auto *growth_cmd = app.add_subcommand("check-growth", "Ray growth fit and entirety check");
  growth_cmd->add_option("--input", growth.input, "Expansion (JSON file)");
  growth_cmd->add_option("--functional", growth.functional, "exp_linear | exp_cubic | abs_z | gaussian_kernel_s");
  growth_cmd->add_option("--xi", growth.xi, "Hermite coordinates of the test direction")->delimiter(',');
  growth_cmd->add_option("--eta", growth.eta, "Offset for the entirety check (default 0)")->delimiter(',');
  growth_cmd->add_option("--p", growth.p, "Oscillator power");
  growth_cmd->add_option("--radii", growth.radii, "Increasing radii (default 0.5*2^k, k=0..5)")->delimiter(',');
  growth_cmd->add_option("--phases", growth.phases, "Phases per radius");
  add_io(growth_cmd, true);

  CcrArgs ccr;
  auto *ccr_cmd = app.add_subcommand("ccr-check", "CCR, quantum decomposition and duality checks");
  ccr_cmd->add_option("--N", ccr.n, "Dimension");
  ccr_cmd->add_option("--D", ccr.d, "Degree cap");
  ccr_cmd->add_option("--trials", ccr.trials, "Random expansions");
  ccr_cmd->add_option("--seed", ccr.seed, "Random seed")->required();
  add_io(ccr_cmd, false);

  EvalArgs s_eval, t_eval;
  auto add_eval = [&](const char *name, const char *help, EvalArgs &args) {
    auto *cmd = app.add_subcommand(name, help);
    cmd->add_option("--input", args.input, "Expansion (JSON file)")->required();
    cmd->add_option("--xi", args.xi, "Real parts of xi")->delimiter(',')->required();
    cmd->add_option("--xi-im", args.xi_im, "Imaginary parts of xi")->delimiter(',');
    cmd->add_option("--order", args.order, "Also evaluate the quadrature oracle with this many nodes");
    add_io(cmd, false);
    return cmd;
  };
  auto *s_cmd = add_eval("s-eval", "Evaluate the S-transform", s_eval);
  auto *t_cmd = add_eval("t-eval", "Evaluate the T-transform", t_eval);

  int hermite_n = 0;
  bool hermite_json = false;
  auto *hermite_cmd = app.add_subcommand("hermite", "Symbolic (x - d/dx)^n 1");
  hermite_cmd->add_option("--n", hermite_n, "Order")->required();
  hermite_cmd->add_flag("--json", hermite_json, "Emit JSON with integer coefficients");
  add_io(hermite_cmd, false);

  HsArgs hs;
  auto *hs_cmd = app.add_subcommand("hs-demo", "Discrete Ito isometry table for the integral of B dB");
  hs_cmd->add_option("--T", hs.horizon, "Horizon");
  hs_cmd->add_option("--min-M", hs.min_cells, "Smallest grid");
  hs_cmd->add_option("--max-M", hs.max_cells, "Largest grid");
  add_io(hs_cmd, true);

  std::string convert_in;
  std::string convert_format = "json";
  auto *convert_cmd = app.add_subcommand("convert", "Validate and canonicalize an expansion");
  convert_cmd->add_option("--in", convert_in, "Input path")->required();
  convert_cmd->add_option("--format", convert_format, "Output format")->check(CLI::IsMember({"json"}));
  add_io(convert_cmd, false);

  try {
    app.parse(argc, argv);
    if (*probe_cmd && probe_a->count() == 0 && probe_seed->count() == 0)
      throw CLI::RequiredError("--seed");
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    check(wick_set_thread_count(common.threads));
    if (*probe_cmd) run_probe(common, probe);
    else if (*gbm_cmd) run_gbm(common, gbm);
    else if (*growth_cmd) run_growth(common, growth);
    else if (*ccr_cmd) run_ccr(common, ccr);
    else if (*s_cmd) run_eval(common, s_eval, false);
    else if (*t_cmd) run_eval(common, t_eval, true);
    else if (*hermite_cmd) run_hermite(common, hermite_n, hermite_json);
    else if (*hs_cmd) run_hs(common, hs);
    else if (*convert_cmd) run_convert(common, convert_in);
  } catch (const Failure &f) {
    std::cerr << json{{"code", f.code}, {"message", f.message}, {"context", f.context}}.dump() << "\n";
    return 1;
  } catch (const json::exception &e) {
    std::cerr << json{{"code", "internal"}, {"message", e.what()}, {"context", ""}}.dump() << "\n";
    return 1;
  }
  return 0;
}
