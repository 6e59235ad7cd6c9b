// Copyright 2026 the sl2sr authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// sl2: command-line surface over the sl2sr C API.  Every command emits one
// machine-readable document (json or csv, schema_version 1) to stdout or
// --out.  Exit codes: 0 success, 1 usage or input error, 2 numerical
// failure (search failed, or a verify suite reported failures).

#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sl2sr/sl2sr.h"

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;
constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;

// All reals serialize with 17 significant digits so a double round-trips
// exactly through the text form.
std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

// json stores numbers; to guarantee the 17-digit text form we serialize
// doubles as preformatted strings only in csv, and rely on nlohmann's
// shortest-round-trip output (also exact) in json.

struct OutputOptions {
  std::string format;  // "json" or "csv"
  std::string out;     // empty = stdout
};

void add_output_flags(CLI::App* cmd, OutputOptions* opts,
                      const std::string& default_format) {
  opts->format = default_format;
  cmd->add_option("--format", opts->format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", opts->out, "write output to a file");
}

int emit(const OutputOptions& opts, const ordered_json& doc,
         const std::vector<std::string>& csv_columns,
         const std::vector<std::vector<std::string>>& csv_rows) {
  std::string text;
  if (opts.format == "json") {
    text = doc.dump(2);
    text += '\n';
  } else {
    text = "# schema_version=" + std::to_string(kSchemaVersion) + "\n";
    for (size_t i = 0; i < csv_columns.size(); ++i)
      text += (i ? "," : "") + csv_columns[i];
    text += '\n';
    for (const auto& row : csv_rows) {
      for (size_t i = 0; i < row.size(); ++i)
        text += (i ? "," : "") + row[i];
      text += '\n';
    }
  }
  if (opts.out.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(opts.out, std::ios::binary);
  if (!f) {
    std::cerr << "sl2: cannot open " << opts.out << " for writing\n";
    return kExitUsage;
  }
  f << text;
  return 0;
}

double match_tolerance() {
  const char* env = std::getenv("SL2_TOL");
  if (!env || !*env) return 1e-8;
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(v > 0.0)) {
    std::cerr << "sl2: SL2_TOL must be a positive real, got '" << env << "'\n";
    std::exit(kExitUsage);
  }
  return v;
}

// Input errors (bad matrices, bad parameter ranges) exit 1; numerical
// failures (search exhausted) exit 2.
int exit_code_for(sl2sr_status s) {
  return s == SL2SR_ERR_SEARCH_FAILED ? kExitNumerical : kExitUsage;
}

[[noreturn]] void fail(sl2sr_status s, const std::string& context) {
  std::cerr << "sl2: " << context << ": " << sl2sr_status_message(s);
  const char* detail = sl2sr_last_error();
  if (detail && *detail) std::cerr << " (" << detail << ")";
  std::cerr << '\n';
  std::exit(exit_code_for(s));
}

void check(sl2sr_status s, const std::string& context) {
  if (s != SL2SR_OK) fail(s, context);
}

// Re-check at serialization that an emitted matrix is unimodular.  The
// tolerance is relative to the squared norm: det is quadratic in the
// entries, so its double floor grows with |g|^2 on long hyperbolic arcs.
double det_residual(const sl2sr_mat2& m) {
  return m.a11 * m.a22 - m.a12 * m.a21 - 1.0;
}

void check_emitted_matrix(const sl2sr_mat2& m) {
  double nn = 0.0;
  for (double e : {m.a11, m.a12, m.a21, m.a22})
    nn = std::max(nn, std::fabs(e));
  if (!(std::fabs(det_residual(m)) <= 1e-8 * std::max(1.0, nn * nn))) {
    std::cerr << "sl2: refusing to emit a matrix with determinant residual "
              << fmt(det_residual(m)) << '\n';
    std::exit(kExitNumerical);
  }
}

json matrix_json(const sl2sr_mat2& m) {
  check_emitted_matrix(m);
  return json::array({m.a11, m.a12, m.a21, m.a22});
}

std::vector<std::string> matrix_csv(const sl2sr_mat2& m) {
  check_emitted_matrix(m);
  return {fmt(m.a11), fmt(m.a12), fmt(m.a21), fmt(m.a22)};
}

const char* regime_name(int r) {
  switch (r) {
    case SL2SR_CUT_R1:
      return "R1";
    case SL2SR_CUT_R2:
      return "R2";
    case SL2SR_CUT_R3:
      return "R3";
    case SL2SR_CUT_R4:
      return "R4";
    case SL2SR_CUT_R5:
      return "R5";
    case SL2SR_CUT_R6:
      return "R6";
    default:
      return "straight";
  }
}

const char* multiplicity_name(int m) {
  switch (m) {
    case SL2SR_LOG_CUT_PAIR:
      return "cut_pair";
    case SL2SR_LOG_S1_CIRCLE:
      return "s1_circle";
    default:
      return "unique";
  }
}

ordered_json doc_header(const std::string& command) {
  ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = command;
  return doc;
}

// ------------------------------------------------------------- commands

int cmd_exp(const std::vector<double>& c, const OutputOptions& opts) {
  const sl2sr_vec3 v{c[0], c[1], c[2]};
  sl2sr_mat2 m;
  check(sl2sr_exp(&v, &m), "exp");
  ordered_json doc = doc_header("exp");
  doc["vector"] = json::array({c[0], c[1], c[2]});
  doc["matrix"] = matrix_json(m);
  doc["det_residual"] = det_residual(m);
  auto row = matrix_csv(m);
  std::vector<std::string> csv_row{fmt(c[0]), fmt(c[1]), fmt(c[2])};
  csv_row.insert(csv_row.end(), row.begin(), row.end());
  csv_row.push_back(fmt(det_residual(m)));
  return emit(opts, doc,
              {"c1", "c2", "c3", "g11", "g12", "g21", "g22", "det_residual"},
              {csv_row});
}

int cmd_geodesic(double beta, double phi, const std::vector<double>& ts,
                 const OutputOptions& opts) {
  ordered_json doc = doc_header("geodesic");
  doc["beta"] = beta;
  doc["phi"] = phi;
  doc["points"] = json::array();
  std::vector<std::vector<std::string>> rows;
  for (double t : ts) {
    sl2sr_mat2 m;
    check(sl2sr_geodesic_point(beta, phi, t, &m), "geodesic");
    ordered_json rec;
    rec["t"] = t;
    rec["matrix"] = matrix_json(m);
    rec["det_residual"] = det_residual(m);
    doc["points"].push_back(rec);
    std::vector<std::string> row{fmt(beta), fmt(phi), fmt(t)};
    auto mm = matrix_csv(m);
    row.insert(row.end(), mm.begin(), mm.end());
    row.push_back(fmt(det_residual(m)));
    rows.push_back(row);
  }
  return emit(
      opts, doc,
      {"beta", "phi", "t", "g11", "g12", "g21", "g22", "det_residual"}, rows);
}

int cmd_cut_time(double beta, const OutputOptions& opts) {
  sl2sr_cut_time_result r;
  check(sl2sr_cut_time(beta, &r), "cut-time");
  ordered_json doc = doc_header("cut-time");
  doc["beta"] = beta;
  doc["T"] = r.T;
  doc["regime"] = regime_name(r.regime);
  doc["bracket_lo"] = r.bracket_lo;
  doc["bracket_hi"] = r.bracket_hi;
  doc["residual"] = r.residual;
  return emit(opts, doc,
              {"beta", "T", "regime", "bracket_lo", "bracket_hi", "residual"},
              {{fmt(beta), fmt(r.T), regime_name(r.regime), fmt(r.bracket_lo),
                fmt(r.bracket_hi), fmt(r.residual)}});
}

int cmd_cut_curve(double beta_min, double beta_max, int samples,
                  const OutputOptions& opts) {
  if (samples < 2) {
    std::cerr << "sl2: cut-curve needs --samples >= 2\n";
    return kExitUsage;
  }
  ordered_json doc = doc_header("cut-curve");
  doc["beta_min"] = beta_min;
  doc["beta_max"] = beta_max;
  doc["samples"] = samples;
  doc["rows"] = json::array();
  std::vector<std::vector<std::string>> rows;
  for (int i = 0; i < samples; ++i) {
    const double beta =
        beta_min + (beta_max - beta_min) * i / (double)(samples - 1);
    sl2sr_cut_time_result r;
    check(sl2sr_cut_time(beta, &r), "cut-curve");
    ordered_json rec;
    rec["beta"] = beta;
    rec["T"] = r.T;
    rec["regime"] = regime_name(r.regime);
    doc["rows"].push_back(rec);
    rows.push_back({fmt(beta), fmt(r.T), regime_name(r.regime)});
  }
  return emit(opts, doc, {"beta", "T", "regime"}, rows);
}

int cmd_log(const std::vector<double>& g, bool distance_only,
            const OutputOptions& opts) {
  const sl2sr_mat2 m{g[0], g[1], g[2], g[3]};
  const double tol = match_tolerance();
  if (distance_only) {
    double d = 0.0;
    check(sl2sr_distance(&m, tol, &d), "distance");
    ordered_json doc = doc_header("distance");
    doc["matrix"] = json::array({g[0], g[1], g[2], g[3]});
    doc["distance"] = d;
    return emit(opts, doc, {"g11", "g12", "g21", "g22", "distance"},
                {{fmt(g[0]), fmt(g[1]), fmt(g[2]), fmt(g[3]), fmt(d)}});
  }
  sl2sr_log_result* r = nullptr;
  check(sl2sr_log(&m, tol, &r), "log");
  ordered_json doc = doc_header("log");
  doc["matrix"] = json::array({g[0], g[1], g[2], g[3]});
  doc["distance"] = sl2sr_log_result_distance(r);
  doc["multiplicity"] = multiplicity_name(sl2sr_log_result_multiplicity(r));
  doc["solutions"] = json::array();
  std::vector<std::vector<std::string>> rows;
  const size_t n = sl2sr_log_result_count(r);
  for (size_t i = 0; i < n; ++i) {
    double beta = 0, phi = 0, t = 0;
    check(sl2sr_log_result_solution(r, i, &beta, &phi, &t), "log");
    ordered_json rec;
    rec["beta"] = beta;
    rec["phi"] = phi;
    rec["t"] = t;
    doc["solutions"].push_back(rec);
    rows.push_back({fmt(sl2sr_log_result_distance(r)),
                    multiplicity_name(sl2sr_log_result_multiplicity(r)),
                    fmt(beta), fmt(phi), fmt(t)});
  }
  sl2sr_log_result_free(r);
  return emit(opts, doc, {"distance", "multiplicity", "beta", "phi", "t"},
              rows);
}

int cmd_conjugate(double beta, double t_max, const OutputOptions& opts) {
  size_t count = 0;
  check(sl2sr_conjugate_times(beta, t_max, nullptr, 0, &count), "conjugate");
  std::vector<double> times(count);
  if (count)
    check(sl2sr_conjugate_times(beta, t_max, times.data(), count, &count),
          "conjugate");
  ordered_json doc = doc_header("conjugate");
  doc["beta"] = beta;
  doc["t_max"] = t_max;
  doc["times"] = times;
  std::vector<std::vector<std::string>> rows;
  for (size_t i = 0; i < times.size(); ++i)
    rows.push_back({std::to_string(i), fmt(times[i])});
  return emit(opts, doc, {"index", "t"}, rows);
}

int cmd_verify(const std::string& suite, std::uint64_t seed,
               const OutputOptions& opts) {
  sl2sr_verify_report* r = nullptr;
  check(sl2sr_verify(suite.c_str(), seed, &r), "verify");
  ordered_json doc = doc_header("verify");
  doc["suite"] = suite;
  doc["seed"] = seed;
  const bool passed = sl2sr_verify_passed(r) != 0;
  doc["passed"] = passed;
  doc["rows"] = json::array();
  std::vector<std::vector<std::string>> rows;
  const size_t n = sl2sr_verify_row_count(r);
  for (size_t i = 0; i < n; ++i) {
    const char* name = nullptr;
    int64_t checks = 0, failures = 0;
    double max_error = 0.0;
    check(sl2sr_verify_row(r, i, &name, &checks, &failures, &max_error),
          "verify");
    ordered_json rec;
    rec["name"] = name;
    rec["checks"] = checks;
    rec["failures"] = failures;
    rec["max_error"] = max_error;
    doc["rows"].push_back(rec);
    rows.push_back({name, std::to_string(checks), std::to_string(failures),
                    fmt(max_error)});
  }
  sl2sr_verify_report_free(r);
  const int rc = emit(opts, doc, {"name", "checks", "failures", "max_error"},
                      rows);
  if (rc != 0) return rc;
  return passed ? 0 : kExitNumerical;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sub-Riemannian geometry of SL(2): geodesics, distance, cut "
               "locus, conjugate set"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(sl2sr_version()));
  app.failure_message(CLI::FailureMessage::help);

  // exp
  std::vector<double> exp_c;
  OutputOptions exp_opts;
  auto* exp_cmd = app.add_subcommand(
      "exp", "exponential of c1 p1 + c2 p2 + c3 k");
  exp_cmd->add_option("coords", exp_c, "c1 c2 c3")->expected(3)->required();
  add_output_flags(exp_cmd, &exp_opts, "json");

  // geodesic
  double geo_beta = 0.0, geo_phi = 0.0;
  std::vector<double> geo_t;
  OutputOptions geo_opts;
  auto* geo_cmd =
      app.add_subcommand("geodesic", "geodesic endpoints gamma(beta, phi; t)");
  geo_cmd->add_option("--beta", geo_beta, "vertical covector component")
      ->required();
  geo_cmd->add_option("--phi", geo_phi, "initial control direction")
      ->capture_default_str();
  geo_cmd->add_option("--t", geo_t, "arclength (repeatable)")->required();
  add_output_flags(geo_cmd, &geo_opts, "json");

  // cut-time
  double ct_beta = 0.0;
  OutputOptions ct_opts;
  auto* ct_cmd =
      app.add_subcommand("cut-time", "largest minimizing time for one beta");
  ct_cmd->add_option("--beta", ct_beta, "vertical covector component")
      ->required();
  add_output_flags(ct_cmd, &ct_opts, "json");

  // cut-curve
  double cc_min = 0.0, cc_max = 0.0;
  int cc_samples = 100;
  OutputOptions cc_opts;
  auto* cc_cmd = app.add_subcommand(
      "cut-curve", "tabulate the cut time over a beta interval");
  cc_cmd->add_option("--beta-min", cc_min, "interval start")->required();
  cc_cmd->add_option("--beta-max", cc_max, "interval end")->required();
  cc_cmd->add_option("--samples", cc_samples, "row count")
      ->capture_default_str();
  add_output_flags(cc_cmd, &cc_opts, "csv");

  // log
  std::vector<double> log_g;
  OutputOptions log_opts;
  auto* log_cmd = app.add_subcommand(
      "log", "all minimizing (beta, phi, t) for a group element");
  log_cmd->add_option("matrix", log_g, "g11 g12 g21 g22 (row-major)")
      ->expected(4)
      ->required();
  add_output_flags(log_cmd, &log_opts, "json");

  // distance
  std::vector<double> dist_g;
  OutputOptions dist_opts;
  auto* dist_cmd =
      app.add_subcommand("distance", "distance from the identity");
  dist_cmd->add_option("matrix", dist_g, "g11 g12 g21 g22 (row-major)")
      ->expected(4)
      ->required();
  add_output_flags(dist_cmd, &dist_opts, "json");

  // conjugate
  double cj_beta = 0.0, cj_tmax = 0.0;
  OutputOptions cj_opts;
  auto* cj_cmd = app.add_subcommand(
      "conjugate", "conjugate times along a geodesic up to t-max");
  cj_cmd->add_option("--beta", cj_beta, "vertical covector component")
      ->required();
  cj_cmd->add_option("--t-max", cj_tmax, "time horizon")->required();
  add_output_flags(cj_cmd, &cj_opts, "json");

  // verify
  std::string vf_suite = "all";
  std::uint64_t vf_seed = 0;
  OutputOptions vf_opts;
  auto* vf_cmd = app.add_subcommand(
      "verify", "run a verification suite (exit 0 iff it passes)");
  std::vector<std::string> suite_names;
  for (size_t i = 0; const char* name = sl2sr_verify_suite_name(i); ++i)
    suite_names.push_back(name);
  vf_cmd->add_option("suite", vf_suite, "suite name")
      ->check(CLI::IsMember(suite_names))
      ->capture_default_str();
  vf_cmd->add_option("--seed", vf_seed, "sampling seed")
      ->capture_default_str();
  add_output_flags(vf_cmd, &vf_opts, "json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // CLI11 assigns its own exit codes; collapse every parse failure to the
    // documented usage status and keep 0 for --help and --version.
    int cli_status = app.exit(e);
    return cli_status == 0 ? 0 : kExitUsage;
  }

  if (exp_cmd->parsed()) return cmd_exp(exp_c, exp_opts);
  if (geo_cmd->parsed())
    return cmd_geodesic(geo_beta, geo_phi, geo_t, geo_opts);
  if (ct_cmd->parsed()) return cmd_cut_time(ct_beta, ct_opts);
  if (cc_cmd->parsed())
    return cmd_cut_curve(cc_min, cc_max, cc_samples, cc_opts);
  if (log_cmd->parsed()) return cmd_log(log_g, false, log_opts);
  if (dist_cmd->parsed()) return cmd_log(dist_g, true, dist_opts);
  if (cj_cmd->parsed()) return cmd_conjugate(cj_beta, cj_tmax, cj_opts);
  if (vf_cmd->parsed()) return cmd_verify(vf_suite, vf_seed, vf_opts);
  return kExitUsage;
}
