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

// Drives the sl2 binary as a subprocess and checks output documents and
// exit codes.  SL2_CLI_PATH is injected by the build.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// env prefix goes before the binary, e.g. "SL2_TOL=1e-6 ".
RunResult run(const std::string& args, const std::string& env = "") {
  const std::string cmd =
      env + std::string(SL2_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

json run_json(const std::string& args, const std::string& env = "") {
  const RunResult r = run(args, env);
  REQUIRE(r.exit_code == 0);
  return json::parse(r.out);
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s)
    if (c == '\n') ++n;
  return n;
}

}  // namespace

TEST_CASE("exp of zero emits the identity with schema version") {
  const json doc = run_json("exp 0 0 0");
  CHECK(doc["schema_version"] == 1);
  CHECK(doc["command"] == "exp");
  REQUIRE(doc["matrix"].size() == 4);
  CHECK(doc["matrix"][0] == 1.0);
  CHECK(doc["matrix"][1] == 0.0);
  CHECK(doc["matrix"][2] == 0.0);
  CHECK(doc["matrix"][3] == 1.0);
}

TEST_CASE("exp of p1 emits the diagonal hyperbolic element") {
  const json doc = run_json("exp 1 0 0");
  CHECK(std::fabs(doc["matrix"][0].get<double>() - std::exp(0.5)) <= 1e-15);
  CHECK(std::fabs(doc["matrix"][3].get<double>() - std::exp(-0.5)) <= 1e-15);
}

TEST_CASE("geodesic emits one point per requested time") {
  const json doc = run_json("geodesic --beta 0 --phi 0 --t 2");
  REQUIRE(doc["points"].size() == 1);
  const json& m = doc["points"][0]["matrix"];
  CHECK(std::fabs(m[0].get<double>() - std::exp(1.0)) <= 1e-14);
  CHECK(std::fabs(m[3].get<double>() - std::exp(-1.0)) <= 1e-14);

  const json multi = run_json("geodesic --beta 1.2 --t 1 --t 2 --t 3");
  CHECK(multi["points"].size() == 3);
}

TEST_CASE("cut-time emits the value and regime") {
  const json doc = run_json("cut-time --beta 1");
  CHECK(std::fabs(doc["T"].get<double>() - 8.986818915818128) <= 1e-12);
  CHECK(doc["regime"] == "R2");
  CHECK(run_json("cut-time --beta 0")["regime"] == "straight");
}

TEST_CASE("cut-curve defaults to csv with one row per sample") {
  const RunResult r = run("cut-curve --beta-min 1 --beta-max 10 --samples 4");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("# schema_version=1\n", 0) == 0);
  // Comment, header, four data rows.
  CHECK(count_lines(r.out) == 6);
  // The first row is the beta = 1 anchor.
  std::istringstream lines(r.out);
  std::string skip, header, row;
  std::getline(lines, skip);
  std::getline(lines, header);
  CHECK(header == "beta,T,regime");
  std::getline(lines, row);
  CHECK(row.rfind("1,8.98681891581812", 0) == 0);
}

TEST_CASE("log emits distance and minimizers") {
  std::ostringstream cmd;
  cmd.precision(17);
  cmd << "log " << std::exp(1.0) << " 0 0 " << std::exp(-1.0);
  const json doc = run_json(cmd.str());
  CHECK(std::fabs(doc["distance"].get<double>() - 2.0) <= 1e-10);
  CHECK(doc["multiplicity"] == "unique");
  REQUIRE(doc["solutions"].size() == 1);
  CHECK(doc["solutions"][0]["beta"] == 0.0);
  CHECK(std::fabs(doc["solutions"][0]["t"].get<double>() - 2.0) <= 1e-10);
}

TEST_CASE("log of minus the identity reports the circle multiplicity") {
  const json doc = run_json("log -- -1 0 0 -1");
  CHECK(std::fabs(doc["distance"].get<double>() -
                  2 * std::sqrt(3.0) * 3.14159265358979323846) <= 1e-10);
  CHECK(doc["multiplicity"] == "s1_circle");
  CHECK(doc["solutions"].size() == 2);
}

TEST_CASE("distance emits only the scalar") {
  std::ostringstream cmd;
  cmd.precision(17);
  cmd << "distance " << std::exp(1.0) << " 0 0 " << std::exp(-1.0);
  const json doc = run_json(cmd.str());
  CHECK(std::fabs(doc["distance"].get<double>() - 2.0) <= 1e-10);
  CHECK(!doc.contains("solutions"));
}

TEST_CASE("conjugate lists the times up to the horizon") {
  const json doc = run_json("conjugate --beta 1.4142135623730951 --t-max 10");
  REQUIRE(doc["times"].size() == 2);
  CHECK(std::fabs(doc["times"][0].get<double>() -
                  2 * 3.14159265358979323846) <= 1e-12);
}

TEST_CASE("verify emits rows and exits zero on success") {
  const json doc = run_json("verify algebra --seed 42");
  REQUIRE(doc["rows"].size() > 0);
  for (const json& row : doc["rows"]) CHECK(row["failures"] == 0);
  CHECK(run("verify all --seed 42").exit_code == 0);
}

TEST_CASE("usage errors exit one") {
  CHECK(run("").exit_code == 1);
  CHECK(run("frobnicate").exit_code == 1);
  CHECK(run("geodesic --beta 1").exit_code == 1);          // missing --t
  CHECK(run("cut-curve --beta-min 1 --beta-max 2 --samples 1").exit_code ==
        1);
  CHECK(run("exp 1 2").exit_code == 1);                    // missing c3
  CHECK(run("log 2 0 0 2").exit_code == 1);                // det != 1
  CHECK(run("cut-time --beta 1", "SL2_TOL=bogus ").exit_code == 0);
  CHECK(run("distance 1 0 0 1", "SL2_TOL=bogus ").exit_code == 1);
  CHECK(run("distance 1 0 0 1", "SL2_TOL=-3 ").exit_code == 1);
}

TEST_CASE("numerical search failure exits two") {
  // Beyond any achievable tolerance: the search gives up.  The matrix is a
  // generic forward point with determinant exactly 1 in doubles.
  const RunResult r =
      run("distance 0.9 1.3 0.4 1.6888888888888889", "SL2_TOL=1e-30 ");
  CHECK(r.exit_code == 2);
}

TEST_CASE("out flag writes the document to a file") {
  const std::string path = "/tmp/sl2_cli_test_out.json";
  std::remove(path.c_str());
  CHECK(run("cut-time --beta 2 --out " + path).exit_code == 0);
  std::ifstream in(path);
  REQUIRE(in.good());
  json doc;
  in >> doc;
  CHECK(doc["command"] == "cut-time");
  CHECK(doc["schema_version"] == 1);
  std::remove(path.c_str());
}

TEST_CASE("csv documents carry the schema comment") {
  for (const char* args : {"exp 0 0 1 --format csv",
                           "cut-time --beta 2 --format csv",
                           "verify algebra --format csv"}) {
    const RunResult r = run(args);
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("# schema_version=1\n", 0) == 0);
  }
}

TEST_CASE("json output parses for every subcommand") {
  CHECK(run_json("exp 0.3 0.4 0.5").contains("det_residual"));
  CHECK(run_json("geodesic --beta 1 --t 1 --format json").contains("points"));
  CHECK(run_json("cut-curve --beta-min 0.5 --beta-max 0.6 --samples 2 "
                 "--format json")
            .contains("rows"));
  CHECK(run_json("conjugate --beta 2 --t-max 8").contains("times"));
}

TEST_CASE("version flag prints the library version") {
  const RunResult r = run("--version");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("1.0.0", 0) == 0);
}
