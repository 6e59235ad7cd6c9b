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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "core/geodesic.hpp"
#include "core/log_map.hpp"
#include "core/oracle.hpp"
#include "core/rng.hpp"
#include "doctest.h"

using namespace sl2sr;

TEST_CASE("integration tracks the closed form") {
  Rng rng(107);
  for (int i = 0; i < 10; ++i) {
    const double beta = rng.uniform(-2, 2), phi = rng.uniform(0, kTwoPi),
                 t = rng.uniform(0.5, 4.0);
    const IntegrationResult r = integrate_geodesic_ode(beta, phi, t, 1e-3);
    CHECK(r.report.max_error <= 1e-9);
    CHECK(r.report.det_drift <= 1e-10);
    CHECK(max_abs_diff(r.raw_endpoint,
                       geodesic_point({beta, phi, t}).mat()) <= 1e-9);
  }
}

TEST_CASE("integration error shrinks at fourth order") {
  const double beta = 1.3, phi = 0.4, t = 3.0;
  const double coarse =
      integrate_geodesic_ode(beta, phi, t, 0.02).report.max_error;
  const double fine =
      integrate_geodesic_ode(beta, phi, t, 0.01).report.max_error;
  CHECK(fine > 0.0);
  CHECK(coarse / fine >= 12.0);  // 16 is the clean-arithmetic ratio
}

TEST_CASE("integration reports step bookkeeping") {
  const IntegrationResult r = integrate_geodesic_ode(1.0, 0.0, 1.0, 0.25);
  CHECK(r.report.steps == 4);
  CHECK(r.report.step_size == 0.25);
  // Partial last step: 1.0 / 0.3 needs four steps, the last one short.
  CHECK(integrate_geodesic_ode(1.0, 0.0, 1.0, 0.3).report.steps == 4);
}

TEST_CASE("integration rejects bad arguments") {
  CHECK_THROWS_AS(integrate_geodesic_ode(1.0, 0.0, 1.0, 0.0),
                  InvalidArgument);
  CHECK_THROWS_AS(integrate_geodesic_ode(1.0, 0.0, 1.0, -0.1),
                  InvalidArgument);
  CHECK_THROWS_AS(integrate_geodesic_ode(1.0, 0.0, -1.0, 0.1),
                  InvalidArgument);
}

TEST_CASE("integrating to time zero returns the identity") {
  const IntegrationResult r = integrate_geodesic_ode(1.0, 0.3, 0.0, 0.1);
  CHECK(max_abs_diff(r.raw_endpoint, Mat2::identity()) == 0.0);
  CHECK(r.report.steps == 0);
}

TEST_CASE("grid search finds the identity at distance zero") {
  CHECK(brute_force_distance(GroupElement(), 41, 40, 6.0) <= 1e-6);
}

TEST_CASE("grid search approximates a known distance") {
  const GroupElement g(std::exp(1.0), 0, 0, std::exp(-1.0));
  const double d = brute_force_distance(g, 81, 60, 6.0);
  CHECK(std::fabs(d - 2.0) <= 0.1);
}

TEST_CASE("grid search returns infinity when nothing matches") {
  // Horizon far too short for a target at distance 2.
  const GroupElement g(std::exp(1.0), 0, 0, std::exp(-1.0));
  CHECK(std::isinf(brute_force_distance(g, 41, 40, 0.5)));
}

TEST_CASE("grid search rejects degenerate grids") {
  CHECK_THROWS_AS(brute_force_distance(GroupElement(), 1, 40, 5.0),
                  InvalidArgument);
  CHECK_THROWS_AS(brute_force_distance(GroupElement(), 41, 1, 5.0),
                  InvalidArgument);
  CHECK_THROWS_AS(brute_force_distance(GroupElement(), 41, 40, 0.0),
                  InvalidArgument);
}

TEST_CASE("grid search agrees with the solver on forward targets") {
  Rng rng(109);
  for (int i = 0; i < 5; ++i) {
    const GeodesicParams p{rng.uniform(-1.5, 1.5), rng.uniform(0, kTwoPi),
                           rng.uniform(0.5, 3.5)};
    const GroupElement g = geodesic_point(p);
    const double bf = brute_force_distance(g, 101, 80, 5.0);
    // Bound is the t-grid resolution; refinement usually does far better.
    CHECK(std::fabs(bf - sr_distance(g)) <= 5.0 / 80);
  }
}
