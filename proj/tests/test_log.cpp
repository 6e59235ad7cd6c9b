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

#include "core/algebra.hpp"
#include "core/cut_locus.hpp"
#include "core/log_map.hpp"
#include "core/rng.hpp"
#include "doctest.h"

using namespace sl2sr;

TEST_CASE("distance to the identity is zero") {
  const LogResult r = sr_log(GroupElement());
  CHECK(r.distance == 0.0);
  CHECK(r.multiplicity == LogMultiplicity::Unique);
  REQUIRE(r.solutions.size() == 1);
  CHECK(r.solutions[0].t == 0.0);
}

TEST_CASE("diagonal hyperbolic target is reached by the straight geodesic") {
  const GroupElement g(std::exp(1.0), 0, 0, std::exp(-1.0));
  const LogResult r = sr_log(g);
  CHECK(std::fabs(r.distance - 2.0) <= 1e-12);
  CHECK(r.multiplicity == LogMultiplicity::Unique);
  REQUIRE(r.solutions.size() == 1);
  CHECK(r.solutions[0].beta == 0.0);
  CHECK(std::fabs(r.solutions[0].phi) <= 1e-12);
  CHECK(std::fabs(r.solutions[0].t - 2.0) <= 1e-12);
}

TEST_CASE("minus the identity is the farthest point of the circle sheet") {
  const LogResult r = sr_log(GroupElement(-1, 0, 0, -1));
  CHECK(std::fabs(r.distance - 2.0 * std::sqrt(3.0) * kPi) <= 1e-12);
  CHECK(r.multiplicity == LogMultiplicity::S1Circle);
  REQUIRE(r.solutions.size() == 2);
  CHECK(r.solutions[0].beta == -r.solutions[1].beta);
  CHECK(std::fabs(std::fabs(r.solutions[0].beta) - kBetaLocalMax) <= 1e-12);
}

TEST_CASE("rotation targets use the closed-form distance") {
  Rng rng(79);
  for (int i = 0; i < 25; ++i) {
    const double psi = rng.uniform(1e-3, kTwoPi - 1e-3);
    const GroupElement g(std::cos(psi), -std::sin(psi), std::sin(psi),
                         std::cos(psi));
    const double alpha = std::min(psi, kTwoPi - psi);
    const double want = 2.0 * std::sqrt(alpha * alpha + kTwoPi * alpha);
    const LogResult r = sr_log(g);
    CHECK(std::fabs(r.distance - want) <= 1e-9);
    CHECK(r.multiplicity == LogMultiplicity::S1Circle);
    // The reported representative actually reaches the target.
    REQUIRE(!r.solutions.empty());
    CHECK(max_abs_diff(geodesic_point(r.solutions[0]).mat(), g.mat()) <=
          1e-9);
  }
}

TEST_CASE("round trip through a generic target recovers the arclength") {
  Rng rng(83);
  for (int i = 0; i < 50; ++i) {
    double beta = rng.uniform(0.05, 3.0);
    if (rng.next01() < 0.5) beta = -beta;
    const double T = std::min(cut_time(beta).T, 24.0);
    const double t = rng.uniform(0.05, 0.99 * T);
    const GeodesicParams p{beta, rng.uniform(0, kTwoPi), t};
    const GroupElement g = geodesic_point(p);
    const LogResult r = sr_log(g);
    CHECK(std::fabs(r.distance - t) <= 1e-6);
    // Every reported solution reaches the target at the same cost.
    for (const GeodesicParams& s : r.solutions) {
      CHECK(std::fabs(s.t - r.distance) <= 1e-8);
      CHECK(max_abs_diff(geodesic_point(s).mat(), g.mat()) <=
            1e-7 * std::max(1.0, g.mat().norm_inf()));
    }
  }
}

TEST_CASE("cut points carry at least two minimizers") {
  for (const double beta : {0.7, 1.0, 1.03, 1.12}) {
    const GroupElement g = cut_point(beta, 0.9);
    const LogResult r = sr_log(g);
    CHECK(r.solutions.size() >= 2);
    CHECK(std::fabs(r.distance - cut_time(beta).T) <= 1e-7);
    if (r.multiplicity != LogMultiplicity::S1Circle)
      CHECK(r.multiplicity == LogMultiplicity::CutPair);
  }
}

TEST_CASE("distance is invariant under inversion") {
  Rng rng(89);
  for (int i = 0; i < 25; ++i) {
    const GroupElement g = geodesic_point(
        {rng.uniform(-2, 2), rng.uniform(0, kTwoPi), rng.uniform(0.1, 4.0)});
    CHECK(std::fabs(sr_distance(g) - sr_distance(g.inverse())) <= 1e-6);
  }
}

TEST_CASE("distance is invariant under rotation conjugation") {
  Rng rng(97);
  for (int i = 0; i < 25; ++i) {
    const GroupElement g = geodesic_point(
        {rng.uniform(-2, 2), rng.uniform(0, kTwoPi), rng.uniform(0.1, 4.0)});
    const GroupElement h = conjugate_by_rotation(g, rng.uniform(0, kTwoPi));
    CHECK(std::fabs(sr_distance(g) - sr_distance(h)) <= 1e-6);
  }
}

TEST_CASE("triangle inequality holds") {
  Rng rng(101);
  for (int i = 0; i < 15; ++i) {
    const GroupElement a = geodesic_point(
        {rng.uniform(-2, 2), rng.uniform(0, kTwoPi), rng.uniform(0.1, 3.0)});
    const GroupElement b = geodesic_point(
        {rng.uniform(-2, 2), rng.uniform(0, kTwoPi), rng.uniform(0.1, 3.0)});
    CHECK(sr_distance(a.inverse() * b) <=
          sr_distance(a) + sr_distance(b) + 1e-6);
  }
}

TEST_CASE("an unreachable tolerance reports the best residual") {
  const GroupElement g = geodesic_point({0.9, 1.3, 2.0});
  try {
    sr_log_search(g, 1e-30);
    FAIL("expected the search to give up");
  } catch (const SearchFailure& e) {
    CHECK(e.best_residual > 0.0);
    CHECK(e.best_residual <= 1e-6);  // it got close, just not to 1e-30
  }
}

TEST_CASE("endpoint equations vanish on a consistent parameter pair") {
  const GeodesicParams p{1.3, 0.8, 2.2};
  const GroupElement g = geodesic_point(p);
  const EndpointResiduals r = endpoint_equations(g, p.beta, p.t);
  CHECK(std::fabs(r.r_sym) <= 1e-12);
  CHECK(std::fabs(r.r_rot) <= 1e-12);
  // A wrong beta leaves a visible residual.
  const EndpointResiduals bad = endpoint_equations(g, 0.4, p.t);
  CHECK(std::fabs(bad.r_sym) + std::fabs(bad.r_rot) > 1e-3);
}

TEST_CASE("phi recovery returns the generating angle") {
  Rng rng(103);
  for (int i = 0; i < 50; ++i) {
    const GeodesicParams p{rng.uniform(-2, 2), rng.uniform(-kPi, kPi),
                           rng.uniform(0.2, 4.0)};
    if (std::fabs(mn_coeffs(p.beta, p.t).m) <= 1e-6) continue;
    const GroupElement g = geodesic_point(p);
    const double phi = recover_phi(g, p.beta, p.t);
    const double diff = std::remainder(phi - p.phi, kTwoPi);
    CHECK(std::fabs(diff) <= 1e-9);
  }
}

TEST_CASE("phi recovery rejects rotation endpoints") {
  // At m = 0 the endpoint forgets phi entirely.
  const double beta = 2.0, t = kTwoPi / std::sqrt(3.0);
  const GroupElement g = geodesic_point({beta, 0.3, t});
  CHECK_THROWS_AS(recover_phi(g, beta, t), PhiUndetermined);
}

TEST_CASE("search agrees with the symmetric fast path") {
  const GroupElement g =
      conjugate_by_rotation(mat_exp({2.6, 0, 0}), 0.7);
  const LogResult fast = sr_log(g);
  const LogResult slow = sr_log_search(g);
  CHECK(std::fabs(fast.distance - slow.distance) <= 1e-8);
}
