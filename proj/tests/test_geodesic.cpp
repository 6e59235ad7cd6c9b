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
#include "core/geodesic.hpp"
#include "core/rng.hpp"
#include "doctest.h"

using namespace sl2sr;

TEST_CASE("geodesic starts at the identity") {
  CHECK(max_abs_diff(geodesic_point({1.3, 0.4, 0.0}).mat(),
                     Mat2::identity()) == 0.0);
  CHECK(max_abs_diff(geodesic_point_product({1.3, 0.4, 0.0}).mat(),
                     Mat2::identity()) <= 1e-16);
}

TEST_CASE("straight geodesic is the diagonal hyperbolic flow") {
  const GroupElement g = geodesic_point({0.0, 0.0, 2.0});
  CHECK(g.g11() == doctest::Approx(std::exp(1.0)).epsilon(1e-15));
  CHECK(g.g22() == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
  CHECK(g.g12() == 0.0);
  CHECK(g.g21() == 0.0);
}

TEST_CASE("straight geodesics are symmetric with hyperbolic trace") {
  Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    const double phi = rng.uniform(-kPi, kPi), t = rng.uniform(-6, 6);
    const GroupElement g = geodesic_point({0.0, phi, t});
    CHECK(std::fabs(g.g12() - g.g21()) <= 1e-13 * std::cosh(t / 2));
    CHECK(g.trace() ==
          doctest::Approx(2 * std::cosh(t / 2)).epsilon(1e-13));
  }
}

TEST_CASE("the two closed forms agree") {
  Rng rng(29);
  for (int i = 0; i < 500; ++i) {
    const GeodesicParams p{rng.uniform(-5, 5), rng.uniform(-kPi, kPi),
                           rng.uniform(-10, 10)};
    CHECK(max_abs_diff(geodesic_point(p).mat(),
                       geodesic_point_product(p).mat()) <= 1e-11);
  }
}

TEST_CASE("mn coefficients in the hyperbolic range") {
  const double beta = 0.5, t = 3.0, w = std::sqrt(1 - beta * beta);
  const MNCoefficients c = mn_coeffs(beta, t);
  CHECK(c.regime == MNRegime::Hyperbolic);
  CHECK(c.n == doctest::Approx(std::cosh(w * t / 2)).epsilon(1e-15));
  CHECK(c.m == doctest::Approx(std::sinh(w * t / 2) / w).epsilon(1e-15));
}

TEST_CASE("mn coefficients in the trigonometric range") {
  const double beta = 2.0, t = 1.7, v = std::sqrt(beta * beta - 1);
  const MNCoefficients c = mn_coeffs(beta, t);
  CHECK(c.regime == MNRegime::Trigonometric);
  CHECK(c.n == doctest::Approx(std::cos(v * t / 2)).epsilon(1e-15));
  CHECK(c.m == doctest::Approx(std::sin(v * t / 2) / v).epsilon(1e-15));
}

TEST_CASE("mn coefficients on the unit boundary") {
  const MNCoefficients c = mn_coeffs(1.0, 3.4);
  CHECK(c.regime == MNRegime::Unit);
  CHECK(c.m == 1.7);
  CHECK(c.n == 1.0);
  const MNCoefficients d = mn_coeffs(-1.0, 3.4);
  CHECK(d.regime == MNRegime::Unit);
  CHECK(d.m == 1.7);
}

TEST_CASE("mn coefficients are continuous across the unit boundary") {
  const double t = 4.2;
  const MNCoefficients at = mn_coeffs(1.0, t);
  for (const double eps : {1e-8, 1e-10, 1e-13}) {
    for (const double beta : {1.0 - eps, 1.0 + eps}) {
      const MNCoefficients near = mn_coeffs(beta, t);
      CHECK(std::fabs(near.m - at.m) <= 1e-6);
      CHECK(std::fabs(near.n - at.n) <= 1e-6);
    }
  }
}

TEST_CASE("mn invariant n^2 - u m^2 = 1") {
  Rng rng(31);
  for (int i = 0; i < 200; ++i) {
    const double beta = rng.uniform(-4, 4), t = rng.uniform(-8, 8);
    const double u = (1 - beta) * (1 + beta);
    const MNCoefficients c = mn_coeffs(beta, t);
    const double scale =
        std::max(1.0, c.n * c.n + std::fabs(u) * c.m * c.m);
    CHECK(std::fabs(c.n * c.n - u * c.m * c.m - 1.0) <= 1e-14 * scale);
  }
}

TEST_CASE("geodesic determinant stays at one") {
  Rng rng(37);
  for (int i = 0; i < 200; ++i) {
    const GeodesicParams p{rng.uniform(-5, 5), rng.uniform(-kPi, kPi),
                           rng.uniform(-10, 10)};
    const Mat2 g = geodesic_point(p).mat();
    const double scale = std::max(1.0, g.norm_inf() * g.norm_inf());
    CHECK(std::fabs(g.det() - 1.0) <= 1e-14 * scale);
  }
}

TEST_CASE("control is the rotating horizontal direction") {
  const GeodesicParams p{1.5, 0.7, 2.0};
  const AlgebraVector u = control(p);
  CHECK(u.c1 == doctest::Approx(std::cos(1.5 * 2.0 + 0.7)).epsilon(1e-15));
  CHECK(u.c2 == doctest::Approx(std::sin(1.5 * 2.0 + 0.7)).epsilon(1e-15));
  CHECK(u.c3 == 0.0);
  CHECK(u.norm() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("rotation conjugation shifts the control angle") {
  Rng rng(41);
  for (int i = 0; i < 50; ++i) {
    const double beta = rng.uniform(-5, 5), phi = rng.uniform(-kPi, kPi),
                 t = rng.uniform(-10, 10);
    CHECK(max_abs_diff(
              conjugate_by_rotation(geodesic_point({beta, 0.0, t}), phi).mat(),
              geodesic_point({beta, phi, t}).mat()) <= 1e-11);
  }
}

TEST_CASE("reversing time flips beta and the control direction") {
  Rng rng(43);
  for (int i = 0; i < 50; ++i) {
    const double beta = rng.uniform(-5, 5), phi = rng.uniform(-kPi, kPi),
                 t = rng.uniform(-10, 10);
    CHECK(max_abs_diff(geodesic_point({-beta, phi + kPi, -t}).mat(),
                       geodesic_point({beta, phi, t}).mat()) <= 1e-11);
  }
}

TEST_CASE("geodesics are orbits of the isometry flow") {
  Rng rng(47);
  for (int i = 0; i < 50; ++i) {
    const GeodesicParams p{rng.uniform(-4, 4), rng.uniform(-kPi, kPi),
                           rng.uniform(-6, 6)};
    const double s = rng.uniform(-4, 4);
    CHECK(max_abs_diff(orbit_flow(p, s, geodesic_point(p)).mat(),
                       geodesic_point({p.beta, p.phi, p.t + s}).mat()) <=
          1e-11);
  }
}

TEST_CASE("m invariant along the geodesic equals the mn coefficient") {
  Rng rng(53);
  for (int i = 0; i < 100; ++i) {
    const double beta = rng.uniform(-3, 3), phi = rng.uniform(-kPi, kPi);
    double t = rng.uniform(0.1, 6.0);
    const double u = (1 - beta) * (1 + beta);
    // Keep |m| itself positive: past the first sign change of m the
    // invariant reports |m|.
    if (u < 0) t = std::fmin(t, 0.9 * kTwoPi / std::sqrt(-u));
    const GroupElement g = geodesic_point({beta, phi, t});
    CHECK(std::fabs(m_invariant(g) - std::fabs(mn_coeffs(beta, t).m)) <=
          1e-11 * std::max(1.0, m_invariant(g)));
  }
}
