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
#include "core/rng.hpp"
#include "doctest.h"

using namespace sl2sr;

TEST_CASE("assemble places the basis matrices") {
  const Mat2 p1 = assemble({1.0, 0.0, 0.0});
  CHECK(p1.a11 == 0.5);
  CHECK(p1.a12 == 0.0);
  CHECK(p1.a21 == 0.0);
  CHECK(p1.a22 == -0.5);

  const Mat2 p2 = assemble({0.0, 1.0, 0.0});
  CHECK(p2.a11 == 0.0);
  CHECK(p2.a12 == 0.5);
  CHECK(p2.a21 == 0.5);
  CHECK(p2.a22 == 0.0);

  const Mat2 k = assemble({0.0, 0.0, 1.0});
  CHECK(k.a11 == 0.0);
  CHECK(k.a12 == -0.5);
  CHECK(k.a21 == 0.5);
  CHECK(k.a22 == 0.0);
}

TEST_CASE("project inverts assemble and rejects a trace") {
  const AlgebraVector v{0.3, -1.2, 2.7};
  const AlgebraVector w = project(assemble(v));
  CHECK(w.c1 == doctest::Approx(v.c1).epsilon(1e-15));
  CHECK(w.c2 == doctest::Approx(v.c2).epsilon(1e-15));
  CHECK(w.c3 == doctest::Approx(v.c3).epsilon(1e-15));

  CHECK_THROWS_AS(project(Mat2{1.0, 0.0, 0.0, 1.0}), NotTraceless);
}

TEST_CASE("bracket has the structure constants of the basis") {
  auto expect_vec = [](const AlgebraVector& got, double c1, double c2,
                       double c3) {
    CHECK(got.c1 == c1);
    CHECK(got.c2 == c2);
    CHECK(got.c3 == c3);
  };
  expect_vec(lie_bracket({1, 0, 0}, {0, 1, 0}), 0, 0, -1);  // [p1,p2] = -k
  expect_vec(lie_bracket({1, 0, 0}, {0, 0, 1}), 0, -1, 0);  // [p1,k] = -p2
  expect_vec(lie_bracket({0, 1, 0}, {0, 0, 1}), 1, 0, 0);   // [p2,k] = p1
}

TEST_CASE("bracket matches the matrix commutator") {
  Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    const AlgebraVector a{rng.uniform(-2, 2), rng.uniform(-2, 2),
                          rng.uniform(-2, 2)};
    const AlgebraVector b{rng.uniform(-2, 2), rng.uniform(-2, 2),
                          rng.uniform(-2, 2)};
    const Mat2 commutator =
        assemble(a) * assemble(b) - assemble(b) * assemble(a);
    CHECK(max_abs_diff(assemble(lie_bracket(a, b)), commutator) <= 1e-14);
  }
}

TEST_CASE("exponential of zero is the identity") {
  CHECK(max_abs_diff(mat_exp({0, 0, 0}).mat(), Mat2::identity()) == 0.0);
}

TEST_CASE("exponential of k is a rotation by half the coefficient") {
  const double theta = 1.9;
  const GroupElement g = mat_exp({0, 0, theta});
  CHECK(g.g11() == doctest::Approx(std::cos(theta / 2)).epsilon(1e-15));
  CHECK(g.g12() == doctest::Approx(-std::sin(theta / 2)).epsilon(1e-15));
  CHECK(g.g21() == doctest::Approx(std::sin(theta / 2)).epsilon(1e-15));
  CHECK(g.g22() == doctest::Approx(std::cos(theta / 2)).epsilon(1e-15));
}

TEST_CASE("exponential of p1 is diagonal hyperbolic") {
  const GroupElement g = mat_exp({2.0, 0, 0});
  CHECK(g.g11() == doctest::Approx(std::exp(1.0)).epsilon(1e-15));
  CHECK(g.g22() == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
  CHECK(g.g12() == 0.0);
  CHECK(g.g21() == 0.0);
}

TEST_CASE("exponential of a nilpotent argument is identity plus argument") {
  // det(assemble(v)) = 0 forces the square to vanish.
  const AlgebraVector v{0.3, 0.4, 0.5};
  const GroupElement g = mat_exp(v);
  const Mat2 expect = Mat2::identity() + assemble(v);
  CHECK(max_abs_diff(g.mat(), expect) <= 1e-16);
}

TEST_CASE("exponential determinant is one across all three spectral cases") {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const AlgebraVector v{rng.uniform(-4, 4), rng.uniform(-4, 4),
                          rng.uniform(-4, 4)};
    CHECK(std::fabs(mat_exp(v).mat().det() - 1.0) <= 1e-12);
  }
}

TEST_CASE("m invariant vanishes exactly on rotations") {
  CHECK(m_invariant(mat_exp({0, 0, 2.4})) == 0.0);
  CHECK(m_invariant(GroupElement()) == 0.0);
}

TEST_CASE("m invariant of a diagonal element is sinh of the log") {
  const double a = 1.3;
  const GroupElement g = mat_exp({2 * a, 0, 0});
  CHECK(m_invariant(g) == doctest::Approx(std::sinh(a)).epsilon(1e-15));
}

TEST_CASE("conjugation by rotation matches the explicit product") {
  Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    const GroupElement g = mat_exp(
        {rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)});
    const double phi = rng.uniform(-7, 7);
    const GroupElement lhs = conjugate_by_rotation(g, phi);
    const GroupElement rhs = mat_exp({0, 0, phi}) * g * mat_exp({0, 0, -phi});
    CHECK(max_abs_diff(lhs.mat(), rhs.mat()) <= 1e-14);
    // Trace and m are conjugation invariants.
    CHECK(std::fabs(lhs.trace() - g.trace()) <= 1e-13);
    CHECK(std::fabs(m_invariant(lhs) - m_invariant(g)) <= 1e-13);
  }
}

TEST_CASE("classification separates the three symmetric classes") {
  CHECK(classify_symmetric(GroupElement()).cls == SymmetricClass::SimPlus);
  CHECK(classify_symmetric(GroupElement()).a == 0.0);

  const GroupElement minus_e(-1, 0, 0, -1);
  CHECK(classify_symmetric(minus_e).cls == SymmetricClass::SimMinus);

  const GroupElement rotated = conjugate_by_rotation(mat_exp({2, 0, 0}), 0.8);
  CHECK(classify_symmetric(rotated).cls == SymmetricClass::SimPlus);

  const GroupElement generic = mat_exp({0.5, 0.2, 1.5});
  CHECK(classify_symmetric(generic).cls == SymmetricClass::NotSymmetric);
}

TEST_CASE("classification parameters reconstruct the element") {
  Rng rng(19);
  for (int i = 0; i < 50; ++i) {
    const GroupElement g = conjugate_by_rotation(
        mat_exp({rng.uniform(-5, 5), 0, 0}), rng.uniform(0, kPi));
    const SymmetricInfo info = classify_symmetric(g);
    REQUIRE(info.cls == SymmetricClass::SimPlus);
    // Rotation by b is conjugation by exp(2b k).
    const GroupElement back =
        conjugate_by_rotation(mat_exp({2 * info.a, 0, 0}), 2 * info.b);
    CHECK(max_abs_diff(back.mat(), g.mat()) <= 1e-11);
  }
}

TEST_CASE("trace of a symmetric element determines m") {
  // (trace/2)^2 = 1 + m^2 on both symmetric sheets.
  Rng rng(23);
  for (int i = 0; i < 100; ++i) {
    GroupElement g = conjugate_by_rotation(mat_exp({rng.uniform(-4, 4), 0, 0}),
                                           rng.uniform(0, kPi));
    if (rng.next01() < 0.5) g = GroupElement(-1.0 * g.mat());
    const double half_trace = 0.5 * g.trace(), m = m_invariant(g);
    CHECK(std::fabs(half_trace * half_trace - (1.0 + m * m)) <= 1e-12);
  }
}

TEST_CASE("group element construction rejects a bad determinant") {
  CHECK_THROWS_AS(GroupElement(2, 0, 0, 2), DetNotOne);
  CHECK_THROWS_AS(GroupElement(1, 0, 0, 1 + 1e-8), DetNotOne);
  // At large norm the determinant floor scales quadratically, so the same
  // absolute perturbation that fails above passes here.
  const double big = 1e6;
  CHECK_NOTHROW(GroupElement(big, 0, 0, (1 + 1e-8) / big));
}

TEST_CASE("inverse is the adjugate") {
  const GroupElement g = mat_exp({0.7, -0.3, 1.1});
  CHECK(max_abs_diff((g * g.inverse()).mat(), Mat2::identity()) <= 1e-15);
  CHECK(g.inverse().g11() == g.g22());
  CHECK(g.inverse().g12() == -g.g12());
}
