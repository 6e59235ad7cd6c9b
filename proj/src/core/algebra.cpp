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

#include "core/algebra.hpp"

#include <cmath>

#include "core/scalars.hpp"

namespace sl2sr {

Mat2 assemble(const AlgebraVector& v) {
  // p1 = [[.5,0],[0,-.5]], p2 = [[0,.5],[.5,0]], k = [[0,-.5],[.5,0]].
  return {0.5 * v.c1, 0.5 * (v.c2 - v.c3), 0.5 * (v.c2 + v.c3), -0.5 * v.c1};
}

AlgebraVector project(const Mat2& m) {
  if (!(std::fabs(m.trace()) <= 1e-12))
    throw NotTraceless("matrix trace " + std::to_string(m.trace()) +
                       " exceeds 1e-12");
  return {m.a11 - m.a22, m.a12 + m.a21, m.a21 - m.a12};
}

AlgebraVector lie_bracket(const AlgebraVector& a, const AlgebraVector& b) {
  // [p1,p2] = -k, [p1,k] = -p2, [p2,k] = p1.
  return {a.c2 * b.c3 - a.c3 * b.c2, a.c3 * b.c1 - a.c1 * b.c3,
          a.c2 * b.c1 - a.c1 * b.c2};
}

GroupElement mat_exp(const AlgebraVector& v) {
  // For traceless x: exp(x) = cosh(alpha) I + sinch(alpha) x with
  // alpha^2 = -det(x) = (c1^2 + c2^2 - c3^2)/4; sign picks trig vs hyperbolic.
  const double q = 0.25 * (v.c1 * v.c1 + v.c2 * v.c2 - v.c3 * v.c3);
  const double c = cosh_q(q);
  const double s = sinch_q(q);
  const Mat2 x = assemble(v);
  return GroupElement(Mat2{c + s * x.a11, s * x.a12, s * x.a21, c + s * x.a22});
}

double m_invariant(const GroupElement& g) {
  const double d = g.g11() - g.g22();
  const double p = g.g12() + g.g21();
  return 0.5 * std::sqrt(d * d + p * p);
}

GroupElement conjugate_by_rotation(const GroupElement& g, double phi) {
  const GroupElement b = mat_exp(AlgebraVector{0.0, 0.0, phi});
  return b * g * b.inverse();
}

SymmetricInfo classify_symmetric(const GroupElement& g, double tol) {
  SymmetricInfo info;
  const double scale = std::max(1.0, g.mat().norm_inf());
  if (std::fabs(g.g12() - g.g21()) > tol * scale) return info;
  if (g.trace() >= 0.0) {
    info.cls = SymmetricClass::SimPlus;
    const double m = m_invariant(g);
    info.a = std::asinh(m);
    if (m > 0.0) {
      // cos 2b = (g11-g22)/(2m), sin 2b = g12/m; reduce b into [0, pi).
      double b = 0.5 * std::atan2(g.g12() / m, 0.5 * (g.g11() - g.g22()) / m);
      if (b < 0.0) b += kPi;
      info.b = b;
    }
  } else {
    info.cls = SymmetricClass::SimMinus;
  }
  return info;
}

}  // namespace sl2sr
