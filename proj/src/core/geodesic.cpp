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

#include "core/geodesic.hpp"

#include <cmath>

#include "core/algebra.hpp"
#include "core/scalars.hpp"

namespace sl2sr {

MNCoefficients mn_coeffs(double beta, double t) {
  MNCoefficients out;
  // (1-beta)(1+beta) is exact near beta = +-1 where 1-beta*beta cancels;
  // together with the series guard inside cosh_q/sinch_q this keeps the
  // evaluation full-precision and continuous through beta^2 = 1.
  const double u = (1.0 - beta) * (1.0 + beta);
  const double q = 0.25 * u * t * t;
  out.m = 0.5 * t * sinch_q(q);
  out.n = cosh_q(q);
  out.regime = u == 0.0 ? MNRegime::Unit
                        : (u > 0.0 ? MNRegime::Hyperbolic
                                   : MNRegime::Trigonometric);
  return out;
}

GroupElement geodesic_point(const GeodesicParams& p) {
  const MNCoefficients mn = mn_coeffs(p.beta, p.t);
  const double m = mn.m, n = mn.n, b = p.beta;
  const double bh = 0.5 * b * p.t;
  const double cb = std::cos(bh), sb = std::sin(bh);
  const double cf = std::cos(bh + p.phi), sf = std::sin(bh + p.phi);
  return GroupElement(Mat2{n * cb + m * (cf + b * sb),   //
                           n * sb + m * (sf - b * cb),   //
                           -n * sb + m * (sf + b * cb),  //
                           n * cb + m * (-cf + b * sb)});
}

GroupElement geodesic_point_product(const GeodesicParams& p) {
  const AlgebraVector x{p.t * std::cos(p.phi), p.t * std::sin(p.phi),
                        p.t * p.beta};
  return mat_exp(x) * mat_exp(AlgebraVector{0.0, 0.0, -p.t * p.beta});
}

AlgebraVector control(const GeodesicParams& p) {
  const double a = p.beta * p.t + p.phi;
  return {std::cos(a), std::sin(a), 0.0};
}

GroupElement orbit_flow(const GeodesicParams& p, double s,
                        const GroupElement& g) {
  const AlgebraVector x{s * std::cos(p.phi), s * std::sin(p.phi), s * p.beta};
  return mat_exp(x) * g * mat_exp(AlgebraVector{0.0, 0.0, -s * p.beta});
}

}  // namespace sl2sr
