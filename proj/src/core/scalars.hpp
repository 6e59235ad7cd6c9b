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

// Scalar helpers shared by the geodesic and exponential formulas.  The *_q
// variants take the squared argument with sign (q = z*z or q = -z*z) so a
// single series covers both the trig and hyperbolic sides near zero.

#ifndef SL2SR_CORE_SCALARS_HPP
#define SL2SR_CORE_SCALARS_HPP

#include <cmath>

#include "core/types.hpp"

namespace sl2sr {

// Series guard: |q| below this means sqrt(|q|) < 1e-6 and a four-term Taylor
// expansion is exact to double precision.
inline constexpr double kSeriesQ = 1e-12;

// cosh(sqrt(q)) for q >= 0, cos(sqrt(-q)) for q < 0.
inline double cosh_q(double q) {
  if (std::fabs(q) < kSeriesQ)
    return 1.0 + q * (1.0 / 2.0 + q * (1.0 / 24.0 + q / 720.0));
  const double z = std::sqrt(std::fabs(q));
  return q > 0.0 ? std::cosh(z) : std::cos(z);
}

// sinh(sqrt(q))/sqrt(q) for q >= 0, sin(sqrt(-q))/sqrt(-q) for q < 0.
inline double sinch_q(double q) {
  if (std::fabs(q) < kSeriesQ)
    return 1.0 + q * (1.0 / 6.0 + q * (1.0 / 120.0 + q / 5040.0));
  const double z = std::sqrt(std::fabs(q));
  return q > 0.0 ? std::sinh(z) / z : std::sin(z) / z;
}

// Wrap to (-pi, pi]; std::remainder lands in [-pi, pi] and -pi maps to +pi.
inline double wrap_angle(double a) {
  const double r = std::remainder(a, kTwoPi);
  return r <= -kPi ? r + kTwoPi : r;
}

}  // namespace sl2sr

#endif
