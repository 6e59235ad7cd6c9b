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

// Forward geodesic map gamma(beta, phi; t) in two independent closed forms,
// plus the control along the curve and the one-parameter isometry flow whose
// orbit the geodesic is.

#ifndef SL2SR_CORE_GEODESIC_HPP
#define SL2SR_CORE_GEODESIC_HPP

#include "core/types.hpp"

namespace sl2sr {

struct GeodesicParams {
  double beta = 0.0;  // vertical covector component
  double phi = 0.0;   // initial control direction
  double t = 0.0;     // arclength (negative values trace the extension)
};

enum class MNRegime {
  Unit,           // beta^2 = 1
  Hyperbolic,     // beta^2 < 1
  Trigonometric,  // beta^2 > 1
};

// The pair (m, n) driving every entry of the geodesic matrix:
// hyperbolic side m = sinh(wt/2)/w, n = cosh(wt/2) with w = sqrt(1-beta^2);
// trigonometric side the sin/cos analogue; at beta^2 = 1, m = t/2, n = 1.
struct MNCoefficients {
  double m = 0.0;
  double n = 1.0;
  MNRegime regime = MNRegime::Unit;
};

// Continuous across the regime boundaries: 1-beta^2 is computed as
// (1-beta)(1+beta) to keep full precision near beta^2 = 1, and the shared
// series kicks in only where both branches agree to 1e-15.
MNCoefficients mn_coeffs(double beta, double t);

// Explicit entry formulas for gamma(beta, phi; t).
GroupElement geodesic_point(const GeodesicParams& p);

// Product of the two 1-parameter subgroups,
// exp(t(cos phi p1 + sin phi p2 + beta k)) exp(-t beta k);
// independent evaluation path used for cross-validation.
GroupElement geodesic_point_product(const GeodesicParams& p);

// Control u(t) = cos(beta t + phi) p1 + sin(beta t + phi) p2.
AlgebraVector control(const GeodesicParams& p);

// Isometry flow Phi(s) g = exp(s(cos phi p1 + sin phi p2 + beta k)) g
// exp(-s beta k); satisfies Phi(s)(gamma(t)) = gamma(t+s).
GroupElement orbit_flow(const GeodesicParams& p, double s,
                        const GroupElement& g);

}  // namespace sl2sr

#endif
