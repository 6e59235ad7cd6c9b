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

// Cut time T(|beta|) across its six parameter regimes, cut-locus membership,
// and the conjugate times along a geodesic.

#ifndef SL2SR_CORE_CUT_LOCUS_HPP
#define SL2SR_CORE_CUT_LOCUS_HPP

#include <vector>

#include "core/types.hpp"

namespace sl2sr {

// Threshold constants separating the regimes.
inline constexpr double kBetaLocalMin = 1.0606601717798212;  // 3/(2*sqrt(2))
inline constexpr double kBetaLocalMax = 1.1547005383792515;  // 2/sqrt(3)

enum class CutRegime {
  R1,        // |beta| >= 2/sqrt(3): closed form 2*pi/sqrt(beta^2-1)
  R2,        // beta^2 = 1: root of tan(T/2) = T/2 in (2*pi, 3*pi)
  R3,        // 0 < |beta| < 1: root of tan(kx) = k*tanh(x)
  R4,        // |beta| = 3/(2*sqrt(2)): closed form 2*sqrt(2)*pi
  R5,        // 3/(2*sqrt(2)) < |beta| < 2/sqrt(3): root of tan(kx) = k*tan(x)
  R6,        // 1 < |beta| < 3/(2*sqrt(2)): same equation, other bracket
  Straight,  // beta = 0: every segment minimizes, T = +infinity
};

struct CutTimeResult {
  double T = 0.0;
  CutRegime regime = CutRegime::Straight;
  // Bracket containing T (in T units) when root-found; collapsed to (T, T)
  // for the closed forms.
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  // Defining-equation residual at T (0 for closed forms).
  double residual = 0.0;
};

// Largest t such that the geodesic with this beta minimizes on [0, t].
// Even in beta; beta = 0 yields +infinity.
CutTimeResult cut_time(double beta);

enum class CutWitness {
  No,
  K,     // symmetric with trace <= -2
  S1,    // rotation other than the identity
  Both,  // -e, the single point where the two sheets meet
};

struct CutLocusQuery {
  bool in_cut_locus = false;
  CutWitness witness = CutWitness::No;
};

// Membership test for the cut locus of the identity.  tol is absolute on
// the rotation test and relative to max(1, |g|) on the symmetry test.
CutLocusQuery is_in_cut_locus(const GroupElement& g, double tol = 1e-8);

// For beta^2 > 1: the first conjugate time 2*pi/sqrt(beta^2-1) followed by
// the times 2x/sqrt(beta^2-1) for every root x > pi of tan x = x, ascending,
// up to t_max.  Empty for beta^2 <= 1.  Rejects t_max <= 0.
std::vector<double> conjugate_times(double beta, double t_max);

// Endpoint gamma(beta, phi, cut_time(beta)); rejects beta = 0.
GroupElement cut_point(double beta, double phi);

}  // namespace sl2sr

#endif
