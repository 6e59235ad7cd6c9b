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

// Inverse problem: recover minimizing geodesic parameters (beta, phi, t)
// for a target group element, and with them the sub-Riemannian distance.

#ifndef SL2SR_CORE_LOG_MAP_HPP
#define SL2SR_CORE_LOG_MAP_HPP

#include <vector>

#include "core/geodesic.hpp"
#include "core/types.hpp"

namespace sl2sr {

enum class LogMultiplicity {
  Unique,    // single minimizer
  CutPair,   // >= 2 minimizers (target on the symmetric cut sheet)
  S1Circle,  // target is a nonidentity rotation: one minimizer per phi
};

struct LogResult {
  // Minimizers; each t equals the distance (ties within 1e-8 reported
  // together).  For S1Circle the phi = 0 representative stands for the
  // whole circle of solutions.
  std::vector<GeodesicParams> solutions;
  double distance = 0.0;
  LogMultiplicity multiplicity = LogMultiplicity::Unique;
};

struct EndpointResiduals {
  double r_sym = 0.0;  // m(beta, t) - m_invariant(g)
  double r_rot = 0.0;  // rotation-part angle mismatch, in (-pi, pi]
};

// Both residuals vanish iff (beta, t) is endpoint-consistent with g for
// some phi.
EndpointResiduals endpoint_equations(const GroupElement& g, double beta,
                                     double t);

// The phi making gamma(beta, phi, t) hit g, given consistent (beta, t);
// reduced to (-pi, pi].  Rejects |m(beta, t)| <= 1e-12 (phi undetermined:
// the endpoint is a rotation there).
double recover_phi(const GroupElement& g, double beta, double t);

// Minimizing parameters and distance.  Closed-form fast paths cover the
// identity, rotations, and symmetric positive-trace targets; everything
// else goes through the multi-start search.  Throws SearchFailure with the
// best residual seen if no candidate lands within tol.
LogResult sr_log(const GroupElement& g, double tol = 1e-8);

// The multi-start search alone, fast paths bypassed (cross-validation
// path; requires m_invariant(g) > 0).
LogResult sr_log_search(const GroupElement& g, double tol = 1e-8);

// Distance to the identity, sr_log(g).distance.
double sr_distance(const GroupElement& g, double tol = 1e-8);

}  // namespace sl2sr

#endif
