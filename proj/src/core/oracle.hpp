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

// Independent verification machinery: direct ODE integration of the
// geodesic system and a grid-search distance approximation.  Used by tests
// and the verify suites, never by the production paths.

#ifndef SL2SR_CORE_ORACLE_HPP
#define SL2SR_CORE_ORACLE_HPP

#include <cstdint>

#include "core/types.hpp"

namespace sl2sr {

struct IntegrationReport {
  double max_error = 0.0;  // sup-norm deviation from the closed form
  std::int64_t steps = 0;
  double step_size = 0.0;
  double det_drift = 0.0;  // sup over the path of |det - 1|
};

struct IntegrationResult {
  // Raw integrator output: deliberately not projected back to SL(2), so
  // determinant drift stays observable.
  Mat2 raw_endpoint;
  IntegrationReport report;

  // Checked conversion; throws DetNotOne if the drift is out of tolerance.
  GroupElement endpoint() const { return GroupElement(raw_endpoint); }
};

// Classical 4th-order one-step integration of gamma' = gamma u(t) with
// u(t) = cos(beta t + phi) p1 + sin(beta t + phi) p2, compared against the
// closed form after every step.  Rejects step <= 0 and t_end < 0.
IntegrationResult integrate_geodesic_ode(double beta, double phi, double t_end,
                                         double step);

// Smallest t on a (beta x t x phi) grid whose geodesic endpoint matches g
// within an absolute 1e-4 sup-norm tolerance, after local refinement of
// the best grid cells; +infinity when nothing matches (caller widens the
// grid).  beta ranges over [-10, 10].  Requires both grid counts >= 2 and
// t_max > 0.
double brute_force_distance(const GroupElement& g, int grid_beta, int grid_t,
                            double t_max);

}  // namespace sl2sr

#endif
