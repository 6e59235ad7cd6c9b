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

// Lie-algebra layer: the (p1, p2, k) basis of sl(2), the matrix exponential
// on it, and the conjugation invariants used to classify group elements.

#ifndef SL2SR_CORE_ALGEBRA_HPP
#define SL2SR_CORE_ALGEBRA_HPP

#include "core/types.hpp"

namespace sl2sr {

// c1*p1 + c2*p2 + c3*k as a traceless 2x2 matrix.
Mat2 assemble(const AlgebraVector& v);

// Inverse of assemble; rejects matrices with |trace| > 1e-12.
AlgebraVector project(const Mat2& m);

// Bracket [a, b] in (p1, p2, k) coordinates.
AlgebraVector lie_bracket(const AlgebraVector& a, const AlgebraVector& b);

// exp(assemble(v)).  Elliptic, parabolic, and hyperbolic cases share one
// code path through the guarded cosh/sinch helpers.
GroupElement mat_exp(const AlgebraVector& v);

// Half the distance between g and its transpose-free symmetric part:
// sqrt((g11-g22)^2 + (g12+g21)^2) / 2.  Invariant under the rotation
// conjugation that the flow uses, and equal to |m(beta, t)| on geodesics.
double m_invariant(const GroupElement& g);

// exp(phi*k) g exp(-phi*k).
GroupElement conjugate_by_rotation(const GroupElement& g, double phi);

// A symmetric matrix with det 1 has real eigenvalues x, 1/x, so its trace
// never lies in (-2, 2); the sign of the trace splits Sim into two sheets.
enum class SymmetricClass {
  NotSymmetric,  // |g12 - g21| above tolerance
  SimPlus,       // symmetric, trace >= 2
  SimMinus,      // symmetric, trace <= -2
};

struct SymmetricInfo {
  SymmetricClass cls = SymmetricClass::NotSymmetric;
  // For SimPlus: g = R(b) diag(e^a, e^-a) R(-b) with R the rotation by b,
  // cosh a = trace/2, sinh a = m_invariant(g); a >= 0, b in [0, pi).
  // b is 0 when g is the identity (any b reconstructs e).
  double a = 0.0;
  double b = 0.0;
};

// Classifies g by symmetry and trace; tolerance is relative to max(1, |g|).
SymmetricInfo classify_symmetric(const GroupElement& g, double tol = 1e-10);

}  // namespace sl2sr

#endif
