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

#ifndef SL2SR_CORE_TYPES_HPP
#define SL2SR_CORE_TYPES_HPP

#include <cmath>
#include <stdexcept>
#include <string>

namespace sl2sr {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Determinant tolerance enforced when constructing a GroupElement.
inline constexpr double kDetTol = 1e-10;

class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class InvalidArgument : public Error {
public:
  explicit InvalidArgument(const std::string& what) : Error(what) {}
};

class DetNotOne : public InvalidArgument {
public:
  explicit DetNotOne(const std::string& what) : InvalidArgument(what) {}
};

class NotTraceless : public InvalidArgument {
public:
  explicit NotTraceless(const std::string& what) : InvalidArgument(what) {}
};

class PhiUndetermined : public InvalidArgument {
public:
  explicit PhiUndetermined(const std::string& what) : InvalidArgument(what) {}
};

// Raised when the inverse-geodesic search exhausts its candidates; carries the
// smallest endpoint mismatch seen so the caller can judge how close it got.
class SearchFailure : public Error {
public:
  SearchFailure(const std::string& what, double best_residual)
      : Error(what), best_residual(best_residual) {}
  double best_residual;
};

// Plain 2x2 real matrix, row-major fields.
struct Mat2 {
  double a11 = 1.0, a12 = 0.0, a21 = 0.0, a22 = 1.0;

  static Mat2 identity() { return {}; }

  double trace() const { return a11 + a22; }
  double det() const { return a11 * a22 - a12 * a21; }
  double norm_inf() const {
    return std::max(std::max(std::fabs(a11), std::fabs(a12)),
                    std::max(std::fabs(a21), std::fabs(a22)));
  }
};

inline Mat2 operator*(const Mat2& a, const Mat2& b) {
  return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
          a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22};
}

inline Mat2 operator+(const Mat2& a, const Mat2& b) {
  return {a.a11 + b.a11, a.a12 + b.a12, a.a21 + b.a21, a.a22 + b.a22};
}

inline Mat2 operator-(const Mat2& a, const Mat2& b) {
  return {a.a11 - b.a11, a.a12 - b.a12, a.a21 - b.a21, a.a22 - b.a22};
}

inline Mat2 operator*(double s, const Mat2& a) {
  return {s * a.a11, s * a.a12, s * a.a21, s * a.a22};
}

inline double max_abs_diff(const Mat2& a, const Mat2& b) {
  return (a - b).norm_inf();
}

// Element of SL(2): unimodularity is a construction invariant.
class GroupElement {
public:
  GroupElement() : m_{} {}

  // The tolerance scales with norm^2: det is quadratic in the entries, so
  // its double-precision floor is ~eps*|g|^2 and an absolute test would
  // reject exact formulas evaluated at large hyperbolic times.  For
  // |g| <= ~700 this coincides with the absolute 1e-10 test.
  explicit GroupElement(const Mat2& m) : m_(m) {
    const double n = m.norm_inf();
    if (!(std::fabs(m.det() - 1.0) <= kDetTol * std::max(1.0, n * n)))
      throw DetNotOne("matrix determinant " + std::to_string(m.det()) +
                      " is not 1 within tolerance");
  }

  GroupElement(double g11, double g12, double g21, double g22)
      : GroupElement(Mat2{g11, g12, g21, g22}) {}

  const Mat2& mat() const { return m_; }
  double g11() const { return m_.a11; }
  double g12() const { return m_.a12; }
  double g21() const { return m_.a21; }
  double g22() const { return m_.a22; }
  double trace() const { return m_.trace(); }

  // Adjugate form, exact for unimodular matrices.
  GroupElement inverse() const {
    return GroupElement(Mat2{m_.a22, -m_.a12, -m_.a21, m_.a11});
  }

private:
  Mat2 m_;
};

inline GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  return GroupElement(a.mat() * b.mat());
}

// Coordinates in the basis (p1, p2, k) of the Lie algebra sl(2):
// p1 = diag(1,-1)/2, p2 = offdiag(1,1)/2, k = offdiag(-1,1)/2.
struct AlgebraVector {
  double c1 = 0.0, c2 = 0.0, c3 = 0.0;

  double norm() const { return std::sqrt(c1 * c1 + c2 * c2 + c3 * c3); }
};

inline AlgebraVector operator*(double s, const AlgebraVector& v) {
  return {s * v.c1, s * v.c2, s * v.c3};
}

inline AlgebraVector operator-(const AlgebraVector& a, const AlgebraVector& b) {
  return {a.c1 - b.c1, a.c2 - b.c2, a.c3 - b.c3};
}

}  // namespace sl2sr

#endif
