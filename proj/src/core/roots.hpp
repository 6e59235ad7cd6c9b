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

// Bracketed scalar root finding: bisection with a safeguarded secant step,
// plus a clamped Newton polish for callers that have the derivative.

#ifndef SL2SR_CORE_ROOTS_HPP
#define SL2SR_CORE_ROOTS_HPP

#include <cmath>

#include "core/types.hpp"

namespace sl2sr {

struct BracketedRoot {
  double x = 0.0;
  double lo = 0.0, hi = 0.0;  // final bracket
  double residual = 0.0;      // |f(x)|
  int iterations = 0;
};

// f must change sign over [lo, hi].  Every odd iteration bisects, so the
// bracket provably shrinks; the secant step supplies the fast local phase.
// Stops when the bracket width drops below 1e-13*max(1, |x|) or after 200
// iterations.
template <class F>
BracketedRoot find_root(F&& f, double lo, double hi) {
  double flo = f(lo), fhi = f(hi);
  if (flo == 0.0) return {lo, lo, hi, 0.0, 0};
  if (fhi == 0.0) return {hi, lo, hi, 0.0, 0};
  if (!(flo * fhi < 0.0))
    throw InvalidArgument("find_root: no sign change over bracket");
  BracketedRoot out;
  double x = lo, fx = flo;
  for (int i = 0; i < 200; ++i) {
    out.iterations = i + 1;
    double mid = 0.5 * (lo + hi);
    if (i % 2 == 1 && fhi != flo) {
      const double s = hi - fhi * (hi - lo) / (fhi - flo);
      // accept the secant point only if it is safely interior
      const double pad = 0.125 * (hi - lo);
      if (s > lo + pad && s < hi - pad) mid = s;
    }
    const double fm = f(mid);
    if (fm == 0.0) {
      x = mid;
      fx = 0.0;
      break;
    }
    if (flo * fm < 0.0) {
      hi = mid;
      fhi = fm;
    } else {
      lo = mid;
      flo = fm;
    }
    x = mid;
    fx = fm;
    if (hi - lo < 1e-13 * std::max(1.0, std::fabs(mid))) break;
  }
  // report the best of the three points in hand
  if (std::fabs(flo) < std::fabs(fx)) {
    x = lo;
    fx = flo;
  }
  if (std::fabs(fhi) < std::fabs(fx)) {
    x = hi;
    fx = fhi;
  }
  out.x = x;
  out.lo = lo;
  out.hi = hi;
  out.residual = std::fabs(fx);
  return out;
}

// A few Newton steps clamped to [lo, hi]; keeps the best residual seen.
template <class F, class DF>
double newton_polish(F&& f, DF&& df, double x, double lo, double hi,
                     int steps = 4) {
  double best_x = x, best_r = std::fabs(f(x));
  for (int i = 0; i < steps; ++i) {
    const double d = df(x);
    if (d == 0.0 || !std::isfinite(d)) break;
    double nx = x - f(x) / d;
    if (nx < lo) nx = lo;
    if (nx > hi) nx = hi;
    const double r = std::fabs(f(nx));
    if (r < best_r) {
      best_r = r;
      best_x = nx;
    }
    if (nx == x) break;
    x = nx;
  }
  return best_x;
}

}  // namespace sl2sr

#endif
