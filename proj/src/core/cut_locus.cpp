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

#include "core/cut_locus.hpp"

#include <cmath>
#include <limits>

#include "core/algebra.hpp"
#include "core/geodesic.hpp"
#include "core/roots.hpp"
#include "core/scalars.hpp"

namespace sl2sr {

namespace {

// Dispatch band for the exact-threshold regimes.
constexpr double kThresholdBand = 1e-12;

// All root equations below are the pole-free polynomial-in-(sin, cos) forms
// of the tangent equations: multiplying through by the cosines removes the
// poles from the bracket interior without moving the root, and each form
// runs + -> - across its bracket.

// beta^2 = 1: tan(y) = y on y = T/2 in (pi, 3pi/2).
double h_unit(double y) { return std::sin(y) - y * std::cos(y); }
double dh_unit(double y) { return y * std::sin(y); }

// beta^2 < 1: tan(kx) = k tanh(x), x = T w / 2, k = beta / w.
double h_sub(double k, double x) {
  return std::sin(k * x) - k * std::tanh(x) * std::cos(k * x);
}
double dh_sub(double k, double x) {
  const double th = std::tanh(x);
  return k * ((1.0 - th * th) * std::cos(k * x) + k * th * std::sin(k * x));
}

// beta^2 > 1: tan(kx) = k tan(x), x = T v / 2, k = beta / v.
double h_super(double k, double x) {
  return std::sin(k * x) * std::cos(x) - k * std::cos(k * x) * std::sin(x);
}
double dh_super(double k, double x) {
  return (k * k - 1.0) * std::sin(x) * std::sin(k * x);
}

}  // namespace

CutTimeResult cut_time(double beta) {
  const double b = std::fabs(beta);
  CutTimeResult out;
  if (b == 0.0) {
    out.T = std::numeric_limits<double>::infinity();
    out.regime = CutRegime::Straight;
    out.bracket_lo = out.bracket_hi = out.T;
    return out;
  }
  if (std::fabs(b - kBetaLocalMin) < kThresholdBand) {
    out.T = 2.0 * std::sqrt(2.0) * kPi;
    out.regime = CutRegime::R4;
    out.bracket_lo = out.bracket_hi = out.T;
    return out;
  }
  if (b >= kBetaLocalMax - kThresholdBand) {
    out.T = kTwoPi / std::sqrt((b - 1.0) * (b + 1.0));
    out.regime = CutRegime::R1;
    out.bracket_lo = out.bracket_hi = out.T;
    return out;
  }
  if (std::fabs(b - 1.0) < kThresholdBand) {
    const auto r = find_root(h_unit, kPi + 1e-9, 1.5 * kPi - 1e-9);
    const double y = newton_polish(h_unit, dh_unit, r.x, r.lo, r.hi);
    out.T = 2.0 * y;
    out.regime = CutRegime::R2;
    out.bracket_lo = 2.0 * kPi;
    out.bracket_hi = 3.0 * kPi;
    out.residual = std::fabs(h_unit(y));
    return out;
  }
  if (b < 1.0) {
    const double w = std::sqrt((1.0 - b) * (1.0 + b));
    const double k = b / w;
    const double lo = kPi / k, hi = 1.5 * kPi / k;
    auto h = [k](double x) { return h_sub(k, x); };
    double x;
    if (k <= 0.15) {
      // The whole bracket sits beyond x = 20 where tanh(x) is 1 to double
      // precision, so the equation collapses to tan(kx) = k tanh(x) with a
      // frozen right side; the fixed point converges in one round and stays
      // valid down to denormal beta, where a bracketed bisection would lose
      // the sign change to the sine's roundoff at the endpoint.
      x = (kPi + std::atan(k)) / k;
      for (int i = 0; i < 2 && std::isfinite(x); ++i)
        x = (kPi + std::atan(k * std::tanh(x))) / k;
    } else {
      auto dh = [k](double x) { return dh_sub(k, x); };
      const auto r = find_root(h, lo * (1.0 + 1e-13), hi * (1.0 - 1e-13));
      x = newton_polish(h, dh, r.x, r.lo, r.hi);
    }
    out.T = 2.0 * x / w;
    out.regime = CutRegime::R3;
    out.bracket_lo = 2.0 * lo / w;
    out.bracket_hi = 2.0 * hi / w;
    out.residual = std::isfinite(x) ? std::fabs(h(x)) : 0.0;
    return out;
  }
  const double v = std::sqrt((b - 1.0) * (b + 1.0));
  const double k = b / v;
  // k decreases in b: k > 3 on R6, k in (2, 3) on R5.
  const bool r6 = k > 3.0;
  const double lo = r6 ? kPi / (k - 1.0) : 1.5 * kPi / k;
  const double hi = r6 ? 1.5 * kPi / k : kPi / (k - 1.0);
  auto h = [k](double x) { return h_super(k, x); };
  auto dh = [k](double x) { return dh_super(k, x); };
  const auto r = find_root(h, lo * (1.0 + 1e-13), hi * (1.0 - 1e-13));
  const double x = newton_polish(h, dh, r.x, r.lo, r.hi);
  out.T = 2.0 * x / v;
  out.regime = r6 ? CutRegime::R6 : CutRegime::R5;
  out.bracket_lo = 2.0 * lo / v;
  out.bracket_hi = 2.0 * hi / v;
  out.residual = std::fabs(h(x));
  return out;
}

CutLocusQuery is_in_cut_locus(const GroupElement& g, double tol) {
  const double scale = std::max(1.0, g.mat().norm_inf());
  const bool is_identity = max_abs_diff(g.mat(), Mat2::identity()) <= tol;
  const bool symmetric = std::fabs(g.g12() - g.g21()) <= tol * scale;
  const bool in_k = symmetric && g.trace() <= -2.0 + tol;
  const bool in_s1 = m_invariant(g) <= tol && !is_identity;
  CutLocusQuery q;
  if (in_k && in_s1)
    q.witness = CutWitness::Both;
  else if (in_k)
    q.witness = CutWitness::K;
  else if (in_s1)
    q.witness = CutWitness::S1;
  q.in_cut_locus = q.witness != CutWitness::No;
  return q;
}

std::vector<double> conjugate_times(double beta, double t_max) {
  if (!(t_max > 0.0))
    throw InvalidArgument("conjugate_times: t_max must be positive");
  std::vector<double> out;
  const double u = (1.0 - beta) * (1.0 + beta);
  if (u >= 0.0) return out;  // beta^2 <= 1: no conjugate points
  const double v = std::sqrt(-u);
  if (kTwoPi / v <= t_max) out.push_back(kTwoPi / v);
  // roots x > pi of tan x = x, one per tangent branch
  const double x_max = 0.5 * v * t_max;
  for (int j = 0;; ++j) {
    const double lo = (2.0 * j + 1.0) * 0.5 * kPi + 1e-9;
    const double hi = (2.0 * j + 3.0) * 0.5 * kPi - 1e-9;
    if (lo > x_max) break;
    const auto r = find_root(h_unit, lo, hi);
    const double x = newton_polish(h_unit, dh_unit, r.x, r.lo, r.hi);
    if (x > kPi && 2.0 * x / v <= t_max) out.push_back(2.0 * x / v);
  }
  return out;
}

GroupElement cut_point(double beta, double phi) {
  if (beta == 0.0)
    throw InvalidArgument("cut_point: beta = 0 has infinite cut time");
  return geodesic_point({beta, phi, cut_time(beta).T});
}

}  // namespace sl2sr
