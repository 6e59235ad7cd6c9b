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

#include "core/log_map.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "core/algebra.hpp"
#include "core/cut_locus.hpp"
#include "core/scalars.hpp"

namespace sl2sr {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Candidate solutions keep their endpoint residual for the final ranking.
struct Candidate {
  double beta, phi, t, res;
};

// The search walks the one-parameter family of (beta, t(beta)) pairs that
// already satisfy the symmetric-part equation m(beta, t) = m(g), looking
// for zeros of the remaining rotation-angle mismatch.  Two t-branches
// exist on the trigonometric side (rising and falling half of the arch of
// m); the hyperbolic side has one.
class LogSearch {
 public:
  LogSearch(const GroupElement& g, double tol)
      : g_(g.mat()),
        gn_(std::max(1.0, g_.norm_inf())),
        mc_(m_invariant(g)),
        tol_(tol) {
    if (!(mc_ > 0.0))
      throw InvalidArgument("log-map search requires m_invariant(g) > 0");
    s_ = 0.5 * (g_.a11 + g_.a22);
    w_ = 0.5 * (g_.a12 - g_.a21);
    rho_ = std::atan2(w_, s_);
    d_ = 0.5 * (g_.a11 - g_.a22);
    p_ = 0.5 * (g_.a12 + g_.a21);
  }

  LogResult run() {
    // Existence box: the branch equation sin(v t / 2) = v m(g) is solvable
    // only while v*m(g) <= 1, i.e. |beta| <= sqrt(1 + 1/m(g)^2).
    const double b_exist = std::sqrt(1.0 + 1.0 / (mc_ * mc_));
    const double b_dense = std::min(12.0, b_exist);
    std::vector<double> grid;
    grid.reserve(kDenseN + 2 * kTailN);
    for (int i = 0; i < kDenseN; ++i)
      grid.push_back(-b_dense + 2.0 * b_dense * i / (kDenseN - 1));
    if (b_exist > b_dense) {
      const double llo = std::log(b_dense), lhi = std::log(b_exist);
      for (int i = 0; i < kTailN; ++i) {
        const double b = std::exp(llo + (lhi - llo) * i / (kTailN - 1));
        grid.push_back(b);
        grid.push_back(-b);
      }
      std::sort(grid.begin(), grid.end());
      grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    }

    for (int which = 0; which < 2; ++which) {
      std::vector<std::optional<GridPt>> pts;
      pts.reserve(grid.size());
      for (double b : grid) pts.push_back(eval(which, b));
      for (size_t i = 0; i + 1 < pts.size(); ++i)
        process(which, pts[i], pts[i + 1], 0, i + 2 == pts.size());
    }
    ridge_candidates(b_exist);

    if (sols_.empty())
      throw SearchFailure("log-map search found no candidate within tolerance",
                          best_res_);
    double tmin = kInf;
    for (const auto& s : sols_) tmin = std::min(tmin, s.t);
    LogResult out;
    out.distance = tmin;
    for (const auto& s : sols_) {
      if (s.t > tmin + kTieTol) continue;
      bool dup = false;
      for (const auto& o : out.solutions)
        dup = dup || (std::fabs(s.beta - o.beta) <= kDedupeTol &&
                      std::fabs(wrap_angle(s.phi - o.phi)) <= kDedupeTol);
      if (!dup) out.solutions.push_back({s.beta, s.phi, s.t});
    }
    out.multiplicity = out.solutions.size() > 1 ? LogMultiplicity::CutPair
                                                : LogMultiplicity::Unique;
    return out;
  }

 private:
  struct GridPt {
    double beta, A, t;
  };

  static constexpr int kDenseN = 801;
  static constexpr int kTailN = 240;
  static constexpr double kTieTol = 1e-8;
  static constexpr double kDedupeTol = 1e-7;

  // t on the given branch with m(beta, t) = m(g), plus the matching n.
  std::optional<std::pair<double, double>> branch_t(int which,
                                                    double beta) const {
    const double u = (1.0 - beta) * (1.0 + beta);
    if (u > 1e-14) {
      if (which != 0) return std::nullopt;
      const double w = std::sqrt(u);
      return std::pair{2.0 * std::asinh(w * mc_) / w,
                       std::sqrt(1.0 + u * mc_ * mc_)};
    }
    if (u > -1e-14) {
      if (which != 0) return std::nullopt;
      return std::pair{2.0 * mc_, 1.0};
    }
    const double v = std::sqrt(-u);
    double s = v * mc_;
    if (s > 1.0 + 1e-12) return std::nullopt;  // arch peak below target
    if (s > 1.0) s = 1.0;
    const double x = std::asin(s);
    const double n = std::sqrt((1.0 - s) * (1.0 + s));
    if (which == 0) return std::pair{2.0 * x / v, n};
    return std::pair{(kTwoPi - 2.0 * x) / v, -n};
  }

  // Rotation-part angle of the model endpoint at (beta, t(beta)).
  std::optional<GridPt> eval(int which, double beta) const {
    const auto bt = branch_t(which, beta);
    if (!bt) return std::nullopt;
    const auto [t, n] = *bt;
    // beyond two arches the candidate can never beat the cut time
    if (beta * beta > 1.0 && t > 4.0 * kPi / std::fabs(beta) * 1.2 + 1e-9)
      return std::nullopt;
    return GridPt{beta, 0.5 * beta * t + std::atan2(-beta * mc_, n), t};
  }

  void consider(int which, double beta) {
    const auto bt = branch_t(which, beta);
    if (!bt) return;
    const double t = bt->first;
    const double phi =
        wrap_angle(std::atan2(p_ / mc_, d_ / mc_) - 0.5 * beta * t);
    const GroupElement gg = geodesic_point({beta, phi, t});
    const double res = max_abs_diff(gg.mat(), g_);
    if (res <= tol_ * gn_) {
      if (t <= cut_time(beta).T + 1e-9) sols_.push_back({beta, phi, t, res});
    } else {
      best_res_ = std::min(best_res_, res);
    }
  }

  void process(int which, const std::optional<GridPt>& p1,
               const std::optional<GridPt>& p2, int depth, bool p2_is_end) {
    if (!p1 || !p2) return;
    const double dA = std::fabs(wrap_angle(p2->A - p1->A));
    if (dA > 0.4 && depth < 4 && std::fabs(p2->beta - p1->beta) > 1e-12) {
      // angle moved too fast for the grid: subdivide before bracketing
      std::vector<std::optional<GridPt>> sub;
      for (int i = 0; i < 9; ++i)
        sub.push_back(
            eval(which, p1->beta + (p2->beta - p1->beta) * i / 8.0));
      for (size_t i = 0; i + 1 < sub.size(); ++i)
        process(which, sub[i], sub[i + 1], depth + 1,
                p2_is_end && i + 2 == sub.size());
      return;
    }
    const double r1 = wrap_angle(p1->A - rho_);
    const double r2 = wrap_angle(p2->A - rho_);
    if (r1 == 0.0) {
      consider(which, p1->beta);
      return;
    }
    if (r2 == 0.0 && p2_is_end) {
      consider(which, p2->beta);
      return;
    }
    if (r1 * r2 < 0.0 && std::fabs(r1 - r2) < kPi) {
      // true sign change (wrap jumps near +-pi are excluded): bisect
      double lo = p1->beta, hi = p2->beta, flo = r1;
      for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        const auto pt = eval(which, mid);
        if (!pt) break;
        const double fm = wrap_angle(pt->A - rho_);
        if (flo * fm <= 0.0) {
          hi = mid;
        } else {
          lo = mid;
          flo = fm;
        }
        if (hi - lo < 1e-14 * std::max(1.0, std::fabs(hi))) break;
      }
      consider(which, 0.5 * (lo + hi));
    } else if (std::min(std::fabs(r1), std::fabs(r2)) < 0.2) {
      // possible even-order (tangential) root: minimize |r| instead
      auto absr = [&](double b) {
        const auto pt = eval(which, b);
        return pt ? std::fabs(wrap_angle(pt->A - rho_)) : kInf;
      };
      consider(which, golden_min(absr, p1->beta, p2->beta, 120, 1e-13));
    }
  }

  // Golden-section minimization; returns the midpoint of the final bracket.
  template <class F>
  static double golden_min(F&& f, double a, double b, int iters,
                           double width_tol) {
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = b - gr * (b - a), d = a + gr * (b - a);
    double fc = f(c), fd = f(d);
    for (int i = 0; i < iters; ++i) {
      if (fc < fd) {
        b = d;
        d = c;
        fd = fc;
        c = b - gr * (b - a);
        fc = f(c);
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + gr * (b - a);
        fd = f(d);
      }
      if (b - a < width_tol * std::max(1.0, std::fabs(b))) break;
    }
    return 0.5 * (a + b);
  }

  // Roots at the edge of the existence box sit where the asin
  // parametrization is sqrt-degenerate (the arch peak).  The peak ridge
  // t = pi/v(beta) is analytic in beta, so minimize the true endpoint
  // mismatch along it near both edges.
  void ridge_candidates(double b_exist) {
    if (!(b_exist > 1.0 + 1e-12)) return;
    auto ridge_phi_t = [&](double b) {
      const double v = std::sqrt((b - 1.0) * (b + 1.0));
      const double t = kPi / v;
      const double phi =
          wrap_angle(std::atan2(p_ / mc_, d_ / mc_) - 0.5 * b * t);
      return std::pair{t, phi};
    };
    auto ridge_res = [&](double b) {
      if (std::fabs(b) <= 1.0 + 1e-14) return kInf;
      const auto [t, phi] = ridge_phi_t(b);
      return max_abs_diff(geodesic_point({b, phi, t}).mat(), g_);
    };
    for (double sgn : {1.0, -1.0}) {
      const double lo = std::max(b_exist * (1.0 - 1e-4), 1.0 + 1e-12);
      const double hi = b_exist * (1.0 + 1e-4);
      const double mag =
          golden_min([&](double b) { return ridge_res(sgn * b); }, lo, hi,
                     160, 1e-16);
      const double b = sgn * mag;
      const double res = ridge_res(b);
      if (res <= tol_ * gn_) {
        const auto [t, phi] = ridge_phi_t(b);
        if (t <= cut_time(b).T + 1e-9) sols_.push_back({b, phi, t, res});
      } else {
        best_res_ = std::min(best_res_, res);
      }
    }
  }

  Mat2 g_;
  double gn_, mc_, tol_;
  double s_ = 0.0, w_ = 0.0, rho_ = 0.0, d_ = 0.0, p_ = 0.0;
  std::vector<Candidate> sols_;
  double best_res_ = kInf;
};

}  // namespace

EndpointResiduals endpoint_equations(const GroupElement& g, double beta,
                                     double t) {
  const MNCoefficients mn = mn_coeffs(beta, t);
  EndpointResiduals out;
  out.r_sym = mn.m - m_invariant(g);
  const double bh = 0.5 * beta * t;
  const double sm = mn.n * std::cos(bh) + beta * mn.m * std::sin(bh);
  const double wm = mn.n * std::sin(bh) - beta * mn.m * std::cos(bh);
  const double sg = 0.5 * (g.g11() + g.g22());
  const double wg = 0.5 * (g.g12() - g.g21());
  out.r_rot = std::atan2(sm * wg - wm * sg, sm * sg + wm * wg);
  return out;
}

double recover_phi(const GroupElement& g, double beta, double t) {
  const double m = mn_coeffs(beta, t).m;
  if (std::fabs(m) <= 1e-12)
    throw PhiUndetermined(
        "phi undetermined: m(beta, t) vanishes (rotation endpoint)");
  const double c = 0.5 * (g.g11() - g.g22()) / m;
  const double s = 0.5 * (g.g12() + g.g21()) / m;
  return wrap_angle(std::atan2(s, c) - 0.5 * beta * t);
}

LogResult sr_log_search(const GroupElement& g, double tol) {
  return LogSearch(g, tol).run();
}

LogResult sr_log(const GroupElement& g, double tol) {
  LogResult out;
  if (max_abs_diff(g.mat(), Mat2::identity()) <= tol) {
    out.solutions.push_back({0.0, 0.0, 0.0});
    return out;
  }
  const double gn = std::max(1.0, g.mat().norm_inf());
  const double mc = m_invariant(g);
  if (mc <= tol) {
    // rotation by psi: reached at the first conjugate time of the beta
    // that makes one full arch close up on SO(2) at angle psi
    double psi = std::atan2(g.g21(), g.g11());
    if (psi <= 0.0) psi += kTwoPi;
    out.multiplicity = LogMultiplicity::S1Circle;
    if (std::fabs(wrap_angle(psi - kPi)) < 1e-14) {
      // -e: the two sheets meet; both signs of beta minimize
      const double t = 2.0 * std::sqrt(3.0) * kPi;
      out.solutions.push_back({kBetaLocalMax, 0.0, t});
      out.solutions.push_back({-kBetaLocalMax, 0.0, t});
      out.distance = t;
      return out;
    }
    const double xi = psi < kPi ? -kPi - psi : 3.0 * kPi - psi;
    const double root = std::sqrt((xi - kPi) * (xi + kPi));
    out.solutions.push_back({xi / root, 0.0, 2.0 * root});
    out.distance = 2.0 * root;
    return out;
  }
  if (std::fabs(g.g12() - g.g21()) <= tol * gn && g.trace() >= 2.0) {
    // symmetric positive-trace target: straight beta = 0 geodesic
    const double t = 2.0 * std::asinh(mc);
    const double phi =
        std::atan2(g.g12() / mc, 0.5 * (g.g11() - g.g22()) / mc);
    out.solutions.push_back({0.0, phi, t});
    out.distance = t;
    return out;
  }
  return sr_log_search(g, tol);
}

double sr_distance(const GroupElement& g, double tol) {
  return sr_log(g, tol).distance;
}

}  // namespace sl2sr
