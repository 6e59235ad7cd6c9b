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

#include "core/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>

#include "core/algebra.hpp"
#include "core/cut_locus.hpp"
#include "core/geodesic.hpp"
#include "core/log_map.hpp"
#include "core/oracle.hpp"
#include "core/rng.hpp"
#include "core/scalars.hpp"

namespace sl2sr {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kRt2 = 1.4142135623730951;
constexpr double kRt3 = 1.7320508075688772;

class Row {
 public:
  explicit Row(std::string name) { row_.name = std::move(name); }

  // one check: err must be <= bound
  void expect_le(double err, double bound) {
    row_.checks += 1;
    row_.max_error = std::max(row_.max_error, err);
    if (!(err <= bound)) row_.failures += 1;
  }

  // one boolean check with an optional error magnitude for reporting
  void expect(bool ok, double err = 0.0) {
    row_.checks += 1;
    row_.max_error = std::max(row_.max_error, err);
    if (!ok) row_.failures += 1;
  }

  VerifyRow done() const { return row_; }

 private:
  VerifyRow row_;
};

AlgebraVector random_vec(Rng& rng, double box) {
  return {rng.uniform(-box, box), rng.uniform(-box, box),
          rng.uniform(-box, box)};
}

// 50-term power series for exp, the independent slow path.
Mat2 series_exp(const Mat2& x) {
  Mat2 sum = Mat2::identity();
  Mat2 term = Mat2::identity();
  for (int j = 1; j <= 50; ++j) {
    term = (1.0 / j) * (term * x);
    sum = sum + term;
  }
  return sum;
}

// Volume of the parallelepiped spanned by the three parameter derivatives
// of gamma (columns of the 4x3 finite-difference Jacobian), plus the
// product of the column norms as its natural scale.
void exp_map_jacobian_volume(double beta, double phi, double t, double* vol,
                             double* scale) {
  const double h = 1e-5;
  double J[4][3];
  for (int c = 0; c < 3; ++c) {
    GeodesicParams plus{beta, phi, t}, minus{beta, phi, t};
    (c == 0 ? plus.beta : c == 1 ? plus.phi : plus.t) += h;
    (c == 0 ? minus.beta : c == 1 ? minus.phi : minus.t) -= h;
    const Mat2 a = geodesic_point(plus).mat();
    const Mat2 b = geodesic_point(minus).mat();
    const Mat2 d = (1.0 / (2.0 * h)) * (a - b);
    J[0][c] = d.a11;
    J[1][c] = d.a12;
    J[2][c] = d.a21;
    J[3][c] = d.a22;
  }
  double gtg[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      gtg[i][j] = 0.0;
      for (int r = 0; r < 4; ++r) gtg[i][j] += J[r][i] * J[r][j];
    }
  const double det = gtg[0][0] * (gtg[1][1] * gtg[2][2] - gtg[1][2] * gtg[2][1]) -
                     gtg[0][1] * (gtg[1][0] * gtg[2][2] - gtg[1][2] * gtg[2][0]) +
                     gtg[0][2] * (gtg[1][0] * gtg[2][1] - gtg[1][1] * gtg[2][0]);
  *vol = std::sqrt(std::max(det, 0.0));
  *scale = std::sqrt(gtg[0][0] * gtg[1][1] * gtg[2][2]);
}

// ---------------------------------------------------------------- algebra

void suite_algebra(std::uint64_t seed, std::vector<VerifyRow>& rows) {
  Rng rng(seed);

  Row bracket("bracket-structure");
  {
    const AlgebraVector p1{1, 0, 0}, p2{0, 1, 0}, k{0, 0, 1};
    auto diff = [](const AlgebraVector& a, const AlgebraVector& b) {
      return std::max(std::fabs(a.c1 - b.c1),
                      std::max(std::fabs(a.c2 - b.c2), std::fabs(a.c3 - b.c3)));
    };
    bracket.expect_le(diff(lie_bracket(p1, p2), {0, 0, -1}), 0.0);
    bracket.expect_le(diff(lie_bracket(p1, k), {0, -1, 0}), 0.0);
    bracket.expect_le(diff(lie_bracket(p2, k), {1, 0, 0}), 0.0);
    for (int i = 0; i < 500; ++i) {
      // bracket must match the matrix commutator
      const AlgebraVector a = random_vec(rng, 2.0), b = random_vec(rng, 2.0);
      const Mat2 xa = assemble(a), xb = assemble(b);
      const AlgebraVector via_mat = project(xa * xb - xb * xa);
      bracket.expect_le(diff(via_mat, lie_bracket(a, b)), 1e-12);
    }
  }
  rows.push_back(bracket.done());

  Row series("exp-series-agreement");
  for (int i = 0; i < 200; ++i) {
    AlgebraVector x = random_vec(rng, 1.0);
    const double target = rng.uniform(0.0, 10.0);
    const double nn = x.norm();
    if (nn > 0.0) x = (target / nn) * x;
    series.expect_le(
        max_abs_diff(mat_exp(x).mat(), series_exp(assemble(x))), 1e-10);
  }
  rows.push_back(series.done());

  Row det("exp-determinant");
  for (int i = 0; i < 1000; ++i)
    det.expect_le(std::fabs(mat_exp(random_vec(rng, 3.0)).mat().det() - 1.0),
                  1e-12);
  rows.push_back(det.done());

  Row conj("rotation-conjugation-invariance");
  for (int i = 0; i < 1000; ++i) {
    const GroupElement g = mat_exp(random_vec(rng, 2.0));
    const double phi = rng.uniform(-8.0, 8.0);
    const GroupElement h = conjugate_by_rotation(g, phi);
    conj.expect_le(std::fabs(h.trace() - g.trace()), 1e-12);
    conj.expect_le(std::fabs(m_invariant(h) - m_invariant(g)), 1e-12);
    // antisymmetric part size is preserved as well
    conj.expect_le(std::fabs(std::fabs(h.g12() - h.g21()) -
                             std::fabs(g.g12() - g.g21())),
                   1e-12);
  }
  rows.push_back(conj.done());

  Row tm("symmetric-trace-identity");
  for (int i = 0; i < 1000; ++i) {
    // symmetric det-1 elements: exp of a symmetric algebra element, rotated
    AlgebraVector x = random_vec(rng, 2.0);
    x.c3 = 0.0;
    const GroupElement g =
        conjugate_by_rotation(mat_exp(x), rng.uniform(-4.0, 4.0));
    const double lhs = 0.25 * g.trace() * g.trace();
    const double m = m_invariant(g);
    tm.expect_le(std::fabs(lhs - (1.0 + m * m)), 1e-12);
  }
  rows.push_back(tm.done());

  Row cls("classify-reconstruct");
  {
    const SymmetricInfo ide = classify_symmetric(GroupElement());
    cls.expect(ide.cls == SymmetricClass::SimPlus && ide.a == 0.0);
    const SymmetricInfo neg =
        classify_symmetric(GroupElement(-1.0, 0.0, 0.0, -1.0));
    cls.expect(neg.cls == SymmetricClass::SimMinus);
    const SymmetricInfo diag = classify_symmetric(
        GroupElement(std::exp(1.0), 0.0, 0.0, std::exp(-1.0)));
    cls.expect(diag.cls == SymmetricClass::SimPlus);
    cls.expect_le(std::fabs(diag.a - 1.0), 1e-12);
    cls.expect_le(std::fabs(diag.b - 0.0), 1e-12);
    for (int i = 0; i < 500; ++i) {
      AlgebraVector x = random_vec(rng, 2.0);
      x.c3 = 0.0;
      const GroupElement g =
          conjugate_by_rotation(mat_exp(x), rng.uniform(-4.0, 4.0));
      if (g.trace() < 0.0) continue;
      const SymmetricInfo info = classify_symmetric(g);
      cls.expect(info.cls == SymmetricClass::SimPlus);
      const double ca = std::cosh(info.a), sa = std::sinh(info.a);
      const Mat2 rec{ca + std::cos(2.0 * info.b) * sa,
                     std::sin(2.0 * info.b) * sa,
                     std::sin(2.0 * info.b) * sa,
                     ca - std::cos(2.0 * info.b) * sa};
      cls.expect_le(max_abs_diff(rec, g.mat()), 1e-10);
    }
  }
  rows.push_back(cls.done());

  Row cov("covector-evolution-identity");
  for (int i = 0; i < 500; ++i) {
    // [u, v] with u = cos(phi) p1 + sin(phi) p2, v = -beta k must equal
    // beta (cos(phi) p2 - sin(phi) p1): the content of the covector ODE
    const double phi = rng.uniform(-4.0, 4.0), beta = rng.uniform(-4.0, 4.0);
    const AlgebraVector u{std::cos(phi), std::sin(phi), 0.0};
    const AlgebraVector v{0.0, 0.0, -beta};
    const AlgebraVector br = lie_bracket(u, v);
    const double err = std::max(
        std::fabs(br.c1 + beta * std::sin(phi)),
        std::max(std::fabs(br.c2 - beta * std::cos(phi)), std::fabs(br.c3)));
    cov.expect_le(err, 1e-15);
  }
  rows.push_back(cov.done());
}

// --------------------------------------------------------------- geodesic

void suite_geodesic(std::uint64_t seed, std::vector<VerifyRow>& rows) {
  Rng rng(seed);

  Row forms("two-closed-forms");
  for (int i = 0; i < 10000; ++i) {
    const GeodesicParams p{rng.uniform(-5.0, 5.0), rng.uniform(-kPi, kPi),
                           rng.uniform(-10.0, 10.0)};
    forms.expect_le(
        max_abs_diff(geodesic_point(p).mat(), geodesic_point_product(p).mat()),
        1e-11);
  }
  rows.push_back(forms.done());

  Row zero("identity-at-zero");
  for (int i = 0; i < 100; ++i) {
    const GeodesicParams p{rng.uniform(-5.0, 5.0), rng.uniform(-kPi, kPi), 0.0};
    zero.expect_le(max_abs_diff(geodesic_point(p).mat(), Mat2::identity()),
                   0.0);
  }
  rows.push_back(zero.done());

  Row det("determinant-one");
  for (int i = 0; i < 2000; ++i) {
    const GeodesicParams p{rng.uniform(-5.0, 5.0), rng.uniform(-kPi, kPi),
                           rng.uniform(-10.0, 10.0)};
    // det is quadratic in the entries, so its roundoff floor scales with
    // the squared magnitude; entries reach e^5 on this box
    const Mat2 m = geodesic_point(p).mat();
    const double nn = m.norm_inf();
    det.expect_le(std::fabs(m.det() - 1.0) / std::max(1.0, nn * nn), 1e-14);
  }
  rows.push_back(det.done());

  Row ctrl("control-derivative");
  for (int i = 0; i < 200; ++i) {
    const GeodesicParams p{rng.uniform(-3.0, 3.0), rng.uniform(-kPi, kPi),
                           rng.uniform(-5.0, 5.0)};
    const double h = 1e-5;
    const Mat2 a =
        geodesic_point({p.beta, p.phi, p.t + h}).mat();
    const Mat2 b =
        geodesic_point({p.beta, p.phi, p.t - h}).mat();
    const Mat2 dg = (1.0 / (2.0 * h)) * (a - b);
    const Mat2 lhs = geodesic_point(p).inverse().mat() * dg;
    ctrl.expect_le(max_abs_diff(lhs, assemble(control(p))), 1e-6);
  }
  rows.push_back(ctrl.done());

  Row equi("rotation-equivariance");
  for (int i = 0; i < 1000; ++i) {
    const double beta = rng.uniform(-5.0, 5.0), phi = rng.uniform(-kPi, kPi),
                 t = rng.uniform(-10.0, 10.0);
    equi.expect_le(
        max_abs_diff(
            conjugate_by_rotation(geodesic_point({beta, 0.0, t}), phi).mat(),
            geodesic_point({beta, phi, t}).mat()),
        1e-11);
  }
  rows.push_back(equi.done());

  Row flip("sign-flip");
  for (int i = 0; i < 1000; ++i) {
    const double beta = rng.uniform(-5.0, 5.0), phi = rng.uniform(-kPi, kPi),
                 t = rng.uniform(-10.0, 10.0);
    flip.expect_le(
        max_abs_diff(geodesic_point({-beta, phi + kPi, -t}).mat(),
                     geodesic_point({beta, phi, t}).mat()),
        1e-11);
  }
  rows.push_back(flip.done());

  Row orbit("orbit-flow");
  for (int i = 0; i < 1000; ++i) {
    const GeodesicParams p{rng.uniform(-4.0, 4.0), rng.uniform(-kPi, kPi),
                           rng.uniform(-6.0, 6.0)};
    const double s = rng.uniform(-4.0, 4.0);
    orbit.expect_le(
        max_abs_diff(orbit_flow(p, s, geodesic_point(p)).mat(),
                     geodesic_point({p.beta, p.phi, p.t + s}).mat()),
        1e-11);
  }
  rows.push_back(orbit.done());

  Row mrow("m-along-geodesic");
  for (int i = 0; i < 1000; ++i) {
    const double beta = rng.uniform(-4.0, 4.0), phi = rng.uniform(-kPi, kPi);
    const double u = (1.0 - beta) * (1.0 + beta);
    const double tcap = u < 0.0 ? kTwoPi / std::sqrt(-u) : 10.0;
    const double t = rng.uniform(0.0, std::min(tcap, 10.0));
    const MNCoefficients mn = mn_coeffs(beta, t);
    mrow.expect_le(std::fabs(m_invariant(geodesic_point({beta, phi, t})) -
                             std::fabs(mn.m)),
                   1e-11);
  }
  rows.push_back(mrow.done());

  Row mn_inv("mn-invariants");
  for (int i = 0; i < 1000; ++i) {
    const double beta = rng.uniform(-5.0, 5.0), t = rng.uniform(-10.0, 10.0);
    const MNCoefficients mn = mn_coeffs(beta, t);
    const double u = (1.0 - beta) * (1.0 + beta);
    const double scale =
        std::max(1.0, mn.n * mn.n + std::fabs(u) * mn.m * mn.m);
    mn_inv.expect_le(std::fabs(mn.n * mn.n - u * mn.m * mn.m - 1.0) / scale,
                     1e-14);
  }
  {
    // at beta^2 exactly 1 the coefficients reduce to m = t/2, n = 1
    const MNCoefficients a = mn_coeffs(1.0, 3.0);
    mn_inv.expect(a.regime == MNRegime::Unit &&
                  std::fabs(a.m - 1.5) <= 1e-15 && a.n == 1.0);
    const MNCoefficients b = mn_coeffs(-1.0, -7.0);
    mn_inv.expect(b.regime == MNRegime::Unit &&
                  std::fabs(b.m + 3.5) <= 1e-15 && b.n == 1.0);
  }
  rows.push_back(mn_inv.done());
}

// -------------------------------------------------------------------- ode

void suite_ode(std::uint64_t seed, std::vector<VerifyRow>& rows) {
  Rng rng(seed);

  Row agree("closed-form-agreement");
  Row drift("determinant-drift");
  for (int i = 0; i < 100; ++i) {
    const double beta = rng.uniform(-3.0, 3.0), phi = rng.uniform(-kPi, kPi),
                 t = rng.uniform(0.1, 5.0);
    const IntegrationResult r = integrate_geodesic_ode(beta, phi, t, 1e-4);
    agree.expect_le(r.report.max_error, 1e-7);
    drift.expect_le(r.report.det_drift, 1e-9);
  }
  rows.push_back(agree.done());
  rows.push_back(drift.done());

  Row order("convergence-order");
  for (int i = 0; i < 3; ++i) {
    const double beta = rng.uniform(-2.0, 2.0), phi = rng.uniform(-kPi, kPi);
    const double e1 =
        integrate_geodesic_ode(beta, phi, 3.0, 0.02).report.max_error;
    const double e2 =
        integrate_geodesic_ode(beta, phi, 3.0, 0.01).report.max_error;
    order.expect(e2 > 0.0 && e1 / e2 >= 12.0, e2 > 0.0 ? e1 / e2 : 0.0);
  }
  rows.push_back(order.done());

  Row rejects("rejects-bad-arguments");
  for (double bad : {0.0, -1e-3}) {
    bool threw = false;
    try {
      integrate_geodesic_ode(1.0, 0.0, 1.0, bad);
    } catch (const InvalidArgument&) {
      threw = true;
    }
    rejects.expect(threw);
  }
  rows.push_back(rejects.done());
}

// ------------------------------------------------------------ cut-anchors

void suite_cut_anchors(std::uint64_t seed, std::vector<VerifyRow>& rows) {
  Rng rng(seed);

  Row anchors("threshold-anchors");
  anchors.expect_le(
      std::fabs(cut_time(kBetaLocalMin).T - 2.0 * kRt2 * kPi), 1e-10);
  anchors.expect_le(
      std::fabs(cut_time(kBetaLocalMax).T - 2.0 * kRt3 * kPi), 1e-10);
  rows.push_back(anchors.done());

  Row tail("closed-form-tail");
  for (int i = 0; i < 50; ++i) {
    const double b = rng.uniform(kBetaLocalMax, 20.0) *
                     (rng.next01() < 0.5 ? -1.0 : 1.0);
    tail.expect_le(std::fabs(cut_time(b).T -
                             kTwoPi / std::sqrt((std::fabs(b) - 1.0) *
                                                (std::fabs(b) + 1.0))),
                   1e-12);
  }
  rows.push_back(tail.done());

  Row unit("unit-beta-root");
  {
    // independent slow oracle: plain bisection on tan y = y over (pi, 3pi/2)
    double lo = kPi + 1e-9, hi = 1.5 * kPi - 1e-9;
    for (int i = 0; i < 200; ++i) {
      const double mid = 0.5 * (lo + hi);
      (std::tan(mid) - mid > 0.0 ? hi : lo) = mid;
      if (hi - lo < 1e-15 * hi) break;
    }
    unit.expect_le(std::fabs(cut_time(1.0).T - 2.0 * 0.5 * (lo + hi)), 1e-10);
    unit.expect_le(std::fabs(cut_time(-1.0).T - cut_time(1.0).T), 0.0);
  }
  rows.push_back(unit.done());

  Row res("defining-equation-residuals");
  for (int i = 0; i < 200; ++i) {
    const double b = rng.uniform(0.05, 1.6) * (rng.next01() < 0.5 ? -1.0 : 1.0);
    res.expect_le(cut_time(b).residual, 1e-12);
  }
  rows.push_back(res.done());
}

// ----------------------------------------------------------- cut-brackets

void suite_cut_brackets(std::uint64_t seed, std::vector<VerifyRow>& rows) {
  Rng rng(seed);

  {
    Row r2("regime-tan-y-eq-y");
    for (int i = 0; i < 500; ++i) {
      const double sign = rng.next01() < 0.5 ? -1.0 : 1.0;
      const CutTimeResult c = cut_time(sign);
      r2.expect(c.regime == CutRegime::R2 && c.T > kTwoPi && c.T < 3.0 * kPi,
                c.residual);
    }
    rows.push_back(r2.done());
  }
  {
    Row r3("regime-sub-unit");
    for (int i = 0; i < 500; ++i) {
      const double b = rng.uniform(0.05, 1.0 - 1e-6);
      const CutTimeResult c = cut_time(b);
      r3.expect(c.regime == CutRegime::R3 && c.T > kTwoPi / b &&
                    c.T < 3.0 * kPi / b,
                c.residual);
    }
    rows.push_back(r3.done());
  }
  {
    Row r5("regime-between-extrema");
    for (int i = 0; i < 500; ++i) {
      const double b = rng.uniform(kBetaLocalMin + 1e-9, kBetaLocalMax - 1e-9);
      const CutTimeResult c = cut_time(b);
      const double v = std::sqrt((b - 1.0) * (b + 1.0));
      r5.expect(c.regime == CutRegime::R5 && c.T > 3.0 * kPi / b &&
                    c.T < kTwoPi * (b + v),
                c.residual);
    }
    rows.push_back(r5.done());
  }
  {
    Row r6("regime-above-unit");
    for (int i = 0; i < 500; ++i) {
      const double b = rng.uniform(1.0 + 1e-6, kBetaLocalMin - 1e-9);
      const CutTimeResult c = cut_time(b);
      const double v = std::sqrt((b - 1.0) * (b + 1.0));
      r6.expect(c.regime == CutRegime::R6 && c.T > kTwoPi * (b + v) &&
                    c.T < 3.0 * kPi / b,
                c.residual);
    }
    rows.push_back(r6.done());
  }
  {
    Row bound("shortest-arc-bound");
    for (int i = 0; i < 500; ++i) {
      const double b = rng.uniform(1.0 + 1e-6, 20.0);
      const double v = std::sqrt((b - 1.0) * (b + 1.0));
      const double T = cut_time(b).T;
      bound.expect_le(T - kTwoPi / v, 1e-10);
    }
    rows.push_back(bound.done());
  }
}

// ------------------------------------------------------- cut-monotonicity

void suite_cut_monotonicity(std::uint64_t /*seed*/,
                            std::vector<VerifyRow>& rows) {
  auto sweep = [](const char* name, double lo, double hi, int n,
                  bool increasing) {
    Row row(name);
    double prev = cut_time(lo).T;
    for (int i = 1; i < n; ++i) {
      const double b = lo + (hi - lo) * i / (n - 1);
      const double T = cut_time(b).T;
      row.expect(increasing ? T > prev : T < prev);
      prev = T;
    }
    return row.done();
  };
  rows.push_back(
      sweep("decreasing-before-local-min", 0.05, kBetaLocalMin, 800, false));
  rows.push_back(sweep("increasing-between-extrema", kBetaLocalMin,
                       kBetaLocalMax, 400, true));
  rows.push_back(
      sweep("decreasing-after-local-max", kBetaLocalMax, 20.0, 800, false));
}

// -------------------------------------------------------------- cut-locus

void suite_cut_locus(std::uint64_t seed, std::vector<VerifyRow>& rows) {
  Rng rng(seed);

  Row land("cut-points-land-in-cut-locus");
  for (int i = 0; i < 200; ++i) {
    double b = rng.uniform(-10.0, 10.0);
    if (std::fabs(b) < 0.05) b = 0.05;  // keep endpoints in double range
    const GroupElement c = cut_point(b, rng.uniform(-kPi, kPi));
    land.expect(is_in_cut_locus(c, 1e-7).in_cut_locus);
  }
  rows.push_back(land.done());

  Row minuse("minus-identity-anchor");
  for (int i = 0; i < 20; ++i) {
    const double phi = rng.uniform(-kPi, kPi);
    const double sgn = rng.next01() < 0.5 ? -1.0 : 1.0;
    const Mat2 neg{-1.0, 0.0, 0.0, -1.0};
    minuse.expect_le(
        max_abs_diff(cut_point(sgn * kBetaLocalMax, phi).mat(), neg), 1e-10);
  }
  rows.push_back(minuse.done());

  Row two("beta-two-anchor");
  {
    // closed-form endpoint for beta = 2: a rotation by 2 pi / sqrt(3) + pi
    const double a = kTwoPi / kRt3;
    const Mat2 want{-std::cos(a), -std::sin(a), std::sin(a), -std::cos(a)};
    two.expect_le(max_abs_diff(cut_point(2.0, 0.0).mat(), want), 1e-12);
    two.expect_le(max_abs_diff(cut_point(2.0, 1.3).mat(), want), 1e-12);
  }
  rows.push_back(two.done());

  Row tags("membership-witness-tags");
  {
    tags.expect(is_in_cut_locus(GroupElement(-1, 0, 0, -1)).witness ==
                CutWitness::Both);
    tags.expect(is_in_cut_locus(GroupElement()).witness == CutWitness::No);
    tags.expect(is_in_cut_locus(GroupElement(0, -1, 1, 0)).witness ==
                CutWitness::S1);
    tags.expect(
        is_in_cut_locus(GroupElement(std::exp(1.0), 0, 0, std::exp(-1.0)))
            .witness == CutWitness::No);
    const GroupElement k1 = cut_point(1.0, 0.7);
    tags.expect(is_in_cut_locus(k1).witness == CutWitness::K);
  }
  rows.push_back(tags.done());

  Row endc("endpoint-symmetry-condition");
  for (int i = 0; i < 200; ++i) {
    // the defining property of the cut time on these regimes: the endpoint
    // is symmetric (its rotation part vanishes) with negative trace; m, n
    // grow like e^(w T/2) toward beta -> 0, so the bound is relative
    const double b = rng.uniform(0.05, kBetaLocalMax - 1e-6);
    const CutTimeResult c = cut_time(b);
    const MNCoefficients mn = mn_coeffs(b, c.T);
    const double bh = 0.5 * b * c.T;
    const double asym = mn.n * std::sin(bh) - b * mn.m * std::cos(bh);
    const double tr = mn.n * std::cos(bh) + b * mn.m * std::sin(bh);
    const double scale = std::max(1.0, std::fabs(mn.n) + std::fabs(b * mn.m));
    endc.expect_le(std::fabs(asym) / scale, 1e-12);
    endc.expect(tr < 0.0, tr);
  }
  rows.push_back(endc.done());
}

// -------------------------------------------------------------- conjugate

void suite_conjugate(std::uint64_t seed, std::vector<VerifyRow>& rows) {
  Rng rng(seed);

  Row first("first-conjugate-time");
  {
    const auto times = conjugate_times(kRt2, 50.0);
    first.expect(times.size() >= 2);
    if (times.size() >= 2) {
      first.expect_le(std::fabs(times[0] - kTwoPi), 1e-12);
      const double x = 0.5 * times[1];
      first.expect_le(std::fabs(std::tan(x) - x), 1e-12);
      first.expect(x > kPi && x < 1.5 * kPi);
    }
  }
  rows.push_back(first.done());

  Row resid("tangent-equation-residuals");
  for (int i = 0; i < 10; ++i) {
    const double b = rng.uniform(1.2, 4.0);
    const double v = std::sqrt((b - 1.0) * (b + 1.0));
    const auto times = conjugate_times(b, 36.0 / v);
    for (size_t j = 1; j < times.size(); ++j) {
      const double x = 0.5 * times[j] * v;
      resid.expect_le(std::fabs(std::tan(x) - x), 1e-12);
    }
  }
  rows.push_back(resid.done());

  Row empty("sub-unit-empty");
  empty.expect(conjugate_times(0.5, 100.0).empty());
  empty.expect(conjugate_times(1.0, 100.0).empty());
  empty.expect(conjugate_times(-0.99, 100.0).empty());
  empty.expect(conjugate_times(kRt2, 1.0).empty());
  rows.push_back(empty.done());

  Row rejects("rejects-bad-t-max");
  for (double bad : {0.0, -5.0}) {
    bool threw = false;
    try {
      conjugate_times(2.0, bad);
    } catch (const InvalidArgument&) {
      threw = true;
    }
    rejects.expect(threw);
  }
  rows.push_back(rejects.done());

  Row crit("exponential-map-criticality");
  for (double b : {kRt2, 1.8, 3.0}) {
    const auto times = conjugate_times(b, 30.0 / std::sqrt(b * b - 1.0));
    const double phi = rng.uniform(-kPi, kPi);
    for (size_t j = 0; j < std::min<size_t>(times.size(), 3); ++j) {
      double vol = 0.0, scale = 0.0;
      exp_map_jacobian_volume(b, phi, times[j], &vol, &scale);
      crit.expect_le(vol, 1e-5 * scale);
    }
    // sanity: between conjugate times the map is a submersion
    if (times.size() >= 2) {
      double vol = 0.0, scale = 0.0;
      exp_map_jacobian_volume(b, phi, 0.5 * (times[0] + times[1]), &vol,
                              &scale);
      crit.expect(vol > 1e-2 * scale);
    }
  }
  rows.push_back(crit.done());
}

// -------------------------------------------------------------------- log

void suite_log(std::uint64_t seed, std::vector<VerifyRow>& rows) {
  Rng rng(seed);

  Row round("round-trip");
  for (int i = 0; i < 300; ++i) {
    const double beta = rng.uniform(-3.0, 3.0);
    const double Tcap = std::min(cut_time(beta).T, 24.0);
    const double t = rng.uniform(0.01, 0.99 * Tcap);
    const double phi = rng.uniform(-kPi, kPi);
    const GroupElement g = geodesic_point({beta, phi, t});
    round.expect_le(std::fabs(sr_distance(g) - t), 1e-6);
  }
  rows.push_back(round.done());

  Row fixed("fixed-targets");
  {
    fixed.expect_le(sr_distance(GroupElement()), 0.0);
    const GroupElement diag(std::exp(1.0), 0.0, 0.0, std::exp(-1.0));
    const LogResult lr = sr_log(diag);
    fixed.expect_le(std::fabs(lr.distance - 2.0), 1e-12);
    fixed.expect(lr.solutions.size() == 1 &&
                 std::fabs(lr.solutions[0].beta) <= 1e-12 &&
                 std::fabs(lr.solutions[0].phi) <= 1e-12);
    const LogResult minuse = sr_log(GroupElement(-1, 0, 0, -1));
    fixed.expect_le(std::fabs(minuse.distance - 2.0 * kRt3 * kPi), 1e-12);
    fixed.expect(minuse.multiplicity == LogMultiplicity::S1Circle &&
                 minuse.solutions.size() == 2);
  }
  rows.push_back(fixed.done());

  Row rot("rotation-distance");
  for (int i = 0; i < 100; ++i) {
    // rotation by psi: distance 2 sqrt(alpha^2 + 2 pi alpha) for the short
    // way round, alpha = min(psi, 2pi - psi)
    const double psi = rng.uniform(1e-3, kTwoPi - 1e-3);
    const GroupElement g(std::cos(psi), -std::sin(psi), std::sin(psi),
                         std::cos(psi));
    const double alpha = std::min(psi, kTwoPi - psi);
    const double want = 2.0 * std::sqrt(alpha * alpha + kTwoPi * alpha);
    const LogResult lr = sr_log(g);
    rot.expect_le(std::fabs(lr.distance - want), 1e-9);
    rot.expect(lr.multiplicity == LogMultiplicity::S1Circle);
  }
  rows.push_back(rot.done());

  Row sym("symmetric-fast-path-vs-search");
  for (int i = 0; i < 60; ++i) {
    AlgebraVector x{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0), 0.0};
    const GroupElement g =
        conjugate_by_rotation(mat_exp(x), rng.uniform(-4.0, 4.0));
    const GroupElement target = g.trace() >= 0.0 ? g : GroupElement();
    const LogResult fast = sr_log(target);
    const LogResult slow = sr_log_search(target);
    sym.expect_le(std::fabs(fast.distance - slow.distance), 1e-8);
  }
  rows.push_back(sym.done());

  Row pair("cut-pair-multiplicity");
  for (double b : {1.0, 0.7, 1.1, 1.12, kBetaLocalMin}) {
    const double phi = rng.uniform(-kPi, kPi);
    const GroupElement c = cut_point(b, phi);
    const LogResult lr = sr_log(c);
    pair.expect(lr.solutions.size() >= 2);
    pair.expect_le(std::fabs(lr.distance - cut_time(b).T), 1e-7);
  }
  rows.push_back(pair.done());

  Row inv("inversion-symmetry");
  for (int i = 0; i < 100; ++i) {
    const double beta = rng.uniform(-2.5, 2.5);
    const double t = rng.uniform(0.05, 0.95 * std::min(cut_time(beta).T, 18.0));
    const GroupElement g = geodesic_point({beta, rng.uniform(-kPi, kPi), t});
    inv.expect_le(std::fabs(sr_distance(g) - sr_distance(g.inverse())), 1e-6);
  }
  rows.push_back(inv.done());

  Row left("rotation-isometry");
  for (int i = 0; i < 100; ++i) {
    const double beta = rng.uniform(-2.5, 2.5);
    const double t = rng.uniform(0.05, 0.95 * std::min(cut_time(beta).T, 18.0));
    const GroupElement g = geodesic_point({beta, rng.uniform(-kPi, kPi), t});
    const GroupElement h = conjugate_by_rotation(g, rng.uniform(-8.0, 8.0));
    left.expect_le(std::fabs(sr_distance(g) - sr_distance(h)), 1e-6);
  }
  rows.push_back(left.done());

  Row tri("triangle-inequality");
  for (int i = 0; i < 50; ++i) {
    const double t1 = rng.uniform(0.05, 1.6), t2 = rng.uniform(0.05, 1.6);
    const GroupElement g =
        geodesic_point({rng.uniform(-2.0, 2.0), rng.uniform(-kPi, kPi), t1});
    const GroupElement h =
        geodesic_point({rng.uniform(-2.0, 2.0), rng.uniform(-kPi, kPi), t2});
    tri.expect_le(sr_distance(g * h) - (t1 + t2), 1e-6);
  }
  rows.push_back(tri.done());
}

// ------------------------------------------------------------ brute-force

void suite_brute_force(std::uint64_t seed, std::vector<VerifyRow>& rows) {
  Rng rng(seed);

  Row anchors("anchors");
  anchors.expect_le(brute_force_distance(GroupElement(), 41, 40, 6.0), 0.0);
  {
    const GroupElement d2(std::exp(1.0), 0.0, 0.0, std::exp(-1.0));
    const double bf = brute_force_distance(d2, 81, 60, 6.0);
    anchors.expect_le(std::fabs(bf - 2.0), 6.0 / 60.0);
    const double far = brute_force_distance(d2, 41, 40, 0.5);
    anchors.expect(far == kInf);
    const GroupElement neg(-1.0, 0.0, 0.0, -1.0);
    const double bfn = brute_force_distance(neg, 81, 60, 12.0);
    anchors.expect_le(std::fabs(bfn - 2.0 * kRt3 * kPi), 12.0 / 60.0);
  }
  rows.push_back(anchors.done());

  Row fwd("forward-targets");
  for (int i = 0; i < 10; ++i) {
    const double beta = rng.uniform(-3.0, 3.0);
    const double t = rng.uniform(0.3, std::min(0.8 * cut_time(beta).T, 4.0));
    const GroupElement g = geodesic_point({beta, rng.uniform(-kPi, kPi), t});
    const double bf = brute_force_distance(g, 101, 80, 5.0);
    fwd.expect_le(std::fabs(bf - sr_distance(g)), 5.0 / 80.0);
  }
  rows.push_back(fwd.done());
}

using SuiteFn = void (*)(std::uint64_t, std::vector<VerifyRow>&);

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
  static const std::vector<std::pair<std::string, SuiteFn>> table{
      {"algebra", suite_algebra},
      {"geodesic", suite_geodesic},
      {"ode", suite_ode},
      {"cut-anchors", suite_cut_anchors},
      {"cut-brackets", suite_cut_brackets},
      {"cut-monotonicity", suite_cut_monotonicity},
      {"cut-locus", suite_cut_locus},
      {"conjugate", suite_conjugate},
      {"log", suite_log},
      {"brute-force", suite_brute_force},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : suite_table()) n.push_back(name);
    n.push_back("all");
    return n;
  }();
  return names;
}

VerifyReport run_verify_suite(const std::string& suite, std::uint64_t seed) {
  VerifyReport report;
  report.suite = suite;
  report.seed = seed;
  if (suite == "all") {
    for (const auto& [name, fn] : suite_table()) fn(seed, report.rows);
    return report;
  }
  for (const auto& [name, fn] : suite_table()) {
    if (name == suite) {
      fn(seed, report.rows);
      return report;
    }
  }
  throw InvalidArgument("unknown verify suite: " + suite);
}

}  // namespace sl2sr
