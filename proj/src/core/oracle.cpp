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

#include "core/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <vector>

#include "core/algebra.hpp"
#include "core/geodesic.hpp"
#include "core/scalars.hpp"

namespace sl2sr {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Right-hand side gamma * u(t).
Mat2 rhs(const Mat2& gamma, double beta, double phi, double t) {
  return gamma * assemble(control({beta, phi, t}));
}

constexpr double kMatchTol = 1e-4;  // brute-force endpoint acceptance
constexpr double kBetaBox = 10.0;   // brute-force beta range
constexpr int kPhiGrid = 48;
constexpr int kRefineCells = 40;

struct Cell {
  double res, beta, t, phi;
};

}  // namespace

IntegrationResult integrate_geodesic_ode(double beta, double phi, double t_end,
                                         double step) {
  if (!(step > 0.0))
    throw InvalidArgument("integrate_geodesic_ode: step must be positive");
  if (!(t_end >= 0.0))
    throw InvalidArgument("integrate_geodesic_ode: t_end must be >= 0");
  IntegrationResult out;
  out.report.step_size = step;
  if (t_end == 0.0) return out;
  const std::int64_t n =
      std::max<std::int64_t>(1, (std::int64_t)std::ceil(t_end / step - 1e-12));
  const double h = t_end / (double)n;
  out.report.steps = n;
  out.report.step_size = h;
  Mat2 gamma = Mat2::identity();
  for (std::int64_t i = 0; i < n; ++i) {
    const double t = t_end * (double)i / (double)n;
    const Mat2 k1 = rhs(gamma, beta, phi, t);
    const Mat2 k2 = rhs(gamma + 0.5 * h * k1, beta, phi, t + 0.5 * h);
    const Mat2 k3 = rhs(gamma + 0.5 * h * k2, beta, phi, t + 0.5 * h);
    const Mat2 k4 = rhs(gamma + h * k3, beta, phi, t + h);
    gamma = gamma + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    const double tn = t_end * (double)(i + 1) / (double)n;
    const Mat2 exact = geodesic_point({beta, phi, tn}).mat();
    out.report.max_error =
        std::max(out.report.max_error, max_abs_diff(gamma, exact));
    out.report.det_drift =
        std::max(out.report.det_drift, std::fabs(gamma.det() - 1.0));
  }
  out.raw_endpoint = gamma;
  return out;
}

double brute_force_distance(const GroupElement& g, int grid_beta, int grid_t,
                            double t_max) {
  if (grid_beta < 2 || grid_t < 2)
    throw InvalidArgument("brute_force_distance: grids must have >= 2 points");
  if (!(t_max > 0.0))
    throw InvalidArgument("brute_force_distance: t_max must be positive");
  if (max_abs_diff(g.mat(), Mat2::identity()) <= kMatchTol) return 0.0;

  // Refinement minimizes the squared Frobenius mismatch: it is smooth in
  // (beta, t, phi) where the sup norm has kinks that stall direct searches.
  // Acceptance at the end is still the sup-norm test.
  using Vec = std::array<double, 3>;  // (beta, t, phi)
  auto fro2 = [&](const Vec& x) {
    if (x[1] < 0.0) return kInf;
    const Mat2 d = geodesic_point({x[0], x[2], x[1]}).mat() - g.mat();
    return d.a11 * d.a11 + d.a12 * d.a12 + d.a21 * d.a21 + d.a22 * d.a22;
  };
  auto sup = [&](const Vec& x) {
    return max_abs_diff(geodesic_point({x[0], x[2], x[1]}).mat(), g.mat());
  };

  // coarse pass: best phi per (beta, t) cell
  std::vector<Cell> cells;
  cells.reserve((size_t)grid_beta * (size_t)grid_t);
  for (int ib = 0; ib < grid_beta; ++ib) {
    const double b = -kBetaBox + 2.0 * kBetaBox * ib / (grid_beta - 1);
    for (int it = 1; it <= grid_t; ++it) {
      const double t = t_max * it / grid_t;
      Cell best{kInf, b, t, 0.0};
      for (int ip = 0; ip < kPhiGrid; ++ip) {
        const double phi = -kPi + kTwoPi * ip / kPhiGrid;
        const double r = fro2({b, t, phi});
        if (r < best.res) best = {r, b, t, phi};
      }
      cells.push_back(best);
    }
  }
  std::sort(cells.begin(), cells.end(),
            [](const Cell& a, const Cell& b) { return a.res < b.res; });
  if (cells.size() > kRefineCells) cells.resize(kRefineCells);

  // downhill-simplex refinement of each surviving cell, seeded at one grid
  // spacing; short geodesics leave curved near-degenerate valleys in beta
  // that a simplex tracks where coordinate descent stalls
  const double db0 = 2.0 * kBetaBox / (grid_beta - 1);
  const double dt0 = t_max / grid_t;
  const double dp0 = kTwoPi / kPhiGrid;
  double best_t = kInf;
  for (const Cell& c : cells) {
    std::array<Vec, 4> v{Vec{c.beta, c.t, c.phi},
                         Vec{c.beta + db0, c.t, c.phi},
                         Vec{c.beta, c.t + dt0, c.phi},
                         Vec{c.beta, c.t, c.phi + dp0}};
    std::array<double, 4> f{fro2(v[0]), fro2(v[1]), fro2(v[2]), fro2(v[3])};
    for (int it = 0; it < 500; ++it) {
      std::array<int, 4> idx{0, 1, 2, 3};
      std::sort(idx.begin(), idx.end(), [&](int a, int b) { return f[a] < f[b]; });
      const std::array<Vec, 4> sv{v[idx[0]], v[idx[1]], v[idx[2]], v[idx[3]]};
      const std::array<double, 4> sf{f[idx[0]], f[idx[1]], f[idx[2]], f[idx[3]]};
      v = sv;
      f = sf;
      if (f[0] < 1e-26) break;
      Vec cen{};
      for (int i = 0; i < 3; ++i)
        for (int d = 0; d < 3; ++d) cen[d] += v[i][d] / 3.0;
      auto along = [&](double a) {
        Vec x;
        for (int d = 0; d < 3; ++d) x[d] = cen[d] + a * (v[3][d] - cen[d]);
        return x;
      };
      const Vec xr = along(-1.0);
      const double fr = fro2(xr);
      if (fr < f[0]) {
        const Vec xe = along(-2.0);
        const double fe = fro2(xe);
        if (fe < fr) {
          v[3] = xe;
          f[3] = fe;
        } else {
          v[3] = xr;
          f[3] = fr;
        }
      } else if (fr < f[2]) {
        v[3] = xr;
        f[3] = fr;
      } else {
        const Vec xc = along(fr < f[3] ? -0.5 : 0.5);
        const double fc = fro2(xc);
        if (fc < std::min(fr, f[3])) {
          v[3] = xc;
          f[3] = fc;
        } else {
          for (int i = 1; i < 4; ++i) {
            for (int d = 0; d < 3; ++d)
              v[i][d] = v[0][d] + 0.5 * (v[i][d] - v[0][d]);
            f[i] = fro2(v[i]);
          }
        }
      }
    }
    int bi = 0;
    for (int i = 1; i < 4; ++i)
      if (f[i] < f[bi]) bi = i;
    if (sup(v[bi]) <= kMatchTol && v[bi][1] <= t_max + dt0)
      best_t = std::min(best_t, v[bi][1]);
  }
  return best_t;
}

}  // namespace sl2sr
