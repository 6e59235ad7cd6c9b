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

// C boundary: translate between the POD types of sl2sr.h and the C++ core,
// and between exceptions and status codes.  No numeric logic lives here.

#include "sl2sr/sl2sr.h"

#include <cstring>
#include <new>
#include <string>

#include "core/algebra.hpp"
#include "core/cut_locus.hpp"
#include "core/geodesic.hpp"
#include "core/log_map.hpp"
#include "core/oracle.hpp"
#include "core/types.hpp"
#include "core/verify.hpp"

namespace {

thread_local std::string g_last_error;

// Exceptions cross the C boundary as status codes; the specific classes
// must be matched before their InvalidArgument base.
template <typename Fn>
sl2sr_status guarded(Fn&& fn) {
  try {
    fn();
    return SL2SR_OK;
  } catch (const sl2sr::DetNotOne& e) {
    g_last_error = e.what();
    return SL2SR_ERR_DET_NOT_ONE;
  } catch (const sl2sr::NotTraceless& e) {
    g_last_error = e.what();
    return SL2SR_ERR_NOT_TRACELESS;
  } catch (const sl2sr::PhiUndetermined& e) {
    g_last_error = e.what();
    return SL2SR_ERR_PHI_UNDETERMINED;
  } catch (const sl2sr::InvalidArgument& e) {
    g_last_error = e.what();
    return SL2SR_ERR_INVALID_ARGUMENT;
  } catch (const sl2sr::SearchFailure& e) {
    g_last_error = e.what();
    return SL2SR_ERR_SEARCH_FAILED;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SL2SR_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return SL2SR_ERR_INTERNAL;
  }
}

sl2sr_status require(bool ok, const char* what) {
  if (ok) return SL2SR_OK;
  g_last_error = what;
  return SL2SR_ERR_INVALID_ARGUMENT;
}

sl2sr::Mat2 to_mat(const sl2sr_mat2& m) { return {m.a11, m.a12, m.a21, m.a22}; }

sl2sr_mat2 from_mat(const sl2sr::Mat2& m) {
  return {m.a11, m.a12, m.a21, m.a22};
}

sl2sr::AlgebraVector to_vec(const sl2sr_vec3& v) { return {v.c1, v.c2, v.c3}; }

sl2sr_vec3 from_vec(const sl2sr::AlgebraVector& v) {
  return {v.c1, v.c2, v.c3};
}

// Checked construction: DetNotOne surfaces as its own status.
sl2sr::GroupElement to_group(const sl2sr_mat2& m) {
  return sl2sr::GroupElement(to_mat(m));
}

int to_c(sl2sr::SymmetricClass c) {
  switch (c) {
    case sl2sr::SymmetricClass::SimPlus:
      return SL2SR_SIM_PLUS;
    case sl2sr::SymmetricClass::SimMinus:
      return SL2SR_SIM_MINUS;
    default:
      return SL2SR_NOT_SYMMETRIC;
  }
}

int to_c(sl2sr::CutRegime r) {
  switch (r) {
    case sl2sr::CutRegime::R1:
      return SL2SR_CUT_R1;
    case sl2sr::CutRegime::R2:
      return SL2SR_CUT_R2;
    case sl2sr::CutRegime::R3:
      return SL2SR_CUT_R3;
    case sl2sr::CutRegime::R4:
      return SL2SR_CUT_R4;
    case sl2sr::CutRegime::R5:
      return SL2SR_CUT_R5;
    case sl2sr::CutRegime::R6:
      return SL2SR_CUT_R6;
    default:
      return SL2SR_CUT_STRAIGHT;
  }
}

int to_c(sl2sr::CutWitness w) {
  switch (w) {
    case sl2sr::CutWitness::K:
      return SL2SR_WITNESS_K;
    case sl2sr::CutWitness::S1:
      return SL2SR_WITNESS_S1;
    case sl2sr::CutWitness::Both:
      return SL2SR_WITNESS_BOTH;
    default:
      return SL2SR_WITNESS_NO;
  }
}

int to_c(sl2sr::LogMultiplicity m) {
  switch (m) {
    case sl2sr::LogMultiplicity::CutPair:
      return SL2SR_LOG_CUT_PAIR;
    case sl2sr::LogMultiplicity::S1Circle:
      return SL2SR_LOG_S1_CIRCLE;
    default:
      return SL2SR_LOG_UNIQUE;
  }
}

double or_default(double tol, double fallback) {
  return tol > 0.0 ? tol : fallback;
}

}  // namespace

struct sl2sr_log_result {
  sl2sr::LogResult r;
};

struct sl2sr_verify_report {
  sl2sr::VerifyReport r;
};

extern "C" {

const char* sl2sr_version(void) { return "1.0.0"; }

const char* sl2sr_status_message(sl2sr_status s) {
  switch (s) {
    case SL2SR_OK:
      return "ok";
    case SL2SR_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case SL2SR_ERR_DET_NOT_ONE:
      return "matrix is not in SL(2)";
    case SL2SR_ERR_NOT_TRACELESS:
      return "matrix is not traceless";
    case SL2SR_ERR_PHI_UNDETERMINED:
      return "phi is undetermined at a rotation endpoint";
    case SL2SR_ERR_SEARCH_FAILED:
      return "inverse-geodesic search failed";
    default:
      return "internal error";
  }
}

const char* sl2sr_last_error(void) { return g_last_error.c_str(); }

sl2sr_status sl2sr_exp(const sl2sr_vec3* v, sl2sr_mat2* out) {
  if (auto s = require(v && out, "null pointer")) return s;
  return guarded([&] { *out = from_mat(sl2sr::mat_exp(to_vec(*v)).mat()); });
}

sl2sr_status sl2sr_project(const sl2sr_mat2* m, sl2sr_vec3* out) {
  if (auto s = require(m && out, "null pointer")) return s;
  return guarded([&] { *out = from_vec(sl2sr::project(to_mat(*m))); });
}

sl2sr_status sl2sr_bracket(const sl2sr_vec3* a, const sl2sr_vec3* b,
                           sl2sr_vec3* out) {
  if (auto s = require(a && b && out, "null pointer")) return s;
  return guarded(
      [&] { *out = from_vec(sl2sr::lie_bracket(to_vec(*a), to_vec(*b))); });
}

sl2sr_status sl2sr_m_invariant(const sl2sr_mat2* g, double* out) {
  if (auto s = require(g && out, "null pointer")) return s;
  return guarded([&] { *out = sl2sr::m_invariant(to_group(*g)); });
}

sl2sr_status sl2sr_conjugate_by_rotation(const sl2sr_mat2* g, double phi,
                                         sl2sr_mat2* out) {
  if (auto s = require(g && out, "null pointer")) return s;
  return guarded([&] {
    *out = from_mat(sl2sr::conjugate_by_rotation(to_group(*g), phi).mat());
  });
}

sl2sr_status sl2sr_classify_symmetric(const sl2sr_mat2* g, double tol,
                                      int* cls, double* a, double* b) {
  if (auto s = require(g && cls, "null pointer")) return s;
  return guarded([&] {
    const sl2sr::SymmetricInfo info =
        sl2sr::classify_symmetric(to_group(*g), or_default(tol, 1e-10));
    *cls = to_c(info.cls);
    if (a) *a = info.a;
    if (b) *b = info.b;
  });
}

sl2sr_status sl2sr_geodesic_point(double beta, double phi, double t,
                                  sl2sr_mat2* out) {
  if (auto s = require(out != nullptr, "null pointer")) return s;
  return guarded(
      [&] { *out = from_mat(sl2sr::geodesic_point({beta, phi, t}).mat()); });
}

sl2sr_status sl2sr_geodesic_point_product(double beta, double phi, double t,
                                          sl2sr_mat2* out) {
  if (auto s = require(out != nullptr, "null pointer")) return s;
  return guarded([&] {
    *out = from_mat(sl2sr::geodesic_point_product({beta, phi, t}).mat());
  });
}

sl2sr_status sl2sr_control(double beta, double phi, double t,
                           sl2sr_vec3* out) {
  if (auto s = require(out != nullptr, "null pointer")) return s;
  return guarded([&] { *out = from_vec(sl2sr::control({beta, phi, t})); });
}

sl2sr_status sl2sr_orbit_flow(double beta, double phi, double s,
                              const sl2sr_mat2* g, sl2sr_mat2* out) {
  if (auto st = require(g && out, "null pointer")) return st;
  return guarded([&] {
    *out = from_mat(
        sl2sr::orbit_flow({beta, phi, 0.0}, s, to_group(*g)).mat());
  });
}

sl2sr_status sl2sr_cut_time(double beta, sl2sr_cut_time_result* out) {
  if (auto s = require(out != nullptr, "null pointer")) return s;
  return guarded([&] {
    const sl2sr::CutTimeResult r = sl2sr::cut_time(beta);
    out->T = r.T;
    out->regime = to_c(r.regime);
    out->bracket_lo = r.bracket_lo;
    out->bracket_hi = r.bracket_hi;
    out->residual = r.residual;
  });
}

sl2sr_status sl2sr_is_in_cut_locus(const sl2sr_mat2* g, double tol,
                                   int* in_cut_locus, int* witness) {
  if (auto s = require(g && in_cut_locus, "null pointer")) return s;
  return guarded([&] {
    const sl2sr::CutLocusQuery q =
        sl2sr::is_in_cut_locus(to_group(*g), or_default(tol, 1e-8));
    *in_cut_locus = q.in_cut_locus ? 1 : 0;
    if (witness) *witness = to_c(q.witness);
  });
}

sl2sr_status sl2sr_conjugate_times(double beta, double t_max, double* buf,
                                   size_t cap, size_t* count) {
  if (auto s = require(count != nullptr, "null pointer")) return s;
  return guarded([&] {
    const std::vector<double> times = sl2sr::conjugate_times(beta, t_max);
    *count = times.size();
    if (buf && cap >= times.size())
      std::memcpy(buf, times.data(), times.size() * sizeof(double));
  });
}

sl2sr_status sl2sr_cut_point(double beta, double phi, sl2sr_mat2* out) {
  if (auto s = require(out != nullptr, "null pointer")) return s;
  return guarded(
      [&] { *out = from_mat(sl2sr::cut_point(beta, phi).mat()); });
}

sl2sr_status sl2sr_log(const sl2sr_mat2* g, double tol,
                       sl2sr_log_result** out) {
  if (auto s = require(g && out, "null pointer")) return s;
  return guarded([&] {
    auto* box = new sl2sr_log_result{
        sl2sr::sr_log(to_group(*g), or_default(tol, 1e-8))};
    *out = box;
  });
}

size_t sl2sr_log_result_count(const sl2sr_log_result* r) {
  return r ? r->r.solutions.size() : 0;
}

double sl2sr_log_result_distance(const sl2sr_log_result* r) {
  return r ? r->r.distance : 0.0;
}

int sl2sr_log_result_multiplicity(const sl2sr_log_result* r) {
  return r ? to_c(r->r.multiplicity) : SL2SR_LOG_UNIQUE;
}

sl2sr_status sl2sr_log_result_solution(const sl2sr_log_result* r, size_t index,
                                       double* beta, double* phi, double* t) {
  if (auto s = require(r && beta && phi && t, "null pointer")) return s;
  if (auto s = require(index < r->r.solutions.size(), "index out of range"))
    return s;
  const sl2sr::GeodesicParams& p = r->r.solutions[index];
  *beta = p.beta;
  *phi = p.phi;
  *t = p.t;
  return SL2SR_OK;
}

void sl2sr_log_result_free(sl2sr_log_result* r) { delete r; }

sl2sr_status sl2sr_distance(const sl2sr_mat2* g, double tol, double* out) {
  if (auto s = require(g && out, "null pointer")) return s;
  return guarded(
      [&] { *out = sl2sr::sr_distance(to_group(*g), or_default(tol, 1e-8)); });
}

sl2sr_status sl2sr_endpoint_equations(const sl2sr_mat2* g, double beta,
                                      double t, double* r_sym, double* r_rot) {
  if (auto s = require(g && r_sym && r_rot, "null pointer")) return s;
  return guarded([&] {
    const sl2sr::EndpointResiduals r =
        sl2sr::endpoint_equations(to_group(*g), beta, t);
    *r_sym = r.r_sym;
    *r_rot = r.r_rot;
  });
}

sl2sr_status sl2sr_recover_phi(const sl2sr_mat2* g, double beta, double t,
                               double* out) {
  if (auto s = require(g && out, "null pointer")) return s;
  return guarded(
      [&] { *out = sl2sr::recover_phi(to_group(*g), beta, t); });
}

sl2sr_status sl2sr_integrate_geodesic(double beta, double phi, double t_end,
                                      double step, sl2sr_mat2* endpoint,
                                      sl2sr_ode_report* report) {
  return guarded([&] {
    const sl2sr::IntegrationResult r =
        sl2sr::integrate_geodesic_ode(beta, phi, t_end, step);
    if (endpoint) *endpoint = from_mat(r.raw_endpoint);
    if (report) {
      report->max_error = r.report.max_error;
      report->steps = r.report.steps;
      report->step_size = r.report.step_size;
      report->det_drift = r.report.det_drift;
    }
  });
}

sl2sr_status sl2sr_brute_force_distance(const sl2sr_mat2* g, int grid_beta,
                                        int grid_t, double t_max,
                                        double* out) {
  if (auto s = require(g && out, "null pointer")) return s;
  return guarded([&] {
    *out = sl2sr::brute_force_distance(to_group(*g), grid_beta, grid_t, t_max);
  });
}

const char* sl2sr_verify_suite_name(size_t index) {
  const auto& names = sl2sr::verify_suite_names();
  return index < names.size() ? names[index].c_str() : nullptr;
}

sl2sr_status sl2sr_verify(const char* suite, uint64_t seed,
                          sl2sr_verify_report** out) {
  if (auto s = require(suite && out, "null pointer")) return s;
  return guarded([&] {
    auto* box = new sl2sr_verify_report{sl2sr::run_verify_suite(suite, seed)};
    *out = box;
  });
}

int sl2sr_verify_passed(const sl2sr_verify_report* r) {
  return (r && r->r.passed()) ? 1 : 0;
}

size_t sl2sr_verify_row_count(const sl2sr_verify_report* r) {
  return r ? r->r.rows.size() : 0;
}

sl2sr_status sl2sr_verify_row(const sl2sr_verify_report* r, size_t index,
                              const char** name, int64_t* checks,
                              int64_t* failures, double* max_error) {
  if (auto s = require(r != nullptr, "null pointer")) return s;
  if (auto s = require(index < r->r.rows.size(), "index out of range"))
    return s;
  const sl2sr::VerifyRow& row = r->r.rows[index];
  if (name) *name = row.name.c_str();
  if (checks) *checks = row.checks;
  if (failures) *failures = row.failures;
  if (max_error) *max_error = row.max_error;
  return SL2SR_OK;
}

void sl2sr_verify_report_free(sl2sr_verify_report* r) { delete r; }

}  // extern "C"
