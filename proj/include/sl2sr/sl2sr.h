/* Copyright 2026 the sl2sr authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the sl2sr library: the left-invariant sub-Riemannian
 * structure on SL(2) with the span of p1 = diag(1,-1)/2 and
 * p2 = offdiag(1,1)/2 as orthonormal horizontal distribution.
 *
 * Conventions shared by every function here:
 *   - matrices are row-major 2x2 doubles and must have determinant 1;
 *   - algebra vectors are coordinates in the basis (p1, p2, k) with
 *     k = [[0,-1],[1,0]]/2;
 *   - geodesics are parametrized by arclength t and the initial covector
 *     (beta, phi): gamma' = gamma (cos(beta t + phi) p1 + sin(beta t + phi) p2);
 *   - every entry point returns a status code; outputs are written only on
 *     SL2SR_OK, and sl2sr_last_error() describes the most recent failure on
 *     the calling thread.
 */

#ifndef SL2SR_H
#define SL2SR_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(SL2SR_BUILD)
#define SL2SR_API __declspec(dllexport)
#else
#define SL2SR_API __declspec(dllimport)
#endif
#else
#define SL2SR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sl2sr_status {
  SL2SR_OK = 0,
  SL2SR_ERR_INVALID_ARGUMENT = 1, /* bad parameter range, grid, or name */
  SL2SR_ERR_DET_NOT_ONE = 2,      /* input matrix is not in SL(2) */
  SL2SR_ERR_NOT_TRACELESS = 3,    /* input matrix is not in the algebra */
  SL2SR_ERR_PHI_UNDETERMINED = 4, /* endpoint is a rotation: phi is free */
  SL2SR_ERR_SEARCH_FAILED = 5,    /* inverse-geodesic search found nothing */
  SL2SR_ERR_INTERNAL = 6
} sl2sr_status;

typedef struct sl2sr_mat2 {
  double a11, a12, a21, a22;
} sl2sr_mat2;

typedef struct sl2sr_vec3 {
  double c1, c2, c3; /* coordinates in (p1, p2, k) */
} sl2sr_vec3;

/* Library version, "major.minor.patch". */
SL2SR_API const char* sl2sr_version(void);

/* Static description of a status code. */
SL2SR_API const char* sl2sr_status_message(sl2sr_status s);

/* Message of the last failure on this thread ("" if none yet). */
SL2SR_API const char* sl2sr_last_error(void);

/* ------------------------------------------------------------------ */
/* Lie algebra and group                                              */
/* ------------------------------------------------------------------ */

/* out = exp(c1 p1 + c2 p2 + c3 k), exact closed form. */
SL2SR_API sl2sr_status sl2sr_exp(const sl2sr_vec3* v, sl2sr_mat2* out);

/* Coordinates of a traceless matrix in (p1, p2, k); rejects |trace| > 1e-12. */
SL2SR_API sl2sr_status sl2sr_project(const sl2sr_mat2* m, sl2sr_vec3* out);

/* out = [a, b] in (p1, p2, k) coordinates. */
SL2SR_API sl2sr_status sl2sr_bracket(const sl2sr_vec3* a, const sl2sr_vec3* b,
                                     sl2sr_vec3* out);

/* The symmetry invariant sqrt((g11-g22)^2 + (g12+g21)^2)/2. */
SL2SR_API sl2sr_status sl2sr_m_invariant(const sl2sr_mat2* g, double* out);

/* out = exp(phi k) g exp(-phi k). */
SL2SR_API sl2sr_status sl2sr_conjugate_by_rotation(const sl2sr_mat2* g,
                                                   double phi,
                                                   sl2sr_mat2* out);

typedef enum sl2sr_symmetric_class {
  SL2SR_NOT_SYMMETRIC = 0,
  SL2SR_SIM_PLUS = 1, /* symmetric, trace >= 2 */
  SL2SR_SIM_MINUS = 2 /* symmetric, trace <= -2 */
} sl2sr_symmetric_class;

/* Symmetry classification; for SL2SR_SIM_PLUS also the decomposition
 * g = R(b) diag(e^a, e^-a) R(-b) with a >= 0 and b in [0, pi).
 * The symmetry test is |g12 - g21| <= tol * max(1, |g|); pass tol <= 0 for
 * the default 1e-10.  a and b may be NULL. */
SL2SR_API sl2sr_status sl2sr_classify_symmetric(const sl2sr_mat2* g,
                                                double tol, int* cls,
                                                double* a, double* b);

/* ------------------------------------------------------------------ */
/* Geodesics                                                          */
/* ------------------------------------------------------------------ */

/* Endpoint gamma(beta, phi; t), explicit entry formulas. */
SL2SR_API sl2sr_status sl2sr_geodesic_point(double beta, double phi, double t,
                                            sl2sr_mat2* out);

/* Same point as the product of two one-parameter subgroups; an independent
 * evaluation path for cross-checks. */
SL2SR_API sl2sr_status sl2sr_geodesic_point_product(double beta, double phi,
                                                    double t, sl2sr_mat2* out);

/* Control u(t) = cos(beta t + phi) p1 + sin(beta t + phi) p2. */
SL2SR_API sl2sr_status sl2sr_control(double beta, double phi, double t,
                                     sl2sr_vec3* out);

/* Isometry flow out = exp(s(cos phi p1 + sin phi p2 + beta k)) g
 * exp(-s beta k), which shifts the geodesic by s. */
SL2SR_API sl2sr_status sl2sr_orbit_flow(double beta, double phi, double s,
                                        const sl2sr_mat2* g, sl2sr_mat2* out);

/* ------------------------------------------------------------------ */
/* Cut locus and conjugate set                                        */
/* ------------------------------------------------------------------ */

typedef enum sl2sr_cut_regime {
  SL2SR_CUT_R1 = 0,      /* |beta| >= 2/sqrt(3): T = 2 pi / sqrt(beta^2-1) */
  SL2SR_CUT_R2 = 1,      /* beta^2 = 1: root of tan(T/2) = T/2 */
  SL2SR_CUT_R3 = 2,      /* 0 < |beta| < 1 */
  SL2SR_CUT_R4 = 3,      /* |beta| = 3/(2 sqrt(2)): T = 2 sqrt(2) pi */
  SL2SR_CUT_R5 = 4,      /* 3/(2 sqrt(2)) < |beta| < 2/sqrt(3) */
  SL2SR_CUT_R6 = 5,      /* 1 < |beta| < 3/(2 sqrt(2)) */
  SL2SR_CUT_STRAIGHT = 6 /* beta = 0: T = +infinity */
} sl2sr_cut_regime;

typedef struct sl2sr_cut_time_result {
  double T;
  int regime; /* sl2sr_cut_regime */
  double bracket_lo, bracket_hi;
  double residual;
} sl2sr_cut_time_result;

/* Largest t such that the geodesic with this beta minimizes on [0, t]. */
SL2SR_API sl2sr_status sl2sr_cut_time(double beta, sl2sr_cut_time_result* out);

typedef enum sl2sr_cut_witness {
  SL2SR_WITNESS_NO = 0,
  SL2SR_WITNESS_K = 1,   /* symmetric with trace <= -2 */
  SL2SR_WITNESS_S1 = 2,  /* nonidentity rotation */
  SL2SR_WITNESS_BOTH = 3 /* -identity */
} sl2sr_cut_witness;

/* Membership in the cut locus of the identity; pass tol <= 0 for the
 * default 1e-8.  witness may be NULL. */
SL2SR_API sl2sr_status sl2sr_is_in_cut_locus(const sl2sr_mat2* g, double tol,
                                             int* in_cut_locus, int* witness);

/* Conjugate times in (0, t_max], ascending; none exist for beta^2 <= 1.
 * Two-call pattern: with buf NULL (or cap too small) only *count is set.
 * Rejects t_max <= 0. */
SL2SR_API sl2sr_status sl2sr_conjugate_times(double beta, double t_max,
                                             double* buf, size_t cap,
                                             size_t* count);

/* Endpoint gamma(beta, phi, T(beta)); rejects beta = 0. */
SL2SR_API sl2sr_status sl2sr_cut_point(double beta, double phi,
                                       sl2sr_mat2* out);

/* ------------------------------------------------------------------ */
/* Inverse problem: log map and distance                              */
/* ------------------------------------------------------------------ */

typedef enum sl2sr_log_multiplicity {
  SL2SR_LOG_UNIQUE = 0,
  SL2SR_LOG_CUT_PAIR = 1, /* >= 2 minimizers */
  SL2SR_LOG_S1_CIRCLE = 2 /* rotation target: a circle of minimizers */
} sl2sr_log_multiplicity;

typedef struct sl2sr_log_result sl2sr_log_result; /* opaque */

/* All minimizing (beta, phi, t) for g, and the distance.  Pass tol <= 0 for
 * the default 1e-8.  On SL2SR_OK the caller owns *out and must free it with
 * sl2sr_log_result_free. */
SL2SR_API sl2sr_status sl2sr_log(const sl2sr_mat2* g, double tol,
                                 sl2sr_log_result** out);

SL2SR_API size_t sl2sr_log_result_count(const sl2sr_log_result* r);
SL2SR_API double sl2sr_log_result_distance(const sl2sr_log_result* r);
SL2SR_API int sl2sr_log_result_multiplicity(const sl2sr_log_result* r);
SL2SR_API sl2sr_status sl2sr_log_result_solution(const sl2sr_log_result* r,
                                                 size_t index, double* beta,
                                                 double* phi, double* t);
SL2SR_API void sl2sr_log_result_free(sl2sr_log_result* r);

/* Distance to the identity (the t of any minimizer). */
SL2SR_API sl2sr_status sl2sr_distance(const sl2sr_mat2* g, double tol,
                                      double* out);

/* Residuals of the two endpoint-matching equations at (beta, t): the
 * symmetric-part equation and the rotation-part equation. */
SL2SR_API sl2sr_status sl2sr_endpoint_equations(const sl2sr_mat2* g,
                                                double beta, double t,
                                                double* r_sym, double* r_rot);

/* The phi for which gamma(beta, phi, t) = g, given consistent (beta, t). */
SL2SR_API sl2sr_status sl2sr_recover_phi(const sl2sr_mat2* g, double beta,
                                         double t, double* out);

/* ------------------------------------------------------------------ */
/* Independent oracles                                                */
/* ------------------------------------------------------------------ */

typedef struct sl2sr_ode_report {
  double max_error; /* sup-norm deviation from the closed form */
  int64_t steps;
  double step_size;
  double det_drift; /* sup over the path of |det - 1| */
} sl2sr_ode_report;

/* Fixed-step 4th-order integration of gamma' = gamma u(t); endpoint and
 * report may each be NULL. */
SL2SR_API sl2sr_status sl2sr_integrate_geodesic(double beta, double phi,
                                                double t_end, double step,
                                                sl2sr_mat2* endpoint,
                                                sl2sr_ode_report* report);

/* Grid-plus-refinement search for the distance; +infinity when no geodesic
 * endpoint on the grid matches g.  Both grid counts must be >= 2 and
 * t_max > 0. */
SL2SR_API sl2sr_status sl2sr_brute_force_distance(const sl2sr_mat2* g,
                                                  int grid_beta, int grid_t,
                                                  double t_max, double* out);

/* ------------------------------------------------------------------ */
/* Verification suites                                                */
/* ------------------------------------------------------------------ */

typedef struct sl2sr_verify_report sl2sr_verify_report; /* opaque */

/* Suite name at index, NULL past the end ("all" is the last entry). */
SL2SR_API const char* sl2sr_verify_suite_name(size_t index);

/* Runs a named suite with deterministic sampling.  On SL2SR_OK the caller
 * owns *out and must free it with sl2sr_verify_report_free. */
SL2SR_API sl2sr_status sl2sr_verify(const char* suite, uint64_t seed,
                                    sl2sr_verify_report** out);

SL2SR_API int sl2sr_verify_passed(const sl2sr_verify_report* r);
SL2SR_API size_t sl2sr_verify_row_count(const sl2sr_verify_report* r);
SL2SR_API sl2sr_status sl2sr_verify_row(const sl2sr_verify_report* r,
                                        size_t index, const char** name,
                                        int64_t* checks, int64_t* failures,
                                        double* max_error);
SL2SR_API void sl2sr_verify_report_free(sl2sr_verify_report* r);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SL2SR_H */
