/*
 * Copyright 2026 the qubitgp authors
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

/*
 * qubitgp.h — C API of the qubitgp shared library.
 *
 * Simulates the non-unitary dynamics of a driven qubit under longitudinal
 * and transverse noise (second-order master equation with time-dependent
 * coefficients) and extracts the open-system geometric phase.
 *
 * Conventions:
 *  - All frequencies are in units of the detuning delta; delta itself is 1.
 *  - Every function returns QGP_OK (0) on success; on failure, a nonzero
 *    status is returned and qgp_last_error() carries a thread-local message.
 *  - Objects created by qgp_*_create must be released with the matching
 *    qgp_*_destroy; handles are opaque and never shared across create calls.
 */

#ifndef QUBITGP_H
#define QUBITGP_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(QGP_BUILD_SHARED)
#    define QGP_API __declspec(dllexport)
#  else
#    define QGP_API __declspec(dllimport)
#  endif
#else
#  define QGP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qgp_status {
    QGP_OK = 0,
    QGP_ERROR_INVALID_ARGUMENT = 1,
    QGP_ERROR_DOMAIN = 2,
    QGP_ERROR_NUMERICAL = 3,
    QGP_ERROR_STATE = 4,
    QGP_ERROR_IO = 5,
    QGP_ERROR_INTERNAL = 6
} qgp_status;

QGP_API const char* qgp_version(void);
QGP_API const char* qgp_status_name(qgp_status status);

/* Thread-local message describing the most recent failure in this thread;
 * empty string when the last call succeeded. */
QGP_API const char* qgp_last_error(void);

/* ---- qubit parameters ------------------------------------------------- */

typedef struct qgp_qubit_params {
    double omega; /* Rabi coupling, units of delta */
    double delta; /* detuning; fixed to 1 by the external interfaces */
} qgp_qubit_params;

QGP_API qgp_status qgp_cycle_time(const qgp_qubit_params* params, double* tau_out);
QGP_API qgp_status qgp_unitary_berry_phase(const qgp_qubit_params* params, double* phi_out);

/* ---- noise models ------------------------------------------------------ */

typedef struct qgp_noise qgp_noise;

QGP_API qgp_status qgp_noise_create_delta(double gamma0, double gamma1, double kbt,
                                          qgp_noise** out);
QGP_API qgp_status qgp_noise_create_gaussian(double gamma0, double gamma1, double alpha0,
                                             double alpha1, qgp_noise** out);
/* high_temperature = 0 selects the T = 0 kernel (kbt ignored). */
QGP_API qgp_status qgp_noise_create_one_over_f(double gamma, double lambda, int high_temperature,
                                               double kbt, qgp_noise** out);
QGP_API void qgp_noise_destroy(qgp_noise* noise);

/* Kernel value at lag s; channel 0 = longitudinal (sigma_z), 1 = transverse
 * (sigma_x). Fails with QGP_ERROR_DOMAIN for the delta model. */
QGP_API qgp_status qgp_kernel_value(const qgp_noise* noise, int channel, double s, double* out);

/* ---- diffusion coefficients -------------------------------------------- */

/* out = {dxx, fxy, fxz, fzx, fzy, dzz} at time t (direct quadrature). */
QGP_API qgp_status qgp_diffusion_coefficients(const qgp_qubit_params* params,
                                              const qgp_noise* noise, double t, double out[6]);

typedef struct qgp_coeff_table qgp_coeff_table;

/* npts >= 64. */
QGP_API qgp_status qgp_coeff_table_create(const qgp_qubit_params* params, const qgp_noise* noise,
                                          double t_end, long npts, qgp_coeff_table** out);
QGP_API qgp_status qgp_coeff_table_eval(const qgp_coeff_table* table, double t, double out[6]);
/* CSV columns: t,dxx,fxy,fxz,fzx,fzy,dzz */
QGP_API qgp_status qgp_coeff_table_write_csv(const qgp_coeff_table* table, const char* path);
QGP_API void qgp_coeff_table_destroy(qgp_coeff_table* table);

/* ---- evolution ---------------------------------------------------------- */

typedef struct qgp_evolve_config {
    double t_end;      /* > 0 */
    double dt;         /* fixed step; rounded to divide t_end exactly */
    long sample_every; /* store every k-th step; must divide the step count */
    int use_table;     /* nonzero: interpolate coefficients from a table */
    int adaptive;      /* nonzero: adaptive RK45 instead of fixed-step RK4 */
    double rel_tol;    /* RK45 relative tolerance */
} qgp_evolve_config;

/* One unitary cycle, 1e4 RK4 steps, table-backed coefficients. */
QGP_API qgp_status qgp_evolve_config_default(const qgp_qubit_params* params,
                                             qgp_evolve_config* cfg_out);

typedef struct qgp_trajectory qgp_trajectory;

/* bloch0 may be NULL for the default initial state |0><0| (north pole). */
QGP_API qgp_status qgp_evolve(const qgp_qubit_params* params, const qgp_noise* noise,
                              const double bloch0[3], const qgp_evolve_config* cfg,
                              qgp_trajectory** out);
QGP_API void qgp_trajectory_destroy(qgp_trajectory* traj);

QGP_API qgp_status qgp_trajectory_length(const qgp_trajectory* traj, size_t* n_out);
QGP_API qgp_status qgp_trajectory_get(const qgp_trajectory* traj, size_t index, double* t_out,
                                      double bloch_out[3]);
QGP_API qgp_status qgp_trajectory_final_bloch_norm(const qgp_trajectory* traj, double* out);
/* CSV columns: t,rx,ry,rz,purity,eps1,eps2 (full-precision, '.', '\n'). */
QGP_API qgp_status qgp_trajectory_write_csv(const qgp_trajectory* traj, const char* path);

/* ---- geometric phase ----------------------------------------------------- */

typedef struct qgp_gp_result {
    double phi;         /* radians in (-pi, pi] */
    double phi_unitary; /* pi (1 - cos theta) */
    double ratio;       /* |phi| / phi_unitary */
    double min_gap;     /* minimum eigenvalue gap along the path */
    int converged;      /* sample halving moved phi by < 1e-6 */
    int degraded;       /* near-degeneracy encountered mid-path */
} qgp_gp_result;

QGP_API qgp_status qgp_geometric_phase(const qgp_trajectory* traj, qgp_gp_result* out);
/* evolve + geometric_phase over one cycle from |0><0|. */
QGP_API qgp_status qgp_gp_ratio(const qgp_qubit_params* params, const qgp_noise* noise,
                                const qgp_evolve_config* cfg, qgp_gp_result* out);
/* JSON object with fields phi, phi_unitary, ratio, min_gap, converged. */
QGP_API qgp_status qgp_gp_result_write_json(const qgp_gp_result* result, const char* path);

/* ---- parameter sweeps ----------------------------------------------------- */

typedef struct qgp_sweep qgp_sweep;

/* quantity: "gp_ratio" | "final_purity" | "final_bloch". */
QGP_API qgp_status qgp_sweep_create(const qgp_qubit_params* params, const qgp_noise* noise,
                                    const qgp_evolve_config* cfg, const char* quantity,
                                    qgp_sweep** out);
/* axis 1 or 2; param must belong to the noise model (e.g. "alpha0"). */
QGP_API qgp_status qgp_sweep_set_axis(qgp_sweep* sweep, int axis, const char* param,
                                      const double* values, size_t count);
/* threads <= 0 selects the hardware concurrency. Per-cell failures are
 * recorded in flags and never abort the sweep. */
QGP_API qgp_status qgp_sweep_run(qgp_sweep* sweep, int threads);
QGP_API qgp_status qgp_sweep_dims(const qgp_sweep* sweep, size_t* rows_out, size_t* cols_out);
QGP_API qgp_status qgp_sweep_cell(const qgp_sweep* sweep, size_t i, size_t j, double* value_out,
                                  int* converged_out, int* failed_out);
/* Long-form CSV: axis1,axis2,value,converged (axis2 column dropped when 1-D). */
QGP_API qgp_status qgp_sweep_write_csv(const qgp_sweep* sweep, const char* path);
/* JSON with the full provenance block. */
QGP_API qgp_status qgp_sweep_write_json(const qgp_sweep* sweep, const char* path);
QGP_API void qgp_sweep_destroy(qgp_sweep* sweep);

/* Writes the four canonical gaussian-model slices (gamma0 varying at
 * gamma1 = 0 and vice versa, at alpha in {alpha_low, alpha_high}) into
 * out_dir as slice_<axis>_alpha_<value>.csv plus slices.json. */
QGP_API qgp_status qgp_write_canonical_slices(const qgp_qubit_params* params,
                                              const qgp_evolve_config* cfg,
                                              const double* gamma_values, size_t count,
                                              double alpha_low, double alpha_high, int threads,
                                              const char* out_dir);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* QUBITGP_H */
