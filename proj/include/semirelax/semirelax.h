/* C interface to the semirelax solver and diagnostics library.
 *
 * Every function returning sr_status sets a thread-local message retrievable
 * with sr_last_error() when it fails. Handles are opaque and owned by the
 * caller; release them with the matching *_free function (NULL is accepted).
 * Strings returned through `const char*` stay valid until the owning handle
 * is freed; strings returned through `char**` must be released with
 * sr_string_free(). */
#ifndef SEMIRELAX_H
#define SEMIRELAX_H

#include <stddef.h>

#if defined(SEMIRELAX_BUILDING_LIBRARY)
#define SR_API __attribute__((visibility("default")))
#else
#define SR_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sr_status {
  SR_OK = 0,
  SR_ERR_INVALID_ARGUMENT = 1,
  SR_ERR_PARSE = 2,
  SR_ERR_HYPOTHESIS = 3,
  SR_ERR_NUMERICAL = 4,
  SR_ERR_IO = 5,
  SR_ERR_INTERNAL = 6
} sr_status;

SR_API const char* sr_last_error(void);
SR_API const char* sr_status_name(sr_status status);
SR_API const char* sr_version(void);
SR_API void sr_string_free(char* s);

/* ---- fields on periodic grids -------------------------------------- */

typedef struct sr_field sr_field;

/* Zero field on [-L/2, L/2)^n with N points per axis (N a power of two). */
SR_API sr_status sr_field_create(int n, int N, double L, sr_field** out);
/* Copies N^n complex samples given as interleaved (re, im) pairs. */
SR_API sr_status sr_field_set(sr_field* f, const double* interleaved, size_t count);
SR_API sr_status sr_field_get(const sr_field* f, double* interleaved, size_t count);
SR_API size_t sr_field_size(const sr_field* f);
SR_API sr_status sr_field_read(const char* path, sr_field** out);
SR_API sr_status sr_field_write(const sr_field* f, const char* path);
/* ||f||_{L^p}; pass p = INFINITY for the max norm. */
SR_API sr_status sr_field_lp_norm(const sr_field* f, double p, double* out);
/* Sobolev norm: homogeneous != 0 selects the dot-H^s seminorm. */
SR_API sr_status sr_field_sobolev_norm(const sr_field* f, double s, int homogeneous, double* out);
/* f <- e^{-i tau D} f. */
SR_API sr_status sr_field_linear_step(sr_field* f, double tau);
SR_API void sr_field_free(sr_field* f);

/* ---- evolution ------------------------------------------------------- */

typedef struct sr_trajectory sr_trajectory;

typedef struct sr_stepper_options {
  double p;
  double dt;
  double final_time;
  int snapshot_stride;
  int dealias;           /* 2/3 rule for odd integer p <= 5 */
  int lie;               /* nonzero selects first-order Lie splitting */
  double nonlinear_coefficient; /* 1 for the dissipative problem, 0 for free flow */
} sr_stepper_options;

SR_API sr_stepper_options sr_stepper_defaults(void);
SR_API sr_status sr_evolve(const sr_field* u0, const sr_stepper_options* options, sr_trajectory** out);
SR_API size_t sr_trajectory_size(const sr_trajectory* t);
SR_API double sr_trajectory_time(const sr_trajectory* t, size_t i);
/* Copy of snapshot i as a new field handle. */
SR_API sr_status sr_trajectory_snapshot(const sr_trajectory* t, size_t i, sr_field** out);
SR_API sr_status sr_trajectory_write(const sr_trajectory* t, const char* dir);
/* Relative residuals of the L^2 and H^1 dissipation identities on [t1, t2]. */
SR_API sr_status sr_l2_identity(const sr_trajectory* t, double t1, double t2, double* relative);
SR_API sr_status sr_h1_identity(const sr_trajectory* t, double t1, double t2, double* relative);
SR_API void sr_trajectory_free(sr_trajectory* t);

/* ---- exponent bookkeeping ------------------------------------------- */

SR_API sr_status sr_scaling_critical_exponent(int n, double p, double* out);
SR_API sr_status sr_critical_power(int n, double s, double* out);
/* Exact check; arguments are decimal or a/b strings, q and r may be "inf".
 * s, q, r may be NULL. Writes a JSON report. */
SR_API sr_status sr_check_exponents(int n, const char* p, const char* s, const char* q, const char* r, char** json);

/* ---- scenarios ------------------------------------------------------- */

typedef struct sr_config sr_config;
typedef struct sr_report sr_report;
typedef struct sr_sweep sr_sweep;

typedef struct sr_run_options {
  const char* out_dir;   /* NULL means "out" */
  int deterministic;
  int plots;
  int save_trajectory;
} sr_run_options;

SR_API sr_status sr_config_load(const char* path, sr_config** out);
/* base_dir resolves relative file(...) data paths; may be NULL. */
SR_API sr_status sr_config_parse(const char* text, const char* base_dir, sr_config** out);
SR_API size_t sr_config_count(const sr_config* c);
SR_API const char* sr_config_name(const sr_config* c, size_t i);
/* Index of the named scenario; SR_ERR_INVALID_ARGUMENT if absent. */
SR_API sr_status sr_config_find(const sr_config* c, const char* name, size_t* index);
/* Overrides one key of scenario i and revalidates it. */
SR_API sr_status sr_config_set(sr_config* c, size_t i, const char* key, const char* value);
SR_API void sr_config_free(sr_config* c);

SR_API sr_status sr_run(const sr_config* c, size_t i, const sr_run_options* options, sr_report** out);
SR_API int sr_report_passed(const sr_report* r);
SR_API size_t sr_report_check_count(const sr_report* r);
SR_API sr_status sr_report_check(const sr_report* r, size_t k, const char** name, int* passed, double* value);
SR_API const char* sr_report_json(const sr_report* r);
SR_API const char* sr_report_directory(const sr_report* r);
SR_API void sr_report_free(sr_report* r);

/* axes: strings "key=v1,v2,..." with key in dt, N, amplitude, sigma.
 * threads <= 0 uses the SEMIRELAX_THREADS cap. */
SR_API sr_status sr_sweep_run(const sr_config* c, size_t i, const char* const* axes, size_t axis_count,
                              const sr_run_options* options, int threads, sr_sweep** out);
SR_API int sr_sweep_passed(const sr_sweep* s);
SR_API size_t sr_sweep_member_count(const sr_sweep* s);
/* error is "" for members that ran. */
SR_API sr_status sr_sweep_member(const sr_sweep* s, size_t k, const char** name, int* passed, const char** error);
SR_API const char* sr_sweep_aggregate_path(const sr_sweep* s);
SR_API void sr_sweep_free(sr_sweep* s);

SR_API sr_status sr_bisect_amplitude(const sr_config* c, size_t i, double lo, double hi, int iterations,
                                     const sr_run_options* options, double* largest_stable,
                                     double* smallest_unstable);

#ifdef __cplusplus
}
#endif

#endif
