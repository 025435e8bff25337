#ifndef KAM_KAM_H
#define KAM_KAM_H

/*
 * C interface to the kam library: minimal-coupling angular-momentum
 * operators on grids, their verification, and scenario runs.
 *
 * Every fallible call returns a kam_status. On failure, kam_last_error()
 * describes the problem; the text belongs to the calling thread and stays
 * valid until that thread's next kam call. Strings returned through char**
 * are owned by the caller and released with kam_string_free. Handles are
 * released with their matching *_free function; passing NULL to any
 * *_free function is a no-op.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(KAM_BUILDING_LIBRARY)
#define KAM_API __attribute__((visibility("default")))
#else
#define KAM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kam_status {
  KAM_OK = 0,
  KAM_ERR_INVALID_ARGUMENT = 1,
  KAM_ERR_PARSE = 2,
  KAM_ERR_PRECONDITION = 3,
  KAM_ERR_NOT_CONVERGED = 4,
  KAM_ERR_UNKNOWN_KEY = 5,
  KAM_ERR_DUPLICATE_KEY = 6,
  KAM_ERR_GRID_MISMATCH = 7,
  KAM_ERR_NOT_NORMALIZED = 8,
  KAM_ERR_UNKNOWN_SCENARIO = 9,
  KAM_ERR_INTERNAL = 10
} kam_status;

typedef enum kam_format { KAM_FORMAT_JSON = 0, KAM_FORMAT_CSV = 1 } kam_format;

typedef struct kam_field kam_field;
typedef struct kam_grid kam_grid;
typedef struct kam_wavefunction kam_wavefunction;
typedef struct kam_operator kam_operator;
typedef struct kam_scenario kam_scenario;
typedef struct kam_report kam_report;

KAM_API const char* kam_version(void);
KAM_API const char* kam_last_error(void);
KAM_API const char* kam_status_name(kam_status status);
KAM_API void kam_string_free(char* s);

/* Fields. `params` is NULL or "name = expr" entries separated by ';', read
 * in order. `a_expr` is "(Ax, Ay, Az)"; either expression may be NULL for
 * zero. Physical constants default to 1. */
KAM_API kam_status kam_field_parse(const char* params, const char* a_expr, const char* v_expr,
                                   kam_field** out);
KAM_API kam_status kam_field_set_constants(kam_field* field, double q, double hbar, double m,
                                           double c);
/* Magnetic field (curl A) as text "(Hx, Hy, Hz)". */
KAM_API kam_status kam_field_hmag(const kam_field* field, char** out);
KAM_API void kam_field_free(kam_field* field);

/* Grids: `ndim` in 1..3, every size >= 8; points centered on `center` (3
 * entries, NULL for the origin). */
KAM_API kam_status kam_grid_create(int ndim, const int* dims, double h, const double* center,
                                   kam_grid** out);
KAM_API size_t kam_grid_point_count(const kam_grid* grid);
KAM_API void kam_grid_free(kam_grid* grid);

/* Normalized Gaussian packet; `center` and `k` hold 3 entries each. */
KAM_API kam_status kam_packet_create(const kam_grid* grid, const double* center, double sigma,
                                     const double* k, int vortex, kam_wavefunction** out);
KAM_API kam_status kam_wavefunction_norm(const kam_wavefunction* psi, double* out);
/* Copies amplitudes as interleaved (re, im) pairs; `count` is the number of
 * doubles available and must be at least 2 * point count. */
KAM_API kam_status kam_wavefunction_amplitudes(const kam_wavefunction* psi, double* out,
                                               size_t count);
KAM_API void kam_wavefunction_free(kam_wavefunction* psi);

/* Operators by label: H, 1, x1..x3, D1..D3, p1..p3, pi1..pi3, l1..l3,
 * L1..L3, T1..T3, f1..f3. */
KAM_API kam_status kam_operator_build(const kam_grid* grid, const kam_field* field,
                                      const char* label, kam_operator** out);
KAM_API kam_status kam_operator_apply(const kam_operator* op, const kam_wavefunction* psi,
                                      kam_wavefunction** out);
KAM_API kam_status kam_operator_expectation(const kam_operator* op, const kam_wavefunction* psi,
                                            double* re, double* im);
KAM_API void kam_operator_free(kam_operator* op);

/* Exact tensor-identity suite; writes the run report as JSON. */
KAM_API kam_status kam_verify_tensors(uint64_t seed, int* passed, char** json_out);

/* Scenarios. On a parse failure `line` and `column` (either may be NULL)
 * receive the 1-based position of the problem. */
KAM_API kam_status kam_scenario_parse(const char* text, kam_scenario** out, size_t* line,
                                      size_t* column);
KAM_API kam_status kam_scenario_builtin(const char* name, kam_scenario** out);
KAM_API size_t kam_builtin_count(void);
KAM_API const char* kam_builtin_name(size_t index);
KAM_API const char* kam_builtin_summary(size_t index);
KAM_API const char* kam_builtin_text(size_t index);
KAM_API const char* kam_scenario_name(const kam_scenario* scenario);
KAM_API void kam_scenario_free(kam_scenario* scenario);

typedef struct kam_run_options {
  int override_seed; /* nonzero: use `seed` instead of the scenario seed */
  uint64_t seed;
  double tolerance_scale; /* 0 means 1 */
} kam_run_options;

/* `options` may be NULL. Check failures are part of the report; the status
 * reflects only whether the run could be carried out. */
KAM_API kam_status kam_run(const kam_scenario* scenario, const kam_run_options* options,
                           kam_report** out);
KAM_API kam_status kam_report_emit(const kam_report* report, kam_format format, char** out);
KAM_API kam_status kam_report_parse(const char* json, kam_report** out);
KAM_API int kam_report_passed(const kam_report* report);
KAM_API size_t kam_report_check_count(const kam_report* report);
KAM_API const char* kam_report_check_name(const kam_report* report, size_t index);
KAM_API int kam_report_check_passed(const kam_report* report, size_t index);
/* Trace CSV of check `index`; KAM_ERR_INVALID_ARGUMENT when it has none. */
KAM_API kam_status kam_report_trace_csv(const kam_report* report, size_t index, char** out);
KAM_API void kam_report_free(kam_report* report);

#ifdef __cplusplus
}
#endif

#endif
