/*
 * rfunc: dense complex-matrix functional r(A,B), its sharp bounds, and
 * relaxation-rate audits for GKLS semigroup generators.
 *
 * C API over an opaque-handle C++ core. Every function returns rf_status;
 * on failure a thread-local message is available from rf_last_error().
 * Strings returned through char** out parameters are owned by the caller
 * and must be released with rf_string_free().
 */
#ifndef RFUNC_H
#define RFUNC_H

#include <stdint.h>

#if defined(_WIN32)
#define RFUNC_API __declspec(dllexport)
#else
#define RFUNC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rf_status {
    RF_OK = 0,
    RF_ERR_NULL_ARGUMENT = 1,    /* a required pointer was NULL */
    RF_ERR_INVALID_ARGUMENT = 2, /* precondition violated (range, contract) */
    RF_ERR_DIMENSION = 3,        /* incompatible shapes */
    RF_ERR_PARSE = 4,            /* malformed JSON or schema mismatch */
    RF_ERR_CONVERGENCE = 5,      /* iterative kernel ran out of sweeps */
    RF_ERR_INTERNAL = 6          /* internal consistency check failed */
} rf_status;

typedef struct rf_matrix rf_matrix;       /* dense complex matrix */
typedef struct rf_generator rf_generator; /* GKLS generator (H, jumps) */

RFUNC_API const char* rf_version(void);
RFUNC_API const char* rf_status_name(rf_status status);

/* Message describing the most recent failure on the calling thread. */
RFUNC_API const char* rf_last_error(void);

/* ---- matrices ------------------------------------------------------- */

/* Row-major data; im may be NULL for a real matrix. */
RFUNC_API rf_status rf_matrix_create(int rows, int cols, const double* re, const double* im,
                                     rf_matrix** out);
/* Wire format: {"rows":n,"cols":n,"re":[[...]],"im":[[...]]}. */
RFUNC_API rf_status rf_matrix_from_json(const char* json_text, rf_matrix** out);
RFUNC_API rf_status rf_matrix_to_json(const rf_matrix* m, char** out_json);
RFUNC_API rf_status rf_matrix_shape(const rf_matrix* m, int* rows, int* cols);
RFUNC_API rf_status rf_matrix_get(const rf_matrix* m, int row, int col, double* re, double* im);
RFUNC_API void rf_matrix_free(rf_matrix* m);

/* ---- the r functional ------------------------------------------------ */

RFUNC_API rf_status rf_r_eval(const rf_matrix* a, const rf_matrix* b, double* out_value);
RFUNC_API rf_status rf_r_self(const rf_matrix* a, double* out_value);
RFUNC_API rf_status rf_frobenius_norm(const rf_matrix* a, double* out_value);

/* Every equivalent evaluation route (keys eq1, eq9..eq15), their spread,
 * the ratio r/(||A||^2 ||B||^2), and which bounds apply and hold. */
RFUNC_API rf_status rf_r_report_json(const rf_matrix* a, const rf_matrix* b, char** out_json);

/* ---- sharp constants and witnesses ----------------------------------- */

/* c in c_- ||A||^2||B||^2 <= r <= c_+ ||A||^2||B||^2; traceless != 0
 * selects the tighter constants for tr A = 0. */
RFUNC_API rf_status rf_best_constants(int n, int traceless, double* c_minus, double* c_plus);

/* kind: "general" | "traceless" | "qubit" | "self";
 * sign: "upper" | "lower" (ignored for "self"). */
RFUNC_API rf_status rf_witness_json(int n, const char* kind, const char* sign, char** out_json);

/* ---- numerical extremization ------------------------------------------ */

/* Task: {"n":int, "mode":"maximize"|"minimize", "traceless":bool,
 *        "restarts":int, "seed":uint, "max_sweeps":int,
 *        "convergence_tol":double}; unknown keys keep their defaults. */
RFUNC_API rf_status rf_extremize_json(const char* task_json, char** out_json);

/* ---- randomized property verification --------------------------------- */

RFUNC_API rf_status rf_verify_json(int n, int samples, uint64_t seed, char** out_json);

/* ---- GKLS generators --------------------------------------------------- */

/* Wire format: {"n":int, "H":matrix, "jumps":[matrix...]}; jump traces are
 * stripped at construction. */
RFUNC_API rf_status rf_generator_from_json(const char* json_text, rf_generator** out);
RFUNC_API rf_status rf_generator_random(int n, int num_jumps, uint64_t seed,
                                        rf_generator** out);
RFUNC_API rf_status rf_generator_to_json(const rf_generator* gen, char** out_json);
RFUNC_API void rf_generator_free(rf_generator* gen);

RFUNC_API rf_status rf_gkls_spectrum_json(const rf_generator* gen, char** out_json);
RFUNC_API rf_status rf_gkls_sum_rule(const rf_generator* gen, double* lhs, double* rhs);
/* mode: "theorem5_traceless" | "theorem5_general" | "sqrt2_legacy". */
RFUNC_API rf_status rf_gkls_audit_json(const rf_generator* gen, const char* mode,
                                       const char* id, char** out_json);

RFUNC_API void rf_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* RFUNC_H */
