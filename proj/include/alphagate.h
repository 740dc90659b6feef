/* C interface to the alphagate multiple-testing inference library.
 *
 * All functions return ag_status; out-parameters are written only on AG_OK.
 * Strings returned through char** out-parameters are heap-allocated and must
 * be released with ag_string_free(). ag_last_error() returns a thread-local
 * description of the most recent failure on the calling thread.
 */
#ifndef ALPHAGATE_H
#define ALPHAGATE_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define AG_API __declspec(dllexport)
#else
#define AG_API __attribute__((visibility("default")))
#endif

typedef enum ag_status {
  AG_OK = 0,
  AG_ERR_ARGUMENT = 1,       /* null pointer or out-of-domain numeric input */
  AG_ERR_PARSE = 2,          /* malformed document */
  AG_ERR_VALIDATION = 3,     /* well-formed plan violating an invariant */
  AG_ERR_MISSING_PVALUE = 4, /* decision needs a p-value the plan lacks */
  AG_ERR_UNKNOWN_CASE = 5,   /* unknown casebook id */
  AG_ERR_INTERNAL = 6
} ag_status;

/* Opaque handle to a parsed, validated testing plan. */
typedef struct ag_plan ag_plan;

AG_API const char* ag_version(void);
AG_API const char* ag_status_name(ag_status status);

/* Thread-local message for the last failing call on this thread; empty string
 * if the last call succeeded. The pointer stays valid until the next ag_*
 * call on the same thread. */
AG_API const char* ag_last_error(void);

AG_API void ag_string_free(char* s);

/* ---- analytic error rates ---------------------------------------------- */

AG_API ag_status ag_fwer_independent(double alpha_constituent, long k, double* out);
AG_API ag_status ag_pfer(double alpha_constituent, long k, double* out);
AG_API ag_status ag_sidak_adjust(double alpha_joint, long k, double* out);
AG_API ag_status ag_bonferroni_adjust(double alpha_joint, long k, double* out);
AG_API ag_status ag_analytic_power(double delta, double alpha, double* out);

/* ---- testing plans ------------------------------------------------------ */

/* Parses and validates a plan document. On AG_ERR_VALIDATION the handle is
 * NOT returned; the validation messages are available via ag_last_error(). */
AG_API ag_status ag_plan_parse(const char* json_text, ag_plan** out_plan);
AG_API void ag_plan_free(ag_plan* plan);

/* Canonical serialization of the plan. */
AG_API ag_status ag_plan_emit(const ag_plan* plan, char** out_json);

/* basis: "joint" | "individual" | "hybrid" | "all". "all" yields a
 * reclassification report per family; the others a decision per family. */
AG_API ag_status ag_plan_decide(const ag_plan* plan, const char* basis, char** out_json);

AG_API ag_status ag_plan_lint(const ag_plan* plan, char** out_json);

/* ---- Monte Carlo -------------------------------------------------------- */

/* config_json keys: k (required), effect_sizes, rho, policy {kind, alpha},
 * nominal_alpha, replications, seed, threads. Identical configs (including
 * seed) produce byte-identical reports at any thread count. */
AG_API ag_status ag_simulate(const char* config_json, char** out_json);

/* ---- casebook ----------------------------------------------------------- */

AG_API ag_status ag_case_list(char** out_json);
AG_API ag_status ag_case_run(const char* case_id, char** out_json);

#ifdef __cplusplus
}
#endif

#endif
