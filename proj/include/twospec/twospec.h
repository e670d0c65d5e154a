#ifndef TWOSPEC_TWOSPEC_H
#define TWOSPEC_TWOSPEC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(TWOSPEC_BUILDING)
#    define TWOSPEC_API __declspec(dllexport)
#  else
#    define TWOSPEC_API __declspec(dllimport)
#  endif
#else
#  define TWOSPEC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Reconstruction of orthogonal-polynomial recurrences (Jacobi matrices on the
 * line, unitary pentadiagonal matrices on the circle) from two interlacing
 * zero sets. Problems and results travel as JSON documents (schema "v1").
 *
 * Every function returning ts_status records a message retrievable with
 * ts_last_error() on the calling thread when the status is not TS_OK. */

typedef struct ts_problem ts_problem;
typedef struct ts_result ts_result;

typedef enum ts_status {
  TS_OK = 0,
  TS_ERR_NULL_ARGUMENT = 1,
  TS_ERR_PARSE = 2,
  TS_ERR_INVALID_ARGUMENT = 3,
  TS_ERR_UNSUPPORTED = 4,
  TS_ERR_INTERNAL = 5
} ts_status;

/* Process exit codes carried by results. */
enum {
  TS_EXIT_VERIFIED = 0,
  TS_EXIT_USAGE = 1,
  TS_EXIT_REJECTED = 2,
  TS_EXIT_RECONSTRUCTION = 3,
  TS_EXIT_VERIFICATION = 4
};

TWOSPEC_API const char* ts_version(void);
TWOSPEC_API const char* ts_status_name(ts_status status);
/* Message of the last failure on this thread; empty string if none. */
TWOSPEC_API const char* ts_last_error(void);

/* Problems ---------------------------------------------------------------- */

TWOSPEC_API ts_status ts_problem_parse(const char* json_text, ts_problem** out);
TWOSPEC_API void ts_problem_free(ts_problem* problem);

/* "rational" | "float64" */
TWOSPEC_API ts_status ts_problem_set_arithmetic(ts_problem* problem, const char* arithmetic);
/* "strict" | "standard" | a positive tolerance such as "1e-9" */
TWOSPEC_API ts_status ts_problem_set_profile(ts_problem* problem, const char* profile);
/* "sum_all" | "coefficients" | "cover" */
TWOSPEC_API ts_status ts_problem_set_strategy(ts_problem* problem, const char* strategy);
/* key "sK" (K >= 1), value a rational such as "3" or "1/2" */
TWOSPEC_API ts_status ts_problem_set_param(ts_problem* problem, const char* key, const char* value);

/* Mathematica OPRLFamily call; free with ts_string_free. */
TWOSPEC_API ts_status ts_problem_mathematica(const ts_problem* problem, char** out);
TWOSPEC_API void ts_string_free(char* text);

/* Commands ----------------------------------------------------------------
 * TS_OK means a result document was produced; whether the input was accepted
 * and verified is reported by ts_result_exit_code. */

TWOSPEC_API ts_status ts_check(const ts_problem* problem, ts_result** out);
TWOSPEC_API ts_status ts_reconstruct(const ts_problem* problem, ts_result** out);
TWOSPEC_API ts_status ts_circuits(const ts_problem* problem, ts_result** out);

typedef struct ts_fuzz_options {
  const char* setting;    /* "real" (default when NULL) or "circle" */
  const char* arithmetic; /* "float64" (default when NULL) or "rational" */
  const char* profile;    /* "standard" (default when NULL), "strict", or a number */
  size_t n;
  size_t m;
  uint64_t count;
  uint64_t seed;
} ts_fuzz_options;

TWOSPEC_API ts_status ts_fuzz(const ts_fuzz_options* options, ts_result** out);

/* Results ----------------------------------------------------------------- */

/* JSON text with sorted keys; indent < 0 gives a single line. The pointer
 * stays valid until the next call on the same result or ts_result_free. */
TWOSPEC_API const char* ts_result_json(ts_result* result, int indent);
TWOSPEC_API int ts_result_exit_code(const ts_result* result);
TWOSPEC_API void ts_result_free(ts_result* result);

#ifdef __cplusplus
}
#endif

#endif
