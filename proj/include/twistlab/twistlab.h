#ifndef TWISTLAB_TWISTLAB_H
#define TWISTLAB_TWISTLAB_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#define TL_API __attribute__((visibility("default")))

/* Status codes double as process exit codes. */
typedef enum tl_status {
  TL_OK = 0,
  TL_USAGE = 2,        /* bad parameters */
  TL_PRECONDITION = 3, /* mathematical precondition violated, e.g. [Q,Q] != 0 */
  TL_INTERNAL = 4      /* a check failed or an internal invariant broke */
} tl_status;

typedef struct tl_session tl_session;
typedef struct tl_algebra tl_algebra;

TL_API const char* tl_version(void);

TL_API tl_session* tl_session_new(void);
TL_API void tl_session_free(tl_session* s);
/* Worker threads for parallel checks. Never changes any output. */
TL_API tl_status tl_session_set_threads(tl_session* s, unsigned threads);
/* Message for the last non-OK status on this session, "" if none. */
TL_API const char* tl_last_error(const tl_session* s);

/* Runs a command (algebra, classify, scan, cohomology, superspace, twistor,
 * selftest) with a JSON object of parameters (NULL for none). On TL_OK and on
 * TL_INTERNAL from failed checks, *out holds the report JSON; otherwise *out
 * is NULL. Free with tl_string_free. */
TL_API tl_status tl_run(tl_session* s, const char* command, const char* params_json, char** out);
/* Human-readable table for a report produced by tl_run. */
TL_API tl_status tl_render_table(tl_session* s, const char* report_json, char** out);
TL_API void tl_string_free(char* p);

/* Algebra handles; params as for the algebra command. */
TL_API tl_status tl_algebra_build(tl_session* s, const char* params_json, tl_algebra** out);
TL_API void tl_algebra_free(tl_algebra* a);
TL_API size_t tl_algebra_dim(const tl_algebra* a);
TL_API size_t tl_algebra_odd_dim(const tl_algebra* a);
TL_API tl_status tl_algebra_label(tl_session* s, const tl_algebra* a, size_t index, char** out);
/* Elements are linear combinations of basis labels, e.g. "3/2*i*α1⊗e1 + ∂z1". */
TL_API tl_status tl_algebra_bracket(tl_session* s, const tl_algebra* a, const char* x, const char* y, char** out);
TL_API tl_status tl_algebra_jacobi(tl_session* s, const tl_algebra* a, int* ok);
TL_API tl_status tl_algebra_to_json(tl_session* s, const tl_algebra* a, char** out);

#ifdef __cplusplus
}
#endif

#endif
